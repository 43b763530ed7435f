#include <benchmark/benchmark.h>

#include "reflquot/lp.hpp"
#include "reflquot/named_types.hpp"
#include "reflquot/theoremcheck.hpp"

using namespace reflquot;

namespace {

void BM_GenerateGroup(benchmark::State& state) {
  const RootDatum d = named_root_datum('B', static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generate(d).order());
}
BENCHMARK(BM_GenerateGroup)->DenseRange(2, 4);

void BM_Psi(benchmark::State& state) {
  const RootDatum d = named_root_datum("A3");
  const Group g = generate(d);
  const auto b = static_cast<std::int64_t>(state.range(0));
  const WeightPoint u{RationalVector(4), {b, 1, b}};
  for (auto _ : state) benchmark::DoNotOptimize(psi(d, g, u).size());
}
BENCHMARK(BM_Psi)->DenseRange(1, 3);

void BM_PsiInverse(benchmark::State& state) {
  const RootDatum d = named_root_datum("B3");
  const Group g = generate(d);
  InvariantCharacter h;
  h.add_term(WeightPoint{RationalVector(3), {2, 1, 2}}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(psi_inverse(d, g, h).size());
}
BENCHMARK(BM_PsiInverse);

void BM_HullMembership(benchmark::State& state) {
  const RootDatum d = named_root_datum("B3");
  const Group g = generate(d);
  const RationalVector u = reconstruct(d, WeightPoint{RationalVector(3), {2, 1, 1}});
  const RationalVector v = reconstruct(d, WeightPoint{RationalVector(3), {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(hull_membership(d, g, u, v));
}
BENCHMARK(BM_HullMembership);

void BM_LatticePoints(benchmark::State& state) {
  std::vector<RationalVector> verts;
  std::vector<long> p{1, 2, 3, 4};
  do verts.push_back(RationalVector::from_ints({p[0], p[1], p[2], p[3]}));
  while (std::next_permutation(p.begin(), p.end()));
  const LatticePolytope perm(verts, Lattice::standard(4));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(perm, state.range(0)).size());
}
BENCHMARK(BM_LatticePoints)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

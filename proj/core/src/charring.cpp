#include "reflquot/charring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace reflquot {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

namespace {

using LambdaCoords = std::vector<std::int64_t>;

struct LambdaHash {
  std::size_t operator()(const LambdaCoords& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

using SparsePoly = std::unordered_map<LambdaCoords, Coefficient, LambdaHash>;

template <class Terms>
void add_into(Terms& terms, const WeightPoint& p, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(p, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

LambdaCoords apply_weight_action(const std::vector<std::vector<std::int64_t>>& m, const LambdaCoords& b) {
  LambdaCoords out(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i] += m[i][j] * b[j];
  return out;
}

std::vector<LambdaCoords> lambda_orbit(const Group& group, const LambdaCoords& b) {
  std::vector<LambdaCoords> pts;
  pts.reserve(group.order());
  for (std::size_t k = 0; k < group.order(); ++k) pts.push_back(apply_weight_action(group.weight_action(k), b));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void require_dominant(const RootDatum& datum, const WeightPoint& u, const char* where) {
  if (u.lambda.size() != datum.rank() || u.z.size() != datum.dim())
    throw DimensionError(std::string(where) + ": weight point shape does not match datum");
  if (!u.is_dominant()) throw CharacterError(std::string(where) + ": weight point is not dominant");
}

SparsePoly multiply(const SparsePoly& a, const std::vector<LambdaCoords>& orbit_pts) {
  SparsePoly out;
  out.reserve(a.size() * orbit_pts.size());
  for (const auto& [p, c] : a) {
    for (const auto& q : orbit_pts) {
      LambdaCoords s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      auto [it, inserted] = out.try_emplace(std::move(s), c);
      if (!inserted) it->second = checked_add(it->second, c);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string format_lambda_label(const RootDatum& datum, const WeightPoint& p) {
  std::ostringstream os;
  bool any = false;
  if (!p.z.is_zero()) {
    os << p.z.to_string();
    any = true;
  }
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const auto b = p.lambda[i];
    if (b == 0) continue;
    if (b < 0) {
      os << '-';
    } else if (any) {
      os << '+';
    }
    if (b != 1 && b != -1) os << (b < 0 ? -b : b);
    os << "λ" << (i + 1);
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

template <class Terms, class Label>
std::string format_terms(const Terms& terms, const std::string& symbol, Label label) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Coefficient mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    const std::string l = label(key);
    os << symbol << '^' << (l == "0" ? l : "{" + l + "}");
    first = false;
  }
  return os.str();
}

// Terms ordered by descending height, then ascending key.
template <class Terms>
std::vector<std::pair<WeightPoint, Coefficient>> by_height(const RootDatum& datum, const Terms& terms) {
  std::vector<std::pair<Rational, std::pair<WeightPoint, Coefficient>>> rows;
  for (const auto& [p, c] : terms) rows.push_back({height(datum, p), {p, c}});
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<WeightPoint, Coefficient>> out;
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

}  // namespace

Character Character::monomial(WeightPoint p, Coefficient c) {
  Character f;
  f.add_term(p, c);
  return f;
}

Coefficient Character::coefficient(const WeightPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add_term(const WeightPoint& p, Coefficient c) { add_into(terms_, p, c); }

Character& Character::operator+=(const Character& o) {
  for (const auto& [p, c] : o.terms_) add_into(terms_, p, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [p, c] : o.terms_) add_into(terms_, p, checked_mul(c, -1));
  return *this;
}

Character& Character::operator*=(Coefficient s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c = checked_mul(c, s);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) {
      if (p.lambda.size() != q.lambda.size()) throw DimensionError("character product: rank mismatch");
      WeightPoint s{p.z + q.z, p.lambda};
      for (std::size_t i = 0; i < s.lambda.size(); ++i) s.lambda[i] = checked_add(s.lambda[i], q.lambda[i]);
      out.add_term(s, checked_mul(c, d));
    }
  return out;
}

Coefficient InvariantCharacter::coefficient(const WeightPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void InvariantCharacter::add_term(const WeightPoint& p, Coefficient c) {
  if (!p.is_dominant()) throw CharacterError("orbit-basis key must be dominant");
  add_into(terms_, p, c);
}

InvariantCharacter& InvariantCharacter::operator+=(const InvariantCharacter& o) {
  for (const auto& [p, c] : o.terms_) add_into(terms_, p, c);
  return *this;
}

InvariantCharacter& InvariantCharacter::operator-=(const InvariantCharacter& o) {
  for (const auto& [p, c] : o.terms_) add_into(terms_, p, checked_mul(c, -1));
  return *this;
}

InvariantCharacter& InvariantCharacter::operator*=(Coefficient s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c = checked_mul(c, s);
  return *this;
}

Character orbit_sum(const RootDatum& datum, const Group& group, const WeightPoint& u) {
  require_dominant(datum, u, "orbit_sum");
  Character f;
  for (auto& b : lambda_orbit(group, u.lambda)) f.add_term(WeightPoint{u.z, std::move(b)}, 1);
  return f;
}

std::optional<InvariantCharacter> to_orbit_basis(const RootDatum& datum, const Group& group, const Character& f) {
  struct Tally {
    Coefficient coeff;
    std::size_t count;
  };
  std::map<WeightPoint, Tally> groups;
  for (const auto& [p, c] : f.terms()) {
    WeightPoint rep{p.z, dominant_lambda(datum, p.lambda)};
    auto [it, inserted] = groups.try_emplace(std::move(rep), Tally{c, 0});
    if (it->second.coeff != c) return std::nullopt;
    ++it->second.count;
  }
  InvariantCharacter g;
  for (const auto& [rep, tally] : groups) {
    if (lambda_orbit(group, rep.lambda).size() != tally.count) return std::nullopt;
    g.add_term(rep, tally.coeff);
  }
  return g;
}

Character expand(const RootDatum& datum, const Group& group, const InvariantCharacter& g) {
  Character f;
  for (const auto& [u, c] : g.terms()) {
    Character o = orbit_sum(datum, group, u);
    o *= c;
    f += o;
  }
  return f;
}

Character psi(const RootDatum& datum, const Group& group, const WeightPoint& u) {
  require_dominant(datum, u, "psi");
  const std::size_t r = datum.rank();
  SparsePoly acc;
  acc.emplace(LambdaCoords(r, 0), 1);
  for (std::size_t i = 0; i < r; ++i) {
    if (u.lambda[i] == 0) continue;
    LambdaCoords e(r, 0);
    e[i] = 1;
    const auto fundamental_orbit = lambda_orbit(group, e);
    for (std::int64_t k = 0; k < u.lambda[i]; ++k) acc = multiply(acc, fundamental_orbit);
  }
  Character out;
  for (auto& [b, c] : acc) out.add_term(WeightPoint{u.z, b}, c);
  return out;
}

Character psi_linear(const RootDatum& datum, const Group& group, const Character& f) {
  Character out;
  for (const auto& [u, c] : f.terms()) {
    Character term = psi(datum, group, u);
    term *= c;
    out += term;
  }
  return out;
}

Character psi_inverse(const RootDatum& datum, const Group& group, const InvariantCharacter& g) {
  InvariantCharacter rest = g;
  Character preimage;
  while (!rest.is_zero()) {
    auto top = rest.terms().begin();
    Rational top_height = height(datum, top->first);
    for (auto it = std::next(rest.terms().begin()); it != rest.terms().end(); ++it) {
      Rational h = height(datum, it->first);
      if (h > top_height || (h == top_height && top->first < it->first)) {
        top = it;
        top_height = std::move(h);
      }
    }
    const WeightPoint u = top->first;
    const Coefficient a = top->second;
    preimage.add_term(u, a);
    auto image = to_orbit_basis(datum, group, psi(datum, group, u));
    if (!image) throw std::logic_error("psi produced a non-invariant character");
    *image *= a;
    rest -= *image;
  }
  return preimage;
}

SupportCheck support_check(const RootDatum& datum, const Group& group, const WeightPoint& u) {
  SupportCheck out;
  auto image = to_orbit_basis(datum, group, psi(datum, group, u));
  if (!image) {
    out.counterexample = u;
    return out;
  }
  out.expansion = *image;
  out.max_coeff_one = image->coefficient(u) == 1;
  out.all_below = true;
  out.delta_integrality = true;
  const RationalVector top = reconstruct(datum, u);
  for (const auto& [v, c] : image->terms()) {
    const auto coords = simple_root_coordinates(datum, top - reconstruct(datum, v));
    bool below = coords.has_value();
    bool integral = coords.has_value();
    if (coords) {
      for (const auto& x : *coords) {
        if (x.sign() < 0) below = false;
        if (!x.is_integer()) integral = false;
      }
    }
    out.all_below = out.all_below && below;
    out.delta_integrality = out.delta_integrality && integral;
    if ((!below || !integral) && !out.counterexample) out.counterexample = v;
  }
  if (!out.max_coeff_one && !out.counterexample) out.counterexample = u;
  return out;
}

std::vector<RationalVector> support_points(const RootDatum& datum, const Character& f) {
  std::vector<RationalVector> pts;
  pts.reserve(f.size());
  for (const auto& [p, c] : f.terms()) pts.push_back(reconstruct(datum, p));
  return pts;
}

std::string format_ambient(const RootDatum& datum, const Character& f) {
  auto rows = by_height(datum, f.terms());
  return format_terms(rows, "χ", [&](const WeightPoint& p) {
    const RationalVector v = reconstruct(datum, p);
    return v.is_zero() ? std::string("0") : v.to_string();
  });
}

std::string format_weights(const RootDatum& datum, const Character& f) {
  auto rows = by_height(datum, f.terms());
  return format_terms(rows, "χ", [&](const WeightPoint& p) { return format_lambda_label(datum, p); });
}

std::string format_orbit(const RootDatum& datum, const InvariantCharacter& g) {
  auto rows = by_height(datum, g.terms());
  return format_terms(rows, "χ̲", [&](const WeightPoint& p) { return format_lambda_label(datum, p); });
}

}  // namespace reflquot

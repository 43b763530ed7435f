#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reflquot/linalg.hpp"
#include "reflquot/rootsys.hpp"

namespace reflquot {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupElement {
  RationalMatrix matrix;       // action on ambient coordinates
  std::vector<int> word;       // simple-reflection indices, rightmost applied first; diagnostic only

  RationalVector apply(const RationalVector& v) const { return matrix * v; }
};

/// Finite reflection group generated by the simple reflections of a root datum.
class Group {
 public:
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const GroupElement& identity() const { return elements_.front(); }

  /// Integer matrix of w acting on fundamental-weight coordinates, for w = elements()[index].
  const std::vector<std::vector<std::int64_t>>& weight_action(std::size_t index) const {
    return weight_actions_[index];
  }

  /// Index of the element with the given matrix, or order() if absent.
  std::size_t find(const RationalMatrix& m) const;

 private:
  friend Group generate(const RootDatum&, std::size_t);
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::vector<std::vector<std::vector<std::int64_t>>> weight_actions_;
  std::map<RationalMatrix, std::size_t> index_;
};

inline constexpr std::size_t kDefaultMaxOrder = 2'000'000;

/// Matrix of the reflection s_alpha in ambient coordinates.
RationalMatrix reflection_matrix(const BilinearForm& form, const RationalVector& alpha);

/// Breadth-first closure of the simple reflections. Throws GroupError if a generator fails
/// to preserve the lattice or if the order would exceed max_order.
Group generate(const RootDatum& datum, std::size_t max_order = kDefaultMaxOrder);

/// Sorted, duplicate-free orbit W v.
std::vector<RationalVector> orbit(const Group& group, const RationalVector& v);

struct DominantRepresentative {
  RationalVector rep;
  GroupElement witness;  // witness.apply(v) == rep
};

/// Ascends v into D by reflecting in any simple root with negative pairing.
DominantRepresentative dominant_representative(const RootDatum& datum, const Group& group,
                                               const RationalVector& v);

/// Fundamental-weight coordinate version of the ascent; returns the dominant coordinates.
std::vector<std::int64_t> dominant_lambda(const RootDatum& datum, std::vector<std::int64_t> b);

/// <u,v>' = sum_w <wu, wv>.
BilinearForm average_form(const Group& group, const BilinearForm& form);

bool is_orthogonal(const GroupElement& g, const BilinearForm& form);
bool preserves(const GroupElement& g, const Lattice& lattice);
bool preserves(const Group& group, const Lattice& lattice);
/// Each generator permutes the vertex set.
bool preserves(const GroupElement& g, std::span<const RationalVector> vertices);
bool preserves(const Group& group, std::span<const RationalVector> vertices);

}  // namespace reflquot

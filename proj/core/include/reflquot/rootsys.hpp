#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflquot/linalg.hpp"

namespace reflquot {

class Group;

/// Raised when a root datum cannot be built or violates one of its invariants.
class RootDatumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full-rank lattice M in V, given by a basis of ambient vectors.
class Lattice {
 public:
  explicit Lattice(std::vector<RationalVector> basis);
  static Lattice standard(std::size_t dim);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  /// Coordinates of v in the lattice basis.
  RationalVector coordinates(const RationalVector& v) const;
  RationalVector from_coordinates(const RationalVector& c) const;
  bool contains(const RationalVector& v) const { return coordinates(v).is_integral(); }

  /// basis as columns, and its inverse
  const RationalMatrix& basis_matrix() const { return basis_matrix_; }
  const RationalMatrix& inverse_basis_matrix() const { return inverse_; }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<RationalVector> basis_;
  RationalMatrix basis_matrix_;
  RationalMatrix inverse_;
};

/// A point of the weight group, split as z + sum_i b_i lambda_i with z in Z.
struct WeightPoint {
  RationalVector z;
  std::vector<std::int64_t> lambda;

  bool is_dominant() const;
  friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
  friend auto operator<=>(const WeightPoint& a, const WeightPoint& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
};

/// Simple roots adapted to a lattice, with the derived root system and fundamental weights.
///
/// Built only through adapt_simple_system, which validates every invariant:
/// each simple root is primitive in M, the fundamental weights are dual to the simple
/// coroots, and M lies inside the weight group.
class RootDatum {
 public:
  const BilinearForm& form() const { return form_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t dim() const { return form_.dim(); }
  std::size_t rank() const { return simple_roots_.size(); }

  const std::vector<RationalVector>& simple_roots() const { return simple_roots_; }
  const std::vector<RationalVector>& all_roots() const { return all_roots_; }
  const std::vector<RationalVector>& fundamental_weights() const { return weights_; }
  /// Z-basis of M ∩ Z, where Z is the common orthogonal complement of the simple roots.
  const std::vector<RationalVector>& z_basis() const { return z_basis_; }

  /// cartan()[j][i] = 2<alpha_j, alpha_i>/<alpha_i, alpha_i>, so alpha_j = sum_i cartan[j][i] lambda_i.
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  /// Sum of the fundamental weights.
  const RationalVector& rho() const { return rho_; }
  /// <lambda_i, rho>
  const std::vector<Rational>& weight_heights() const { return weight_heights_; }

  /// 2<v, alpha_i>/<alpha_i, alpha_i>
  Rational coroot_pairing(const RationalVector& v, std::size_t i) const;

  /// Label such as "A2"; empty for explicit input.
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  friend RootDatum adapt_simple_system(const BilinearForm&, const Lattice&,
                                       const std::vector<RationalVector>&);
  RootDatum(BilinearForm form, Lattice lattice) : form_(std::move(form)), lattice_(std::move(lattice)) {}

  BilinearForm form_;
  Lattice lattice_;
  std::vector<RationalVector> simple_roots_;
  std::vector<RationalVector> all_roots_;
  std::vector<RationalVector> weights_;
  std::vector<RationalVector> z_basis_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<Rational> root_norms_;
  RationalVector rho_;
  std::vector<Rational> weight_heights_;
  std::string name_;
};

/// s_alpha(v) = v - 2<v,alpha>/<alpha,alpha> alpha. Throws std::invalid_argument for alpha = 0.
RationalVector reflect(const BilinearForm& form, const RationalVector& alpha, const RationalVector& v);

/// Rescales each raw root to the primitive lattice vector on its ray and derives the datum.
/// Throws RootDatumError on dependent roots, a root line missing the lattice, or M not in Λ.
RootDatum adapt_simple_system(const BilinearForm& form, const Lattice& lattice,
                              const std::vector<RationalVector>& raw_simple_roots);

/// Decomposes v into Z-part and fundamental-weight coordinates; nullopt when v is not in Λ.
std::optional<WeightPoint> decompose(const RootDatum& datum, const RationalVector& v);
RationalVector reconstruct(const RootDatum& datum, const WeightPoint& p);

/// Coordinates of d in the simple roots, or nullopt if d is not in their span.
std::optional<RationalVector> simple_root_coordinates(const RootDatum& datum, const RationalVector& d);

/// u <= v in the dominance order: v - u is a non-negative real combination of simple roots.
bool dominance_leq(const RootDatum& datum, const RationalVector& u, const RationalVector& v);

bool in_fundamental_domain(const RootDatum& datum, const RationalVector& v);

/// Decides v ∈ conv(W u) by linear programming over the orbit. Both points must lie in D.
bool hull_membership(const RootDatum& datum, const Group& group, const RationalVector& u,
                     const RationalVector& v);

/// <v, rho>; strictly increasing along the dominance order.
Rational height(const RootDatum& datum, const RationalVector& v);
Rational height(const RootDatum& datum, const WeightPoint& p);

}  // namespace reflquot

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflquot/rootsys.hpp"
#include "reflquot/weylgroup.hpp"

namespace reflquot {

class CharacterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Coefficient = std::int64_t;

/// Checked integer arithmetic; throws std::overflow_error.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// Element of Z[Λ]: a finite integer combination of symbols chi^p. Zero coefficients are never stored.
class Character {
 public:
  using Terms = std::map<WeightPoint, Coefficient>;

  Character() = default;
  static Character monomial(WeightPoint p, Coefficient c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const WeightPoint& p) const;

  void add_term(const WeightPoint& p, Coefficient c);

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(Coefficient s);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Terms terms_;
};

/// Element of Z[Λ]^W in the orbit-sum basis: keys are dominant weight points u,
/// each standing for the orbit sum of chi over W u.
class InvariantCharacter {
 public:
  using Terms = std::map<WeightPoint, Coefficient>;

  InvariantCharacter() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const WeightPoint& p) const;

  /// Throws CharacterError for a non-dominant key.
  void add_term(const WeightPoint& p, Coefficient c);

  InvariantCharacter& operator+=(const InvariantCharacter& o);
  InvariantCharacter& operator-=(const InvariantCharacter& o);
  InvariantCharacter& operator*=(Coefficient s);

  friend bool operator==(const InvariantCharacter&, const InvariantCharacter&) = default;

 private:
  Terms terms_;
};

/// Sum of chi^v over the orbit W u.
Character orbit_sum(const RootDatum& datum, const Group& group, const WeightPoint& u);

/// Regroups an invariant character by orbit; nullopt if it is not W-invariant.
std::optional<InvariantCharacter> to_orbit_basis(const RootDatum& datum, const Group& group, const Character& f);

/// Expands an orbit-basis character back into monomials.
Character expand(const RootDatum& datum, const Group& group, const InvariantCharacter& g);

/// Psi(chi^u) = chi^z * prod_i (orbit sum of lambda_i)^{b_i}.
Character psi(const RootDatum& datum, const Group& group, const WeightPoint& u);

/// Linear extension of psi; every term of f must be dominant.
Character psi_linear(const RootDatum& datum, const Group& group, const Character& f);

/// Preimage under psi by triangular elimination in descending height.
Character psi_inverse(const RootDatum& datum, const Group& group, const InvariantCharacter& g);

struct SupportCheck {
  bool max_coeff_one = false;       // orbit sum of u has coefficient 1 in psi(chi^u)
  bool all_below = false;           // u - v is a non-negative combination of simple roots
  bool delta_integrality = false;   // ... with integer coefficients
  InvariantCharacter expansion;     // psi(chi^u) in the orbit basis
  std::optional<WeightPoint> counterexample;

  bool ok() const { return max_coeff_one && all_below && delta_integrality; }
};

SupportCheck support_check(const RootDatum& datum, const Group& group, const WeightPoint& u);

/// Ambient point of every term.
std::vector<RationalVector> support_points(const RootDatum& datum, const Character& f);

/// Human-readable rendering, e.g. "χ^{(1,3)} + 2χ^{(2,2)} + χ^{(3,1)}", terms by descending height.
std::string format_ambient(const RootDatum& datum, const Character& f);
/// Weight-coordinate rendering, e.g. "χ^{2λ1} - 2χ^0".
std::string format_weights(const RootDatum& datum, const Character& f);
/// Orbit-sum rendering, e.g. "χ̲^{2λ1} + 2χ̲^0".
std::string format_orbit(const RootDatum& datum, const InvariantCharacter& g);

}  // namespace reflquot

#pragma once

#include <string>
#include <string_view>

#include "reflquot/rootsys.hpp"

namespace reflquot {

/// Standard realizations of the crystallographic Cartan types.
///
///   A_n  in Z^{n+1}, simple roots e_{i+1} - e_i, so D is the cone of ascending coordinates.
///   B_n  in Z^n, simple roots e_i - e_{i+1} and e_n.
///   C_n  in R^n with the even-sum lattice {x in Z^n : sum x even}, simple roots e_i - e_{i+1} and 2 e_n.
///        (On Z^n the long root 2e_n is not primitive and the datum would collapse to B_n.)
///   D_n  in Z^n (n >= 2), simple roots e_i - e_{i+1} and e_{n-1} + e_n.
///   G_2  in R^2 in simple-root coordinates with Gram matrix [[2,-3],[-3,6]] and the root lattice.
///
/// Throws std::invalid_argument for unknown types or ranks out of range.
RootDatum named_root_datum(char type, int rank);

/// Accepts "A2", "b3", "G2", ...
RootDatum named_root_datum(std::string_view name);

}  // namespace reflquot

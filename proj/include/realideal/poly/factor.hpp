#pragma once

#include <utility>
#include <vector>

#include "realideal/poly/mpoly.hpp"

namespace realideal {

inline constexpr int kMultiFactorDegreeCap = 12;

/// Irreducible factors over the rationals with multiplicities, each primitive
/// with positive leading coefficient, sorted by (total degree, rendering).
/// Squarefree decomposition, content and monomial splitting, then Kronecker
/// substitution to one variable with recombination of the univariate factors.
/// Throws UnsupportedScope above the total degree cap.
std::vector<std::pair<MPoly, int>> factor(const MPoly& p, int degree_cap = kMultiFactorDegreeCap);

/// True when p is irreducible over the rationals (constants are not).
bool is_irreducible(const MPoly& p);

}  // namespace realideal

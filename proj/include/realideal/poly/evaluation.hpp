#pragma once

#include <vector>

#include "realideal/numeric/algebraic.hpp"
#include "realideal/poly/mpoly.hpp"

namespace realideal {

using Point = std::vector<AlgebraicNumber>;

/// A polynomial vanished identically where a nonzero univariate was needed.
class NonDelineable : public Error {
 public:
  NonDelineable(const std::string& what, MPoly poly) : Error(what), poly_(std::move(poly)) {}
  [[nodiscard]] const MPoly& poly() const { return poly_; }

 private:
  MPoly poly_;
};

/// Interval enclosure of p over a box (one interval per variable).
Interval interval_eval(const MPoly& p, const std::vector<Interval>& box);

inline constexpr int kIntervalBisections = 256;

/// Exact sign of p at a point. The point covers variables 0..point.size()-1;
/// later variables must not occur in p. Interval refinement first, then an
/// exact decision through the minimal polynomial of p(point) obtained by
/// iterated resultants.
int sign_at(const MPoly& p, const Point& point);

/// Real roots in `var` of p(point, var), where the point fixes variables
/// 0..var-1 and no variable after var occurs. Throws NonDelineable when
/// p(point, var) vanishes identically.
std::vector<AlgebraicNumber> roots_over(const MPoly& p, const Point& point, int var);

/// Substitutes the rational coordinates of the point.
MPoly substitute_rational(const MPoly& p, const Point& point);

/// Univariate polynomial in `into` whose roots include every value p(point),
/// built by resultants against the defining polynomials of the irrational coordinates.
UniPoly norm_polynomial(const MPoly& p, const Point& point, int into);

}  // namespace realideal

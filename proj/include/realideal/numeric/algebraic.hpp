#pragma once

#include <string>
#include <vector>

#include "realideal/numeric/rational.hpp"
#include "realideal/numeric/unipoly.hpp"

namespace realideal {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit Interval(const Rational& point) : lo(point), hi(point) {}

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  /// +1 / -1 when the interval excludes zero, 0 otherwise.
  [[nodiscard]] int sign() const;

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& c, const Interval& a);
};

Interval pow(const Interval& a, unsigned e);

/// A real algebraic number: the unique root of a squarefree rational
/// polynomial inside an isolating interval. Rational numbers are stored with
/// lo == hi and a linear defining polynomial. Values are immutable; refinement
/// returns a new number.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  explicit AlgebraicNumber(const Rational& value);
  /// `defining` must be squarefree with exactly one root in the open interval
  /// (lo, hi) and nonzero at both endpoints.
  AlgebraicNumber(UniPoly defining, Rational lo, Rational hi);

  [[nodiscard]] bool is_rational() const { return lo_ == hi_; }
  [[nodiscard]] const Rational& rational_value() const;
  [[nodiscard]] const UniPoly& defining() const { return defining_; }
  [[nodiscard]] const Rational& lo() const { return lo_; }
  [[nodiscard]] const Rational& hi() const { return hi_; }
  [[nodiscard]] Interval interval() const { return {lo_, hi_}; }
  [[nodiscard]] Rational width() const { return hi_ - lo_; }

  /// One bisection step; the result has half the width or is exact.
  [[nodiscard]] AlgebraicNumber refine() const;
  [[nodiscard]] AlgebraicNumber refine_to(const Rational& width) const;
  [[nodiscard]] double approx() const;
  /// Six-digit decimal rendering plus exact data when irrational.
  [[nodiscard]] std::string to_string(int digits = 6) const;

  /// Exact comparison (-1, 0, +1).
  friend int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

  /// Sign of a rational univariate polynomial at this number, exact.
  [[nodiscard]] int sign_of(const UniPoly& p) const;

 private:
  UniPoly defining_;
  Rational lo_;
  Rational hi_;
};

/// Real roots in increasing order; rational roots are exact (lo == hi).
/// Defining polynomials are irreducible factors of p whenever p's squarefree
/// factors fit under the factorization degree cap.
std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p);

/// Roots of several polynomials merged into one increasing list of distinct values.
std::vector<AlgebraicNumber> isolate_real_roots(const std::vector<UniPoly>& polys);

/// Rational strictly between a < b: the midpoint when both are rational,
/// otherwise the dyadic of least denominator, nearest zero.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace realideal

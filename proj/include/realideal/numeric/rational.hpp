#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace realideal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A sign could not be decided within the refinement budget.
class Undecidable : public Error {
 public:
  using Error::Error;
};

/// The request falls outside the classes of ideals the library handles.
class UnsupportedScope : public Error {
 public:
  using Error::Error;
};

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "12", "-3/4" or "0.125" exactly.
Rational parse_rational(std::string_view text);

/// "3", "-3/4".
std::string to_string(const Rational& q);

/// Decimal rendering rounded to `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

Rational pow(const Rational& q, unsigned e);
Integer pow(const Integer& z, unsigned e);

/// Smallest integer >= q.
Integer ceil(const Rational& q);
/// Largest integer <= q.
Integer floor(const Rational& q);

/// Rational number of the form a/2^k strictly between lo < hi with small k.
Rational simplest_dyadic_between(const Rational& lo, const Rational& hi);

/// Exact Gaussian rational re + im*i. Arithmetic is componentwise.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] GaussianRational conj() const { return {re, -im}; }
  [[nodiscard]] Rational norm() const { return re * re + im * im; }
  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);

}  // namespace realideal

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realideal/numeric/rational.hpp"

namespace realideal {

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// The zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, int var = 0);
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(const Rational& c, std::size_t degree, int var = 0);
  /// x - r
  static UniPoly linear_root(const Rational& r, int var = 0);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Rational& lc() const { return coeffs_.back(); }
  [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] int var() const { return var_; }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] int sign_at(const Rational& x) const { return sgn((*this)(x)); }
  [[nodiscard]] UniPoly derivative() const;
  [[nodiscard]] UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  [[nodiscard]] UniPoly primitive() const;
  /// p(-x)
  [[nodiscard]] UniPoly reflect() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string(const std::string& name = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  int var_ = 0;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned e);
/// Exact quotient; throws when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Product of the distinct irreducible factors (monic).
UniPoly squarefree_part(const UniPoly& p);
/// Yun decomposition: p = c * prod(f_i^i), returned as (f_i, i) with f_i nonconstant.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Cauchy bound: every complex root has modulus strictly below the result.
Rational root_bound(const UniPoly& p);

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
/// Distinct real roots of p in the open interval (a,b). Empty when a or b is a root.
std::optional<std::size_t> sturm_count(const UniPoly& p, const Rational& a, const Rational& b);

struct UniFactorization {
  Rational unit;
  std::vector<std::pair<UniPoly, int>> factors;
  /// Squarefree factors left unfactored because they exceeded the degree cap.
  std::vector<UniPoly> unfactored;
};

inline constexpr int kFactorDegreeCap = 32;

/// Factors over the rationals: squarefree decomposition, then Zassenhaus on each
/// squarefree part (modular factorization, Hensel lifting, recombination).
/// Factors are primitive with positive leading coefficient.
UniFactorization factor_univariate(const UniPoly& p, int degree_cap = kFactorDegreeCap);

/// Irreducible factors of a squarefree polynomial, without multiplicities.
std::vector<UniPoly> irreducible_factors(const UniPoly& p, int degree_cap = kFactorDegreeCap);

/// Pairwise coprime squarefree polynomials whose product has the same roots as the inputs.
std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& polys);

}  // namespace realideal

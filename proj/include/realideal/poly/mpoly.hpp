#pragma once

#include <string>
#include <vector>

#include "realideal/numeric/rational.hpp"
#include "realideal/numeric/unipoly.hpp"

namespace realideal {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);

enum class OrderKind { Lex, GrevLex, Block };

/// Lex and grevlex order variables x0 > x1 > ... . Block(k) compares the
/// first k variables by grevlex and breaks ties with grevlex on the rest,
/// which makes it an elimination order for x0..x(k-1).
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  int split = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder block(int k) { return {OrderKind::Block, k}; }

  /// -1, 0, +1 as a is smaller, equal, larger than b.
  [[nodiscard]] int compare(const Exponent& a, const Exponent& b) const;
  [[nodiscard]] std::string name() const;
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != OrderKind::Block || a.split == b.split);
  }
};

struct Term {
  Exponent exp;
  Rational coeff;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Terms are kept sorted from largest to smallest monomial under
/// the polynomial's order, with no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars, MonomialOrder order = MonomialOrder::grevlex()) : nvars_(nvars), order_(order) {}
  MPoly(int nvars, std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex());

  static MPoly constant(int nvars, const Rational& c, MonomialOrder order = MonomialOrder::grevlex());
  static MPoly variable(int nvars, int var, MonomialOrder order = MonomialOrder::grevlex());
  static MPoly monomial(int nvars, const Exponent& e, const Rational& c,
                        MonomialOrder order = MonomialOrder::grevlex());

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term value; throws if not constant.
  [[nodiscard]] Rational constant_value() const;

  [[nodiscard]] const Term& lt() const;
  [[nodiscard]] const Exponent& lm() const { return lt().exp; }
  [[nodiscard]] const Rational& lc() const { return lt().coeff; }

  [[nodiscard]] int total_degree() const;
  [[nodiscard]] int degree(int var) const;
  [[nodiscard]] bool involves(int var) const { return degree(var) > 0; }
  /// Indices of variables that occur.
  [[nodiscard]] std::vector<int> support() const;

  [[nodiscard]] MPoly with_order(const MonomialOrder& order) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  [[nodiscard]] MPoly mul_term(const Exponent& e, const Rational& c) const;
  /// All terms but the leading one.
  [[nodiscard]] MPoly tail() const;

  /// Formal partial derivative.
  [[nodiscard]] MPoly derivative(int var) const;
  [[nodiscard]] MPoly substitute(int var, const Rational& value) const;
  [[nodiscard]] MPoly substitute(int var, const MPoly& value) const;
  [[nodiscard]] Rational evaluate(const std::vector<Rational>& point) const;
  /// Variable v of this polynomial becomes variable map[v] of a ring with
  /// `nvars` variables; map[v] < 0 is allowed only for unused variables.
  [[nodiscard]] MPoly remap(const std::vector<int>& map, int nvars) const;

  /// Coefficients with respect to `var`, index = power; entries do not involve var.
  [[nodiscard]] std::vector<MPoly> coefficients(int var) const;
  static MPoly from_coefficients(const std::vector<MPoly>& coeffs, int var);

  /// Integer coefficients with gcd 1 and positive leading coefficient.
  [[nodiscard]] MPoly primitive() const;
  [[nodiscard]] MPoly monic() const;

  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;
  /// Rendering with default names x1, x2, ...
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  int nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned e);

std::vector<std::string> default_names(int nvars);

/// Univariate view of a polynomial whose only variable is `var`.
UniPoly to_univariate(const MPoly& p, int var);
MPoly from_univariate(const UniPoly& p, int var, int nvars, MonomialOrder order = MonomialOrder::grevlex());

/// Quotient when b divides a exactly; throws InvalidInput otherwise.
MPoly exact_divide(const MPoly& a, const MPoly& b);
bool try_divide(const MPoly& a, const MPoly& b, MPoly& quotient);

/// Greatest common divisor normalized by primitive(); gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);
/// Product of the distinct irreducible factors, primitive.
MPoly squarefree_part(const MPoly& p);
/// p = prod f_i^i with f_i squarefree, pairwise coprime, primitive; constants dropped.
std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in `var`.
MPoly prem(const MPoly& a, const MPoly& b, int var);

/// Determinant of the Sylvester matrix of p and q in `var`.
MPoly resultant(const MPoly& p, const MPoly& q, int var);

/// Principal subresultant coefficients psc_0 .. psc_{deg q} of p and q in `var`
/// (deg_var p >= deg_var q). psc_0 is the resultant.
std::vector<MPoly> subresultant_chain(const MPoly& p, const MPoly& q, int var);

/// Rectangular matrix of polynomials.
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<MPoly> entries;

  [[nodiscard]] const MPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
  MPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
  /// Rational matrix at a rational point.
  [[nodiscard]] std::vector<std::vector<Rational>> evaluate(const std::vector<Rational>& point) const;
};

/// (i, j) entry is d gens[i] / d x_vars[j].
PolyMatrix jacobian(const std::vector<MPoly>& gens, const std::vector<int>& vars);
PolyMatrix jacobian(const std::vector<MPoly>& gens);

/// Rank of a rational matrix by exact elimination.
int rank(std::vector<std::vector<Rational>> m);
Rational determinant(std::vector<std::vector<Rational>> m);

/// p(T x): variable i is replaced by sum_j T[i][j] x_j. Throws on singular T.
MPoly linear_change(const MPoly& p, const std::vector<std::vector<Integer>>& t);
/// Inverse of an invertible integer matrix, as rationals.
std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Integer>>& t);
MPoly linear_change(const MPoly& p, const std::vector<std::vector<Rational>>& t);

/// Polynomial with Gaussian-rational coefficients stored as re + i*im.
struct ComplexPoly {
  MPoly re;
  MPoly im;

  [[nodiscard]] ComplexPoly conj() const { return {re, -im}; }
  [[nodiscard]] bool is_real() const { return im.is_zero(); }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) { return {a.re + b.re, a.im + b.im}; }
  friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.re == b.re && a.im == b.im; }
  /// "x + i*y" style rendering.
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;
};

}  // namespace realideal

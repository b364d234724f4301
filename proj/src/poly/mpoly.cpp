#include "realideal/poly/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace realideal {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

namespace {

int grevlex_range(const Exponent& a, const Exponent& b, std::size_t from, std::size_t to) {
  int da = 0, db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = to; i-- > from;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::GrevLex:
      return grevlex_range(a, b, 0, a.size());
    case OrderKind::Block: {
      std::size_t k = std::min(static_cast<std::size_t>(split), a.size());
      int c = grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Block:
      return "block(" + std::to_string(split) + ")";
  }
  return "?";
}

MPoly::MPoly(int nvars, std::vector<Term> terms, MonomialOrder order)
    : nvars_(nvars), order_(order), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (static_cast<int>(t.exp.size()) != nvars_) throw InvalidInput("exponent length does not match variable count");
  normalize();
}

MPoly MPoly::constant(int nvars, const Rational& c, MonomialOrder order) {
  return monomial(nvars, Exponent(static_cast<std::size_t>(nvars), 0), c, order);
}

MPoly MPoly::variable(int nvars, int var, MonomialOrder order) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(var)) = 1;
  return monomial(nvars, e, Rational(1), order);
}

MPoly MPoly::monomial(int nvars, const Exponent& e, const Rational& c, MonomialOrder order) {
  MPoly p(nvars, order);
  if (sgn(c) != 0) p.terms_.push_back({e, c});
  return p;
}

void MPoly::normalize() {
  const MonomialOrder ord = order_;
  std::sort(terms_.begin(), terms_.end(),
            [&ord](const Term& a, const Term& b) { return ord.compare(a.exp, b.exp) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms_ = std::move(out);
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && realideal::total_degree(terms_[0].exp) == 0); }

Rational MPoly::constant_value() const {
  if (!is_constant()) throw InvalidInput("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term& MPoly::lt() const {
  if (terms_.empty()) throw InvalidInput("leading term of the zero polynomial");
  return terms_.front();
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, realideal::total_degree(t.exp));
  return d;
}

int MPoly::degree(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[static_cast<std::size_t>(var)]);
  return d;
}

std::vector<int> MPoly::support() const {
  std::vector<int> s;
  for (int v = 0; v < nvars_; ++v)
    if (involves(v)) s.push_back(v);
  return s;
}

MPoly MPoly::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  MPoly r = *this;
  r.order_ = order;
  r.normalize();
  return r;
}

namespace {

void check_compatible(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("polynomials live in rings with different variable counts");
}

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const MonomialOrder& ord, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : (j == b.size() ? 1 : ord.compare(a[i].exp, b[j].exp));
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].exp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(*this, o);
  if (!(o.order_ == order_)) return *this += o.with_order(order_);
  terms_ = merge(terms_, o.terms_, order_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(*this, o);
  if (!(o.order_ == order_)) return *this -= o.with_order(order_);
  terms_ = merge(terms_, o.terms_, order_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_compatible(a, b);
  MPoly r(a.nvars_, a.order_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].exp, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.with_order(a.order_).mul_term(a.terms_[0].exp, a.terms_[0].coeff);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponent e(s.exp.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.exp[k] + t.exp[k];
      r.terms_.push_back({std::move(e), s.coeff * t.coeff});
    }
  }
  r.normalize();
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (!(a.order_ == b.order_)) return a == b.with_order(a.order_);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MPoly MPoly::mul_term(const Exponent& e, const Rational& c) const {
  MPoly r(nvars_, order_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the term order
  for (const auto& t : terms_) {
    Exponent x = t.exp;
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += e[k];
    r.terms_.push_back({std::move(x), t.coeff * c});
  }
  return r;
}

MPoly MPoly::tail() const {
  MPoly r(nvars_, order_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

MPoly pow(const MPoly& p, unsigned e) {
  MPoly r = MPoly::constant(p.nvars(), Rational(1), p.order());
  MPoly b = p;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  std::vector<Term> out;
  auto v = static_cast<std::size_t>(var);
  for (const auto& t : terms_) {
    if (t.exp[v] == 0) continue;
    Term d = t;
    d.coeff *= d.exp[v];
    d.exp[v] -= 1;
    out.push_back(std::move(d));
  }
  return MPoly(nvars_, std::move(out), order_);
}

MPoly MPoly::substitute(int var, const Rational& value) const {
  std::vector<Term> out;
  auto v = static_cast<std::size_t>(var);
  for (const auto& t : terms_) {
    Term s = t;
    if (s.exp[v] > 0) {
      s.coeff *= pow(value, static_cast<unsigned>(s.exp[v]));
      s.exp[v] = 0;
    }
    out.push_back(std::move(s));
  }
  return MPoly(nvars_, std::move(out), order_);
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  auto c = coefficients(var);
  MPoly acc(nvars_, order_);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * value + c[i];
  return acc;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InvalidInput("point dimension does not match variable count");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t k = 0; k < t.exp.size(); ++k)
      if (t.exp[k] != 0) m *= pow(point[k], static_cast<unsigned>(t.exp[k]));
    acc += m;
  }
  return acc;
}

MPoly MPoly::remap(const std::vector<int>& map, int nvars) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (map[k] < 0) throw InvalidInput("remap drops a variable that occurs");
      e[static_cast<std::size_t>(map[k])] += t.exp[k];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return MPoly(nvars, std::move(out), order_);
}

std::vector<MPoly> MPoly::coefficients(int var) const {
  int d = degree(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d + 1, 0)));
  auto v = static_cast<std::size_t>(var);
  for (const auto& t : terms_) {
    Term s = t;
    int k = s.exp[v];
    s.exp[v] = 0;
    buckets[static_cast<std::size_t>(k)].push_back(std::move(s));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(nvars_, std::move(b), order_);
  return out;
}

MPoly MPoly::from_coefficients(const std::vector<MPoly>& coeffs, int var) {
  if (coeffs.empty()) throw InvalidInput("from_coefficients needs the ring; pass at least one coefficient");
  MPoly r(coeffs[0].nvars(), coeffs[0].order());
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term s = t;
      s.exp[static_cast<std::size_t>(var)] += static_cast<int>(k);
      terms.push_back(std::move(s));
    }
  }
  return MPoly(r.nvars(), std::move(terms), r.order());
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer g = 0;
  for (const auto& t : terms_) {
    Integer v = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(den, g);
  scale.canonicalize();
  if (sgn(lc()) < 0) scale = -scale;
  return *this * scale;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / lc());
}

std::vector<std::string> default_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (sgn(t.coeff) < 0) os << "-";
    } else {
      os << (sgn(t.coeff) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = realideal::total_degree(t.exp) == 0;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << realideal::to_string(mag);
      need_star = true;
    }
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      if (need_star) os << "*";
      os << names.at(k);
      if (t.exp[k] > 1) os << "^" << t.exp[k];
      need_star = true;
    }
  }
  return os.str();
}

std::string MPoly::to_string() const { return to_string(default_names(nvars_)); }

UniPoly to_univariate(const MPoly& p, int var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(var) + 1, 0)));
  for (const auto& t : p.terms()) {
    for (int k = 0; k < p.nvars(); ++k)
      if (k != var && t.exp[static_cast<std::size_t>(k)] != 0)
        throw InvalidInput("polynomial involves more than one variable");
    c[static_cast<std::size_t>(t.exp[static_cast<std::size_t>(var)])] = t.coeff;
  }
  return UniPoly(std::move(c), var);
}

MPoly from_univariate(const UniPoly& p, int var, int nvars, MonomialOrder order) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p.coeff(static_cast<std::size_t>(i))) == 0) continue;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = i;
    terms.push_back({std::move(e), p.coeff(static_cast<std::size_t>(i))});
  }
  return MPoly(nvars, std::move(terms), order);
}

std::string ComplexPoly::to_string(const std::vector<std::string>& names) const {
  if (im.is_zero()) return re.to_string(names);
  std::string ims = im.size() == 1 ? im.to_string(names) : "(" + im.to_string(names) + ")";
  if (re.is_zero()) return "i*" + ims;
  if (im.size() == 1 && sgn(im.lc()) < 0) return re.to_string(names) + " - i*" + (-im).to_string(names);
  return re.to_string(names) + " + i*" + ims;
}

}  // namespace realideal

#include "realideal/numeric/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace realideal {

UniPoly::UniPoly(std::vector<Rational> coeffs, int var) : coeffs_(std::move(coeffs)), var_(var) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree, int var) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::linear_root(const Rational& r, int var) { return UniPoly({-r, Rational(1)}, var); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(std::vector<Rational>{}, var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  Rational l = lc();
  for (auto& c : r.coeffs_) c /= l;
  return r;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / g));
  return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::reflect() const {
  UniPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UniPoly::to_string(const std::string& name) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << realideal::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << name;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UniPoly(std::vector<Rational>{}, a.var()), a};
  std::vector<Rational> q(da - db + 1);
  const Rational& l = b.lc();
  for (int i = da; i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] / l;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(q), a.var()), UniPoly(std::move(rem), a.var())};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly r(Rational(1));
  UniPoly b = p;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
  return q;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return UniPoly(Rational(p.is_zero() ? 0 : 1));
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  UniPoly a0 = p.monic();
  UniPoly b = gcd(a0, a0.derivative());
  UniPoly c = exact_div(a0, b);
  UniPoly d = exact_div(a0.derivative(), b) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
    ++i;
  }
  return out;
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.lc())));
  return m + 1;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  seq.push_back(p.derivative());
  while (!seq.back().is_zero()) {
    UniPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // positive rescaling keeps sign variations unchanged and coefficients small
    Rational l = abs(r.lc());
    std::vector<Rational> c = r.coeffs();
    for (auto& v : c) v /= l;
    seq.emplace_back(std::move(c), p.var());
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::optional<std::size_t> sturm_count(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw InvalidInput("sturm_count of the zero polynomial");
  if (!(a < b)) throw InvalidInput("sturm_count needs a < b");
  if (p.sign_at(a) == 0 || p.sign_at(b) == 0) return std::nullopt;
  auto seq = sturm_sequence(p);
  return static_cast<std::size_t>(variations(seq, a) - variations(seq, b));
}

std::vector<UniPoly> coprime_basis(const std::vector<UniPoly>& polys) {
  // Yun factors of the product of squarefree parts are pairwise coprime
  UniPoly prod(Rational(1));
  for (const auto& p : polys)
    if (p.degree() > 0) prod *= squarefree_part(p);
  std::vector<UniPoly> basis;
  for (auto& [q, m] : squarefree_decomposition(prod)) basis.push_back(q.monic());
  std::sort(basis.begin(), basis.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return basis;
}

}  // namespace realideal

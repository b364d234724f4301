#include "realideal/numeric/algebraic.hpp"

#include <algorithm>
#include <sstream>

namespace realideal {

int Interval::sign() const {
  if (sgn(lo) > 0) return 1;
  if (sgn(hi) < 0) return -1;
  return 0;
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator*(const Rational& c, const Interval& a) {
  if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

Interval pow(const Interval& a, unsigned e) {
  if (e == 0) return Interval(Rational(1));
  Rational plo = pow(a.lo, e);
  Rational phi = pow(a.hi, e);
  if (e % 2 == 1) return {plo, phi};
  if (a.contains_zero()) return {Rational(0), std::max(plo, phi)};
  return {std::min(plo, phi), std::max(plo, phi)};
}

AlgebraicNumber::AlgebraicNumber(const Rational& value)
    : defining_(UniPoly::linear_root(value)), lo_(value), hi_(value) {}

AlgebraicNumber::AlgebraicNumber(UniPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (defining_.degree() < 1) throw InvalidInput("algebraic number needs a nonconstant defining polynomial");
  if (hi_ < lo_) throw InvalidInput("algebraic number interval reversed");
  if (lo_ != hi_ && defining_.degree() == 1) {
    Rational r = -defining_.coeff(0) / defining_.coeff(1);
    lo_ = hi_ = r;
  }
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw InvalidInput("algebraic number is not rational");
  return lo_;
}

AlgebraicNumber AlgebraicNumber::refine() const {
  if (is_rational()) return *this;
  Rational mid = (lo_ + hi_) / 2;
  int sm = defining_.sign_at(mid);
  if (sm == 0) return AlgebraicNumber(mid);
  int slo = defining_.sign_at(lo_);
  if (sm == slo) return AlgebraicNumber(defining_, mid, hi_);
  return AlgebraicNumber(defining_, lo_, mid);
}

AlgebraicNumber AlgebraicNumber::refine_to(const Rational& width) const {
  AlgebraicNumber a = *this;
  while (!a.is_rational() && a.width() > width) a = a.refine();
  return a;
}

double AlgebraicNumber::approx() const {
  if (is_rational()) return lo_.get_d();
  AlgebraicNumber a = refine_to(Rational(1, 1 << 30) / (1 << 23));
  return Rational((a.lo_ + a.hi_) / 2).get_d();
}

std::string AlgebraicNumber::to_string(int digits) const {
  if (is_rational()) return realideal::to_string(lo_);
  Rational w = 1;
  for (int i = 0; i < digits + 2; ++i) w /= 10;
  AlgebraicNumber a = refine_to(w);
  std::ostringstream os;
  os << to_decimal(Rational((a.lo_ + a.hi_) / 2), digits) << " [root of " << defining_.to_string("t") << " in ("
     << realideal::to_string(lo_) << ", " << realideal::to_string(hi_) << ")]";
  return os.str();
}

int AlgebraicNumber::sign_of(const UniPoly& p) const {
  if (p.is_zero()) return 0;
  if (is_rational()) return p.sign_at(lo_);
  UniPoly g = gcd(p, defining_);
  if (g.degree() >= 1) {
    auto c = sturm_count(g, lo_, hi_);
    if (c && *c > 0) return 0;
  }
  AlgebraicNumber a = *this;
  for (;;) {
    if (a.is_rational()) return p.sign_at(a.lo_);
    if (p.sign_at(a.lo_) != 0 && p.sign_at(a.hi_) != 0) {
      auto c = sturm_count(p, a.lo_, a.hi_);
      if (c && *c == 0) return p.sign_at(a.lo_);
    }
    a = a.refine();
  }
}

namespace {

int compare_rational(const Rational& r, const AlgebraicNumber& b) {
  // r versus irrational b
  if (r <= b.lo()) return -1;
  if (r >= b.hi()) return 1;
  if (b.defining().sign_at(r) == 0) return 0;
  int sr = b.defining().sign_at(r);
  int slo = b.defining().sign_at(b.lo());
  // root lies in (r, hi) when the sign at r matches the sign at lo
  return sr == slo ? -1 : 1;
}

}  // namespace

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo_, b.lo_) < 0 ? -1 : (a.lo_ == b.lo_ ? 0 : 1);
  if (a.is_rational()) return compare_rational(a.lo_, b);
  if (b.is_rational()) return -compare_rational(b.lo_, a);
  if (a.hi_ <= b.lo_) return -1;
  if (b.hi_ <= a.lo_) return 1;
  // overlapping isolating intervals: equal iff a common factor has a root in the overlap
  UniPoly g = gcd(a.defining_, b.defining_);
  if (g.degree() >= 1) {
    Rational lo = std::max(a.lo_, b.lo_);
    Rational hi = std::min(a.hi_, b.hi_);
    // overlap endpoints come from one of the intervals, where g cannot vanish
    if (lo < hi && g.sign_at(lo) != 0 && g.sign_at(hi) != 0) {
      auto c = sturm_count(g, lo, hi);
      if (c && *c > 0) return 0;
    }
  }
  AlgebraicNumber x = a, y = b;
  for (;;) {
    x = x.refine();
    y = y.refine();
    if (x.is_rational() || y.is_rational()) return compare(x, y);
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
  }
}

namespace {

void bisect(const UniPoly& f, const std::vector<UniPoly>& seq, const Rational& a, const Rational& b, int va,
            int vb, std::vector<AlgebraicNumber>& out) {
  int count = va - vb;
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(f, a, b);
    return;
  }
  Rational m = (a + b) / 2;
  // f has no rational roots here (linear factors were split off), so f(m) != 0
  int vm = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(m);
    if (s == 0) continue;
    if (last != 0 && s != last) ++vm;
    last = s;
  }
  bisect(f, seq, a, m, va, vm, out);
  bisect(f, seq, m, b, vm, vb, out);
}

int variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void isolate_factor(const UniPoly& f, std::vector<AlgebraicNumber>& out) {
  if (f.degree() == 1) {
    out.emplace_back(Rational(-f.coeff(0) / f.coeff(1)));
    return;
  }
  auto seq = sturm_sequence(f);
  Rational bound = root_bound(f);
  Rational a = -bound, b = bound;
  bisect(f, seq, a, b, variations_at(seq, a), variations_at(seq, b), out);
}

}  // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const std::vector<UniPoly>& polys) {
  std::vector<AlgebraicNumber> roots;
  for (const auto& basis : coprime_basis(polys)) {
    // linear factors are split off even past the degree cap, so the
    // remaining factors have no rational roots
    for (const auto& f : irreducible_factors(basis)) isolate_factor(f, roots);
  }
  std::sort(roots.begin(), roots.end(), [](const AlgebraicNumber& x, const AlgebraicNumber& y) { return x < y; });
  return roots;
}

std::vector<AlgebraicNumber> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw InvalidInput("isolate_real_roots of the zero polynomial");
  return isolate_real_roots(std::vector<UniPoly>{p});
}

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (compare(a, b) >= 0) throw InvalidInput("rational_between needs a < b");
  if (a.is_rational() && b.is_rational()) return (a.rational_value() + b.rational_value()) / 2;
  // smallest power-of-two denominator first, then the numerator nearest zero
  for (Integer den = 1;; den *= 2) {
    Rational step = make_rational(1, den);
    Integer k = floor(Rational(a.refine_to(step).lo() * den));
    while (compare(AlgebraicNumber(make_rational(k, den)), a) <= 0) ++k;
    Integer m = ceil(Rational(b.refine_to(step).hi() * den));
    while (compare(AlgebraicNumber(make_rational(m, den)), b) >= 0) --m;
    if (k > m) continue;
    if (sgn(k) <= 0 && sgn(m) >= 0) return 0;
    return make_rational(sgn(k) > 0 ? k : m, den);
  }
}

}  // namespace realideal

#include "realideal/poly/evaluation.hpp"

#include <algorithm>

namespace realideal {

Interval interval_eval(const MPoly& p, const std::vector<Interval>& box) {
  Interval acc(Rational(0));
  for (const auto& t : p.terms()) {
    Interval m(t.coeff);
    for (std::size_t k = 0; k < t.exp.size(); ++k)
      if (t.exp[k] != 0) m = m * pow(box[k], static_cast<unsigned>(t.exp[k]));
    acc = acc + m;
  }
  return acc;
}

namespace {

void check_point(const MPoly& p, std::size_t dim) {
  for (int v = static_cast<int>(dim); v < p.nvars(); ++v)
    if (p.involves(v)) throw InvalidInput("polynomial involves a variable the point does not fix");
}

std::vector<int> irrational_support(const MPoly& q, const Point& point) {
  std::vector<int> vars;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (!point[i].is_rational() && q.involves(static_cast<int>(i))) vars.push_back(static_cast<int>(i));
  return vars;
}

MPoly defining_as_mpoly(const AlgebraicNumber& a, int var, int nvars) {
  return from_univariate(a.defining(), var, nvars);
}

std::vector<Interval> box_of(const Point& point, int nvars) {
  std::vector<Interval> box(static_cast<std::size_t>(nvars), Interval(Rational(0)));
  for (std::size_t i = 0; i < point.size(); ++i) box[i] = point[i].interval();
  return box;
}

// Refines the widest coordinate among `vars`.
void bisect_widest(Point& pt, const std::vector<int>& vars) {
  std::size_t best = static_cast<std::size_t>(vars.front());
  for (int v : vars)
    if (pt[static_cast<std::size_t>(v)].width() > pt[best].width()) best = static_cast<std::size_t>(v);
  pt[best] = pt[best].refine();
}

// Lower bound on the modulus of every root of a polynomial with nonzero constant term.
Rational root_lower_bound(const UniPoly& r) {
  std::vector<Rational> rev(r.coeffs().rbegin(), r.coeffs().rend());
  return 1 / root_bound(UniPoly(rev));
}

}  // namespace

MPoly substitute_rational(const MPoly& p, const Point& point) {
  MPoly q = p;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i].is_rational() && q.involves(static_cast<int>(i))) q = q.substitute(static_cast<int>(i), point[i].rational_value());
  return q;
}

UniPoly norm_polynomial(const MPoly& p, const Point& point, int into) {
  MPoly q = substitute_rational(p, point);
  for (int v : irrational_support(q, point)) {
    MPoly m = defining_as_mpoly(point[static_cast<std::size_t>(v)], v, q.nvars());
    q = resultant(q, m, v);
    if (q.is_zero()) return UniPoly();
  }
  return to_univariate(q, into);
}

int sign_at(const MPoly& p, const Point& point) {
  check_point(p, point.size());
  MPoly q = substitute_rational(p, point);
  if (q.is_constant()) return sgn(q.constant_value());
  std::vector<int> vars = irrational_support(q, point);
  Point pt = point;
  for (int step = 0; step < kIntervalBisections; ++step) {
    int s = interval_eval(q, box_of(pt, q.nvars())).sign();
    if (s != 0) return s;
    bisect_widest(pt, vars);
    for (int v : vars)
      if (pt[static_cast<std::size_t>(v)].is_rational()) return sign_at(q, pt);
  }
  // exact phase: the value is a root of R(w) = res(... res(w - q, m_1) ..., m_k)
  int n = q.nvars();
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
  MPoly w = MPoly::variable(n + 1, n) - q.remap(map, n + 1);
  UniPoly r = norm_polynomial(w, pt, n);
  if (r.is_zero()) throw Undecidable("norm polynomial vanished in sign evaluation");
  std::size_t k = 0;
  while (k < r.coeffs().size() && sgn(r.coeffs()[k]) == 0) ++k;
  UniPoly rest(std::vector<Rational>(r.coeffs().begin() + static_cast<long>(k), r.coeffs().end()));
  if (rest.degree() == 0) return 0;
  Rational bound = root_lower_bound(rest);
  for (int step = 0; step < 100000; ++step) {
    Interval iv = interval_eval(q, box_of(pt, n));
    int s = iv.sign();
    if (s != 0) return s;
    if (iv.width() < bound) {
      if (k > 0) return 0;
      throw Undecidable("inconsistent interval enclosure");
    }
    bisect_widest(pt, vars);
    for (int v : vars)
      if (pt[static_cast<std::size_t>(v)].is_rational()) return sign_at(q, pt);
  }
  throw Undecidable("sign refinement budget exceeded");
}

std::vector<AlgebraicNumber> roots_over(const MPoly& p, const Point& point, int var) {
  if (var != static_cast<int>(point.size())) throw InvalidInput("roots_over expects the point to fix the variables before var");
  check_point(p, point.size() + 1);
  MPoly q = substitute_rational(p, point);
  auto coeffs = q.coefficients(var);
  bool any = false;
  for (auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (sign_at(c, point) == 0) {
      c = MPoly(q.nvars(), q.order());
    } else {
      any = true;
    }
  }
  if (!any) throw NonDelineable("polynomial vanishes identically over the sample point", p);
  q = MPoly::from_coefficients(coeffs, var);
  if (!q.involves(var)) return {};
  std::vector<int> vars = irrational_support(q, point);
  if (vars.empty()) return isolate_real_roots(to_univariate(q, var));
  UniPoly n = norm_polynomial(q, point, var);
  if (n.is_zero()) throw Undecidable("norm polynomial vanished while lifting");
  std::vector<AlgebraicNumber> out;
  Point ext = point;
  ext.emplace_back();
  for (auto& r : isolate_real_roots(n)) {
    ext.back() = r;
    if (sign_at(q, ext) == 0) out.push_back(r);
  }
  return out;
}

}  // namespace realideal

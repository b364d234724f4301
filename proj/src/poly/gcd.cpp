#include <algorithm>

#include "realideal/poly/mpoly.hpp"

namespace realideal {

bool try_divide(const MPoly& a, const MPoly& b, MPoly& quotient) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  MPoly d = b.with_order(a.order());
  MPoly q(a.nvars(), a.order());
  MPoly rem = a;
  const Term& lb = d.lt();
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const Term& lr = rem.lt();
    if (!divides(lb.exp, lr.exp)) return false;
    Exponent e(lr.exp.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = lr.exp[k] - lb.exp[k];
    Rational c = lr.coeff / lb.coeff;
    rem -= d.mul_term(e, c);
    qterms.push_back({std::move(e), std::move(c)});
  }
  quotient = MPoly(a.nvars(), std::move(qterms), a.order());
  return true;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  MPoly q;
  if (!try_divide(a, b, q)) throw InvalidInput("inexact multivariate division");
  return q;
}

namespace {

int first_var(const MPoly& a, const MPoly& b) {
  for (int v = 0; v < a.nvars(); ++v)
    if (a.involves(v) || b.involves(v)) return v;
  return -1;
}

MPoly one_like(const MPoly& p) { return MPoly::constant(p.nvars(), Rational(1), p.order()); }

MPoly content(const MPoly& p, int var) {
  MPoly g(p.nvars(), p.order());
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

}  // namespace

MPoly prem(const MPoly& a, const MPoly& b, int var) {
  int n = b.degree(var);
  if (n < 0) throw InvalidInput("pseudo-remainder by zero");
  int m = a.degree(var);
  if (m < n) return a;
  auto bc = b.coefficients(var);
  const MPoly& lb = bc.back();
  auto r = a.coefficients(var);
  int k = m - n + 1;
  int deg = m;
  while (deg >= n) {
    MPoly lr = r[static_cast<std::size_t>(deg)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(deg - n + j)] -= lr * bc[static_cast<std::size_t>(j)];
    --k;
    --deg;
    while (deg >= 0 && r[static_cast<std::size_t>(deg)].is_zero()) --deg;
  }
  r.resize(static_cast<std::size_t>(std::max(deg + 1, 1)));
  MPoly out = MPoly::from_coefficients(r, var);
  if (k > 0) out *= pow(lb, static_cast<unsigned>(k));
  return out;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  int v = first_var(a, b);
  if (!b.involves(v)) return gcd(content(a, v), b);
  if (!a.involves(v)) return gcd(a, content(b, v));
  MPoly ca = content(a, v), cb = content(b, v);
  MPoly c = gcd(ca, cb);
  MPoly x = exact_divide(a, ca), y = exact_divide(b, cb);
  if (x.degree(v) < y.degree(v)) std::swap(x, y);
  // primitive remainder sequence
  while (!y.is_zero() && y.degree(v) > 0) {
    MPoly r = prem(x, y, v);
    x = std::move(y);
    if (r.is_zero()) {
      y = MPoly(a.nvars(), a.order());
    } else {
      y = exact_divide(r, content(r, v)).primitive();
    }
  }
  MPoly g = y.is_zero() ? x.primitive() : one_like(a);
  return (c * g).primitive();
}

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(a.nvars(), a.order());
  return exact_divide(a * b, gcd(a, b)).primitive();
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return one_like(p);
  MPoly g = p;
  for (int v = 0; v < p.nvars() && !g.is_constant(); ++v)
    if (p.involves(v)) g = gcd(g, p.derivative(v));
  return exact_divide(p, g).primitive();
}

std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p) {
  std::vector<std::pair<MPoly, int>> out;
  if (p.is_zero() || p.is_constant()) return out;
  int v = first_var(p, p);
  MPoly c = content(p, v);
  MPoly q = exact_divide(p, c);
  MPoly dq = q.derivative(v);
  MPoly b = gcd(q, dq);
  MPoly cc = exact_divide(q, b);
  MPoly d = exact_divide(dq, b) - cc.derivative(v);
  int i = 1;
  while (cc.involves(v)) {
    MPoly a = gcd(cc, d);
    if (!a.is_constant()) out.emplace_back(a.primitive(), i);
    cc = exact_divide(cc, a);
    d = exact_divide(d, a) - cc.derivative(v);
    ++i;
  }
  for (auto& [f, m] : squarefree_decomposition(c)) {
    auto it = std::find_if(out.begin(), out.end(), [m = m](const auto& e) { return e.second == m; });
    if (it == out.end()) {
      out.emplace_back(f, m);
    } else {
      it->first = (it->first * f).primitive();
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

}  // namespace realideal

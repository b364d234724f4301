#include "realideal/poly/mpoly.hpp"

namespace realideal {

namespace {

MPoly lc_in(const MPoly& p, int var) { return p.coefficients(var).back(); }

}  // namespace

// Ducos' variant of the subresultant algorithm with Lazard's optimization for
// defective steps.
std::vector<MPoly> subresultant_chain(const MPoly& p, const MPoly& q, int var) {
  int m = p.degree(var);
  int n = q.degree(var);
  if (n < 0 || m < n) throw InvalidInput("subresultant_chain needs deg p >= deg q >= 0");
  std::vector<MPoly> psc(static_cast<std::size_t>(n + 1), MPoly(p.nvars(), p.order()));
  psc[static_cast<std::size_t>(n)] = pow(lc_in(q, var), static_cast<unsigned>(m - n));
  if (n == 0) {
    psc[0] = pow(q, static_cast<unsigned>(m));
    return psc;
  }
  MPoly s = psc[static_cast<std::size_t>(n)];
  MPoly a = q;
  MPoly b = prem(p, -q, var);
  while (!b.is_zero()) {
    int d = a.degree(var);
    int e = b.degree(var);
    int delta = d - e;
    MPoly c = b;
    if (delta > 1) {
      auto k = static_cast<unsigned>(delta - 1);
      c = exact_divide(pow(lc_in(b, var), k) * b, pow(s, k));
    }
    psc[static_cast<std::size_t>(e)] = lc_in(c, var);
    if (e == 0) break;
    MPoly next = exact_divide(prem(a, -b, var), pow(s, static_cast<unsigned>(delta)) * lc_in(a, var));
    a = std::move(c);
    s = lc_in(a, var);
    b = std::move(next);
  }
  return psc;
}

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  int m = p.degree(var);
  int n = q.degree(var);
  if (m < 0 || n < 0) return MPoly(p.nvars(), p.order());
  if (m == 0 && n == 0) throw InvalidInput("resultant: both polynomials are constant in the variable");
  if (m < n) {
    MPoly r = resultant(q, p, var);
    return (m * n) % 2 == 1 ? -r : r;
  }
  if (n == 0) return pow(q, static_cast<unsigned>(m));
  return subresultant_chain(p, q, var)[0];
}

}  // namespace realideal

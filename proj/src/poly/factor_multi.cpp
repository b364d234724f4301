#include <algorithm>
#include <functional>

#include "realideal/poly/factor.hpp"

namespace realideal {

namespace {

struct Kronecker {
  std::vector<int> vars;
  std::vector<long> weight;
};

Kronecker make_kronecker(const MPoly& f) {
  Kronecker k;
  long w = 1;
  for (int v : f.support()) {
    k.vars.push_back(v);
    k.weight.push_back(w);
    w *= f.degree(v) + 1;
  }
  return k;
}

UniPoly forward(const MPoly& f, const Kronecker& k) {
  long top = 0;
  for (const auto& t : f.terms()) {
    long e = 0;
    for (std::size_t i = 0; i < k.vars.size(); ++i) e += t.exp[static_cast<std::size_t>(k.vars[i])] * k.weight[i];
    top = std::max(top, e);
  }
  std::vector<Rational> c(static_cast<std::size_t>(top + 1));
  for (const auto& t : f.terms()) {
    long e = 0;
    for (std::size_t i = 0; i < k.vars.size(); ++i) e += t.exp[static_cast<std::size_t>(k.vars[i])] * k.weight[i];
    c[static_cast<std::size_t>(e)] += t.coeff;
  }
  return UniPoly(c);
}

MPoly backward(const UniPoly& u, const Kronecker& k, const MPoly& like) {
  std::vector<Term> terms;
  for (int e = 0; e <= u.degree(); ++e) {
    if (sgn(u.coeff(static_cast<std::size_t>(e))) == 0) continue;
    Exponent x(static_cast<std::size_t>(like.nvars()), 0);
    long rest = e;
    for (std::size_t i = k.vars.size(); i-- > 0;) {
      x[static_cast<std::size_t>(k.vars[i])] = static_cast<int>(rest / k.weight[i]);
      rest %= k.weight[i];
    }
    terms.push_back({std::move(x), u.coeff(static_cast<std::size_t>(e))});
  }
  return MPoly(like.nvars(), std::move(terms), like.order());
}

// f squarefree, primitive, no monomial factor, nonconstant.
void factor_kronecker(const MPoly& f, std::vector<MPoly>& out) {
  if (f.support().size() == 1) {
    int v = f.support()[0];
    for (const auto& q : irreducible_factors(to_univariate(f, v), 1 << 20))
      out.push_back(from_univariate(q, v, f.nvars(), f.order()).primitive());
    return;
  }
  Kronecker k = make_kronecker(f);
  UniPoly u = forward(f, k);
  std::vector<UniPoly> pieces;
  auto uf = factor_univariate(u, 1 << 20);
  for (const auto& [q, m] : uf.factors)
    for (int r = 0; r < m; ++r) pieces.push_back(q);
  MPoly rest = f;
  std::vector<bool> used(pieces.size(), false);
  std::size_t remaining = pieces.size();
  for (std::size_t size = 1; 2 * size <= remaining; ++size) {
    bool found = true;
    while (found) {
      found = false;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!used[i]) idx.push_back(i);
      if (2 * size > idx.size()) break;
      std::vector<bool> pick(idx.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
      do {
        UniPoly prod(Rational(1));
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (pick[i]) prod *= pieces[idx[i]];
        MPoly cand = backward(prod, k, f);
        if (cand.is_constant()) continue;
        MPoly quo;
        if (try_divide(rest, cand, quo)) {
          out.push_back(cand.primitive());
          rest = quo;
          for (std::size_t i = 0; i < idx.size(); ++i)
            if (pick[i]) used[idx[i]] = true;
          remaining -= size;
          found = true;
          break;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  if (!rest.is_constant()) out.push_back(rest.primitive());
}

void factor_squarefree(const MPoly& f, std::vector<MPoly>& out) {
  if (f.is_constant()) return;
  for (int v = 0; v < f.nvars(); ++v) {
    if (!f.involves(v)) continue;
    // monomial factor
    MPoly x = MPoly::variable(f.nvars(), v, f.order());
    MPoly quo;
    if (try_divide(f, x, quo)) {
      out.push_back(x);
      factor_squarefree(quo, out);
      return;
    }
    // content with respect to v
    MPoly c(f.nvars(), f.order());
    for (const auto& co : f.coefficients(v))
      if (!co.is_zero()) c = gcd(c, co);
    if (!c.is_constant()) {
      factor_squarefree(c, out);
      factor_squarefree(exact_divide(f, c), out);
      return;
    }
  }
  factor_kronecker(f.primitive(), out);
}

}  // namespace

std::vector<std::pair<MPoly, int>> factor(const MPoly& p, int degree_cap) {
  if (p.is_zero()) throw InvalidInput("factor of the zero polynomial");
  if (p.total_degree() > degree_cap) throw UnsupportedScope("multivariate factorization above the degree cap");
  std::vector<std::pair<MPoly, int>> out;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    std::vector<MPoly> parts;
    factor_squarefree(f, parts);
    for (auto& q : parts) out.emplace_back(q.primitive(), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    std::string sa = a.first.to_string(), sb = b.first.to_string();
    if (sa != sb) return sa < sb;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const MPoly& p) {
  if (p.is_zero() || p.is_constant()) return false;
  auto f = factor(p);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace realideal

#include <algorithm>
#include <functional>
#include <map>

#include "realideal/ideal/decompose.hpp"
#include "realideal/numeric/algebraic.hpp"

namespace realideal {

namespace {

std::vector<Exponent> standard_monomials(const Ideal& i, int max_degree) {
  int n = i.nvars();
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      for (const auto& g : i.basis())
        if (divides(g.lm(), e)) return;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, max_degree);
  MonomialOrder g = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&g](const Exponent& a, const Exponent& b) { return g.compare(a, b) > 0; });
  return out;
}

constexpr int kNodeBudget = 20000;

// Rational points of the variety of a lex Groebner basis, found by back substitution.
class BackSolver {
 public:
  BackSolver(std::vector<MPoly> basis, int nvars, std::function<bool(const std::vector<Rational>&)> accept)
      : basis_(std::move(basis)), n_(nvars), accept_(std::move(accept)) {}

  std::optional<std::vector<Rational>> solve() {
    std::vector<Rational> values(static_cast<std::size_t>(n_));
    if (search(n_ - 1, values)) return values;
    return std::nullopt;
  }
  [[nodiscard]] bool exhausted() const { return nodes_ > kNodeBudget; }

 private:
  bool search(int var, std::vector<Rational>& values) {
    if (++nodes_ > kNodeBudget) return false;
    if (var < 0) return accept_(values);
    UniPoly g;
    bool free = true;
    for (const auto& f : basis_) {
      bool only_tail = true;
      for (int v = 0; v < var && only_tail; ++v) only_tail = !f.involves(v);
      if (!only_tail) continue;
      MPoly s = f;
      for (int v = var + 1; v < n_; ++v) s = s.substitute(v, values[static_cast<std::size_t>(v)]);
      if (s.is_zero()) continue;
      if (s.is_constant()) return false;
      UniPoly u = to_univariate(s, var);
      g = free ? u : gcd(g, u);
      free = false;
      if (g.degree() == 0) return false;
    }
    std::vector<Rational> candidates;
    if (free) {
      candidates = {Rational(0), Rational(1), Rational(-1)};
    } else {
      for (const auto& r : isolate_real_roots(g))
        if (r.is_rational()) candidates.push_back(r.rational_value());
    }
    for (const auto& c : candidates) {
      values[static_cast<std::size_t>(var)] = c;
      if (search(var - 1, values)) return true;
    }
    return false;
  }

  std::vector<MPoly> basis_;
  int n_;
  std::function<bool(const std::vector<Rational>&)> accept_;
  int nodes_ = 0;
};

}  // namespace

SplitResult complexified_split(const Ideal& ideal) {
  if (ideal.is_unit()) throw InvalidInput("complexified_split needs a proper ideal");
  SplitResult result;
  if (ideal.is_zero()) return result;
  Ideal i = ideal.with_order(MonomialOrder::grevlex());
  int n = i.nvars();
  int lowest = i.basis()[0].total_degree();
  for (const auto& g : i.basis()) lowest = std::min(lowest, g.total_degree());
  int bound = (lowest + 1) / 2;
  result.degree_bound = bound;
  auto mons = standard_monomials(i, bound);
  auto count = static_cast<int>(mons.size());
  std::map<std::pair<int, int>, MPoly> products;
  for (int k = 0; k < count; ++k)
    for (int l = k; l < count; ++l) {
      Exponent e(mons[static_cast<std::size_t>(k)].size());
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = mons[static_cast<std::size_t>(k)][t] + mons[static_cast<std::size_t>(l)][t];
      products[{k, l}] = i.reduce(MPoly::monomial(n, e, Rational(1)));
    }
  bool unresolved = false;
  for (int j = 0; j < count; ++j) {
    int free_count = count - 1 - j;
    if (free_count == 0) continue;
    int u = 2 * free_count;
    MonomialOrder lex = MonomialOrder::lex();
    // coefficient of monomial k in a (resp. b) as a polynomial in the unknowns
    auto coef = [&](bool is_b, int k) -> MPoly {
      if (k < j) return MPoly(u, lex);
      if (k == j) return is_b ? MPoly(u, lex) : MPoly::constant(u, Rational(1), lex);
      return MPoly::variable(u, (is_b ? free_count : 0) + (k - j - 1), lex);
    };
    std::map<Exponent, MPoly> eqs;
    for (int k = j; k < count; ++k)
      for (int l = k; l < count; ++l) {
        MPoly c = coef(false, k) * coef(false, l) + coef(true, k) * coef(true, l);
        if (k != l) c *= Rational(2);
        for (const auto& t : products[{k, l}].terms()) {
          auto it = eqs.try_emplace(t.exp, MPoly(u, lex)).first;
          it->second += c * t.coeff;
        }
      }
    std::vector<MPoly> system;
    for (auto& [e, p] : eqs)
      if (!p.is_zero()) system.push_back(p);
    auto gb = groebner(system, lex);
    if (gb.size() == 1 && gb[0].is_constant()) continue;
    auto b_nonzero = [&](const std::vector<Rational>& v) {
      for (int k = free_count; k < u; ++k)
        if (sgn(v[static_cast<std::size_t>(k)]) != 0) return true;
      return false;
    };
    BackSolver solver(gb, u, b_nonzero);
    auto sol = solver.solve();
    if (!sol) {
      unresolved = true;
      continue;
    }
    MPoly a(n), b(n);
    for (int k = j; k < count; ++k) {
      const Exponent& m = mons[static_cast<std::size_t>(k)];
      Rational ca = k == j ? Rational(1) : (*sol)[static_cast<std::size_t>(k - j - 1)];
      Rational cb = k == j ? Rational(0) : (*sol)[static_cast<std::size_t>(free_count + k - j - 1)];
      a += MPoly::monomial(n, m, ca);
      b += MPoly::monomial(n, m, cb);
    }
    if (sgn(b.lc()) < 0) b = -b;
    if (!i.contains(a * a + b * b) || i.contains(a) || i.contains(b))
      throw Error("internal error: split witness failed verification");
    result.witnesses.push_back({a.with_order(ideal.order()), b.with_order(ideal.order())});
  }
  if (!result.witnesses.empty()) {
    result.verdict = SplitVerdict::Split;
  } else if (unresolved) {
    result.verdict = SplitVerdict::Inconclusive;
    result.note = "coefficient system has solutions but no rational witness was found";
  }
  return result;
}

}  // namespace realideal

#include <algorithm>

#include "realideal/ideal/ideal.hpp"

namespace realideal {

Ideal eliminate_to(const Ideal& i, const std::vector<int>& keep) {
  int n = i.nvars();
  std::vector<int> map(static_cast<std::size_t>(n), -1), back(static_cast<std::size_t>(n));
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) map[static_cast<std::size_t>(v)] = next++;
  int eliminated = next;
  for (int v = 0; v < n; ++v)
    if (map[static_cast<std::size_t>(v)] < 0) map[static_cast<std::size_t>(v)] = next++;
  for (int v = 0; v < n; ++v) back[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] = v;
  MonomialOrder block = MonomialOrder::block(eliminated);
  std::vector<MPoly> gens;
  for (const auto& g : i.generators()) gens.push_back(g.remap(map, n).with_order(block));
  std::vector<MPoly> out;
  for (const auto& g : groebner(gens, block)) {
    bool pure = true;
    for (int v = 0; v < eliminated && pure; ++v) pure = !g.involves(v);
    if (pure) out.push_back(g.remap(back, n).with_order(i.order()));
  }
  return Ideal(n, out, i.order());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw InvalidInput("intersect: ideals live in different rings");
  int n = a.nvars();
  std::vector<int> shift(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) shift[static_cast<std::size_t>(v)] = v + 1;
  MonomialOrder block = MonomialOrder::block(1);
  MPoly t = MPoly::variable(n + 1, 0, block);
  MPoly one_minus_t = MPoly::constant(n + 1, Rational(1), block) - t;
  std::vector<MPoly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.remap(shift, n + 1).with_order(block));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(shift, n + 1).with_order(block));
  std::vector<int> back(static_cast<std::size_t>(n + 1), -1);
  for (int v = 0; v < n; ++v) back[static_cast<std::size_t>(v + 1)] = v;
  std::vector<MPoly> out;
  for (const auto& g : groebner(gens, block))
    if (!g.involves(0)) out.push_back(g.remap(back, n).with_order(a.order()));
  return Ideal(n, out, a.order()).canonical();
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw InvalidInput("intersection of no ideals");
  Ideal acc = ideals[0];
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return acc.canonical();
}

Ideal quotient(const Ideal& i, const MPoly& g) {
  if (g.is_zero()) throw InvalidInput("quotient by the zero polynomial");
  if (g.is_constant()) return i;
  Ideal both = intersect(i, Ideal(i.nvars(), {g}, i.order()));
  std::vector<MPoly> out;
  for (const auto& h : both.generators()) out.push_back(exact_divide(h, g.with_order(i.order())));
  return Ideal(i.nvars(), out, i.order()).canonical();
}

bool radical_member(const MPoly& f, const Ideal& i) {
  int n = i.nvars();
  std::vector<int> same(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) same[static_cast<std::size_t>(v)] = v;
  std::vector<MPoly> gens;
  for (const auto& g : i.generators()) gens.push_back(g.remap(same, n + 1));
  gens.push_back(MPoly::constant(n + 1, Rational(1)) - MPoly::variable(n + 1, n) * f.remap(same, n + 1).with_order(MonomialOrder::grevlex()));
  auto gb = groebner(gens, MonomialOrder::grevlex());
  return gb.size() == 1 && gb[0].is_constant();
}

namespace {

bool independent(const std::vector<MPoly>& basis, unsigned mask) {
  for (const auto& g : basis) {
    bool inside = true;
    for (std::size_t k = 0; k < g.lm().size() && inside; ++k)
      if (g.lm()[k] != 0 && !(mask & (1U << k))) inside = false;
    if (inside) return false;
  }
  return true;
}

std::vector<int> bits(unsigned mask, int n) {
  std::vector<int> v;
  for (int k = 0; k < n; ++k)
    if (mask & (1U << k)) v.push_back(k);
  return v;
}

}  // namespace

int dimension(const Ideal& i) {
  if (i.is_unit()) return -1;
  int n = i.nvars();
  if (n > 24) throw UnsupportedScope("dimension: too many variables");
  int best = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (independent(i.basis(), mask)) best = std::max(best, __builtin_popcount(mask));
  return best;
}

std::vector<std::vector<int>> maximal_independent_sets(const Ideal& i) {
  std::vector<std::vector<int>> out;
  if (i.is_unit()) return out;
  int n = i.nvars();
  std::vector<unsigned> indep;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (independent(i.basis(), mask)) indep.push_back(mask);
  for (unsigned m : indep) {
    bool maximal = true;
    for (unsigned o : indep)
      if (o != m && (o & m) == m) maximal = false;
    if (maximal) out.push_back(bits(m, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> first_top_independent_set(const Ideal& i) {
  int d = dimension(i);
  if (d < 0) return {};
  int n = i.nvars();
  std::vector<std::vector<int>> candidates;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (__builtin_popcount(mask) == d) candidates.push_back(bits(mask, n));
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates)
    if (!rationally_trivial(i, c)) return c;
  throw Error("internal error: no independent set of top size");
}

bool rationally_trivial(const Ideal& i, const std::vector<int>& vars) {
  if (i.is_unit()) return true;
  return !eliminate_to(i, vars).is_zero();
}

}  // namespace realideal

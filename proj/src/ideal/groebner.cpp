#include <algorithm>
#include <set>
#include <sstream>

#include "realideal/ideal/ideal.hpp"

namespace realideal {

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis) {
  MPoly rem = f;
  std::vector<Term> done;
  while (!rem.is_zero()) {
    const Term& lt = rem.lt();
    const MPoly* reducer = nullptr;
    for (const auto& g : basis) {
      if (divides(g.lm(), lt.exp)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      done.push_back(lt);
      rem = rem.tail();
      continue;
    }
    Exponent e(lt.exp.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = lt.exp[k] - reducer->lm()[k];
    rem -= reducer->mul_term(e, lt.coeff / reducer->lc());
  }
  return MPoly(f.nvars(), std::move(done), f.order());
}

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  Exponent l = lcm(f.lm(), g.lm());
  Exponent ef(l.size()), eg(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) {
    ef[k] = l[k] - f.lm()[k];
    eg[k] = l[k] - g.lm()[k];
  }
  return f.mul_term(ef, Rational(1 / f.lc())) - g.mul_term(eg, Rational(1 / g.lc()));
}

namespace {

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

std::vector<MPoly> reduce_basis(std::vector<MPoly> g, const MonomialOrder& order) {
  // minimal basis: drop elements whose leading monomial is a multiple of another's
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].lm(), g[i].lm()) && (g[j].lm() != g[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly lead = MPoly::monomial(minimal[i].nvars(), minimal[i].lm(), minimal[i].lc(), order);
    reduced.push_back((lead + normal_form(minimal[i].tail(), others)).primitive());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&order](const MPoly& a, const MPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  return reduced;
}

}  // namespace

bool is_groebner(const std::vector<MPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (coprime(basis[i].lm(), basis[j].lm())) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

std::vector<MPoly> groebner(const std::vector<MPoly>& gens, const MonomialOrder& order) {
  std::vector<MPoly> g;
  int nvars = gens.empty() ? 0 : gens[0].nvars();
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return {MPoly::constant(nvars, Rational(1), order)};
    g.push_back(f.with_order(order).primitive());
  }
  if (g.empty()) return {};
  // start from the interreduced input so the pair set stays small
  {
    std::vector<MPoly> h;
    for (const auto& f : g) {
      MPoly r = normal_form(f, h);
      if (!r.is_zero()) h.push_back(r.primitive());
    }
    g = std::move(h);
  }
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, lcm(g[i].lm(), g[j].lm())});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_pairs(j);
  while (!pairs.empty()) {
    // normal strategy: smallest lcm first, ties by index
    auto best = std::min_element(pairs.begin(), pairs.end(), [&order](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});
    if (coprime(g[p.i].lm(), g[p.j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(g[k].lm(), p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;
    MPoly r = normal_form(s_polynomial(g[p.i], g[p.j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {MPoly::constant(nvars, Rational(1), order)};
    g.push_back(r.primitive());
    add_pairs(g.size() - 1);
  }
  std::vector<MPoly> out = reduce_basis(std::move(g), order);
  if (!is_groebner(out)) throw Error("internal error: Groebner basis failed the S-pair check");
  return out;
}

Ideal::Ideal(int nvars, std::vector<MPoly> gens, MonomialOrder order)
    : nvars_(nvars), order_(order), gens_(std::move(gens)) {
  for (auto& g : gens_) {
    if (g.nvars() != nvars_) throw InvalidInput("generator lives in a different ring");
    g = g.with_order(order_);
  }
}

Ideal Ideal::unit(int nvars, MonomialOrder order) {
  return Ideal(nvars, {MPoly::constant(nvars, Rational(1), order)}, order);
}

const std::vector<MPoly>& Ideal::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner(gens_, order_); });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant();
}

MPoly Ideal::reduce(const MPoly& f) const { return normal_form(f.with_order(order_), basis()); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

Ideal Ideal::with_order(const MonomialOrder& order) const { return Ideal(nvars_, gens_, order); }

Ideal Ideal::plus(const std::vector<MPoly>& extra) const {
  std::vector<MPoly> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(nvars_, g, order_);
}

Ideal Ideal::canonical() const {
  Ideal r(nvars_, basis(), order_);
  return r;
}

namespace {

std::string join(const std::vector<MPoly>& polys, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? ", " : "") << polys[i].to_string(names);
  if (polys.empty()) os << "0";
  os << ">";
  return os.str();
}

}  // namespace

std::string Ideal::to_string(const std::vector<std::string>& names) const { return join(basis(), names); }

std::string Ideal::generators_string(const std::vector<std::string>& names) const { return join(gens_, names); }

bool operator==(const Ideal& a, const Ideal& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.order_ == b.order_) {
    const auto& x = a.basis();
    const auto& y = b.basis();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return false;
    return true;
  }
  return a.contains(b) && b.contains(a);
}

bool member(const MPoly& f, const Ideal& i) { return i.contains(f); }

}  // namespace realideal

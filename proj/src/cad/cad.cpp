#include "realideal/cad/cad.hpp"

#include <algorithm>
#include <sstream>

#include "realideal/poly/factor.hpp"

namespace realideal {

namespace {

bool factor_less(const MPoly& a, const MPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.to_string() < b.to_string();
}

void insert_unique(std::vector<MPoly>& set, const MPoly& p) {
  if (std::find(set.begin(), set.end(), p) == set.end()) set.push_back(p);
}

int highest_variable(const MPoly& p) {
  auto s = p.support();
  return s.empty() ? -1 : s.back();
}

std::string decimal(const AlgebraicNumber& a) {
  if (a.is_rational()) return to_decimal(a.rational_value(), 6);
  AlgebraicNumber r = a.refine_to(Rational(1, 100000000));
  return to_decimal(Rational((r.lo() + r.hi()) / 2), 6);
}

std::string short_value(const AlgebraicNumber& a) {
  return a.is_rational() ? to_string(a.rational_value()) : decimal(a);
}

Rational below(const AlgebraicNumber& r) {
  if (r.is_rational()) return r.rational_value() - 1;
  return Rational(floor(r.refine_to(Rational(1)).lo()));
}

Rational above(const AlgebraicNumber& r) {
  if (r.is_rational()) return r.rational_value() + 1;
  return Rational(ceil(r.refine_to(Rational(1)).hi()));
}

Point extend(const Point& base, const AlgebraicNumber& x) {
  Point p = base;
  p.push_back(x);
  return p;
}

// Distinct real roots per polynomial; -1 marks a polynomial that vanishes on the fiber.
std::vector<long> root_counts(const std::vector<MPoly>& polys, const Point& point, int var) {
  std::vector<long> out;
  for (const auto& p : polys) {
    try {
      out.push_back(static_cast<long>(roots_over(p, point, var).size()));
    } catch (const NonDelineable&) {
      out.push_back(-1);
    }
  }
  return out;
}

}  // namespace

std::vector<MPoly> factor_set(const std::vector<MPoly>& polys) {
  std::vector<MPoly> out;
  for (const auto& p : polys) {
    if (p.is_zero() || p.is_constant()) continue;
    MPoly q = p.with_order(MonomialOrder::grevlex());
    try {
      for (const auto& fm : factor(q)) insert_unique(out, fm.first);
    } catch (const UnsupportedScope&) {
      insert_unique(out, squarefree_part(q).primitive());
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::vector<MPoly> project(const std::vector<MPoly>& polys, int var) {
  std::vector<MPoly> raw;
  std::vector<MPoly> moving;
  for (const auto& p : factor_set(polys)) {
    if (p.involves(var)) {
      moving.push_back(p);
    } else {
      raw.push_back(p);
    }
  }
  auto add_chain = [&](const MPoly& a, const MPoly& b) {
    auto chain = subresultant_chain(a, b, var);
    int top = b.degree(var);
    for (int j = 0; j < top && j < static_cast<int>(chain.size()); ++j) raw.push_back(chain[static_cast<std::size_t>(j)]);
  };
  for (std::size_t i = 0; i < moving.size(); ++i) {
    const MPoly& f = moving[i];
    raw.push_back(f.coefficients(var).back());
    if (f.degree(var) >= 2) add_chain(f, f.derivative(var));
    for (std::size_t j = i + 1; j < moving.size(); ++j) {
      const MPoly& g = moving[j];
      if (f.degree(var) >= g.degree(var)) {
        add_chain(f, g);
      } else {
        add_chain(g, f);
      }
    }
  }
  return factor_set(raw);
}

ProjectionLadder build_ladder(int nvars, const std::vector<MPoly>& generators, const std::vector<MPoly>& constraints) {
  auto chain = [nvars](const std::vector<MPoly>& input) {
    std::vector<std::vector<MPoly>> levels(static_cast<std::size_t>(nvars + 1));
    auto place = [&levels](const MPoly& f) {
      insert_unique(levels[static_cast<std::size_t>(highest_variable(f) + 1)], f);
    };
    for (const auto& f : factor_set(input)) place(f);
    for (int k = nvars; k >= 2; --k) {
      auto& here = levels[static_cast<std::size_t>(k)];
      std::sort(here.begin(), here.end(), factor_less);
      for (const auto& f : project(here, k - 1)) place(f);
    }
    std::sort(levels[1].begin(), levels[1].end(), factor_less);
    return levels;
  };
  ProjectionLadder ladder;
  ladder.nvars = nvars;
  ladder.p = chain(generators);
  std::vector<MPoly> all = generators;
  all.insert(all.end(), constraints.begin(), constraints.end());
  ladder.q = chain(all);
  return ladder;
}

std::vector<Cell> lift(const Cell& cell, const std::vector<MPoly>& polys, Nullified mode) {
  int var = cell.level;
  std::vector<AlgebraicNumber> roots;
  std::vector<bool> nullified(polys.size(), false);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<AlgebraicNumber> rs;
    try {
      rs = roots_over(polys[i], cell.sample, var);
    } catch (const NonDelineable&) {
      if (mode == Nullified::Throw) throw;
      nullified[i] = true;
      continue;
    }
    for (auto& r : rs) {
      bool seen = std::any_of(roots.begin(), roots.end(), [&r](const AlgebraicNumber& s) { return s == r; });
      if (!seen) roots.push_back(std::move(r));
    }
  }
  std::sort(roots.begin(), roots.end());

  if (cell.kind == CellKind::Sector && cell.level >= 1) {
    // three probes across the parent sector must see the same root counts
    const AlgebraicNumber& mid = cell.sample.back();
    Point base(cell.sample.begin(), cell.sample.end() - 1);
    Rational left = cell.lower ? rational_between(*cell.lower, mid) : below(mid);
    Rational right = cell.upper ? rational_between(mid, *cell.upper) : above(mid);
    auto expected = root_counts(polys, cell.sample, var);
    for (const Rational& probe : {left, right}) {
      if (root_counts(polys, extend(base, AlgebraicNumber(probe)), var) != expected)
        throw Error("delineability check failed over sector " + describe_last(cell) + " at level " +
                    std::to_string(cell.level));
    }
  }

  std::vector<Cell> out;
  auto make = [&](CellKind kind, const AlgebraicNumber& x, const std::optional<AlgebraicNumber>& lo,
                  const std::optional<AlgebraicNumber>& hi) {
    Cell c;
    c.level = cell.level + 1;
    c.kind = kind;
    c.sample = extend(cell.sample, x);
    c.lower = lo;
    c.upper = hi;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      int s = nullified[i] ? 0 : sign_at(polys[i], c.sample);
      c.signs.push_back(s);
      if (kind == CellKind::Section && s == 0 && !nullified[i]) c.defining.push_back(polys[i]);
    }
    out.push_back(std::move(c));
  };
  if (roots.empty()) {
    make(CellKind::Sector, AlgebraicNumber(Rational(0)), std::nullopt, std::nullopt);
    return out;
  }
  make(CellKind::Sector, AlgebraicNumber(below(roots.front())), std::nullopt, roots.front());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    make(CellKind::Section, roots[i], std::nullopt, std::nullopt);
    if (i + 1 < roots.size()) {
      make(CellKind::Sector, AlgebraicNumber(rational_between(roots[i], roots[i + 1])), roots[i], roots[i + 1]);
    }
  }
  make(CellKind::Sector, AlgebraicNumber(above(roots.back())), roots.back(), std::nullopt);
  return out;
}

std::vector<Cell> base_cells(const std::vector<MPoly>& polys) { return lift(Cell{}, polys); }

CadTree build_cad(int nvars, const std::vector<MPoly>& generators, const std::vector<MPoly>& constraints) {
  CadTree tree;
  tree.ladder = build_ladder(nvars, generators, constraints);
  tree.cells.resize(static_cast<std::size_t>(nvars + 1));
  tree.cells[0].push_back(Cell{});
  for (int k = 1; k <= nvars; ++k) {
    const auto& parents = tree.cells[static_cast<std::size_t>(k - 1)];
    for (std::size_t i = 0; i < parents.size(); ++i) {
      for (auto& c : lift(parents[i], tree.ladder.q_level(k), Nullified::Skip)) {
        c.parent = static_cast<int>(i);
        tree.cells[static_cast<std::size_t>(k)].push_back(std::move(c));
      }
    }
  }
  return tree;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Greater:
      return ">";
    case Relation::GreaterEq:
      return ">=";
    case Relation::Equal:
      return "=";
  }
  return "?";
}

bool SemialgebraicSet::is_whole() const {
  return std::any_of(conjuncts.begin(), conjuncts.end(), [](const auto& c) { return c.empty(); });
}

std::vector<MPoly> SemialgebraicSet::polynomials() const {
  std::vector<MPoly> out;
  for (const auto& c : conjuncts)
    for (const auto& k : c) insert_unique(out, k.poly);
  return out;
}

bool SemialgebraicSet::contains(const Point& point) const {
  for (const auto& conj : conjuncts) {
    bool ok = true;
    for (const auto& k : conj) {
      int s = sign_at(k.poly, point);
      ok = k.rel == Relation::Greater ? s > 0 : k.rel == Relation::GreaterEq ? s >= 0 : s == 0;
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

bool SemialgebraicSet::interior_contains(const Point& point) const {
  for (const auto& conj : conjuncts) {
    bool ok = true;
    for (const auto& k : conj) {
      ok = k.rel != Relation::Equal && sign_at(k.poly, point) > 0;
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

SemialgebraicSet SemialgebraicSet::remap(const std::vector<int>& map) const {
  SemialgebraicSet out{nvars, {}};
  for (const auto& conj : conjuncts) {
    std::vector<Constraint> c;
    for (const auto& k : conj) c.push_back({k.poly.remap(map, nvars), k.rel});
    out.conjuncts.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> variety_cell_indices(const CadTree& tree, const std::vector<MPoly>& generators,
                                              const SemialgebraicSet& s) {
  std::vector<std::size_t> out;
  const auto& top = tree.level(tree.ladder.nvars);
  for (std::size_t i = 0; i < top.size(); ++i) {
    const Cell& c = top[i];
    bool on = std::all_of(generators.begin(), generators.end(), [&c](const MPoly& g) { return sign_at(g, c.sample) == 0; });
    if (on && s.contains(c.sample)) out.push_back(i);
  }
  return out;
}

std::vector<Cell> variety_cells(const CadTree& tree, const std::vector<MPoly>& generators, const SemialgebraicSet& s) {
  std::vector<Cell> out;
  for (auto i : variety_cell_indices(tree, generators, s)) out.push_back(tree.level(tree.ladder.nvars)[i]);
  return out;
}

const Cell& ancestor(const CadTree& tree, int level, std::size_t index, int k) {
  const Cell* c = &tree.level(level)[index];
  while (c->level > k) c = &tree.level(c->level - 1)[static_cast<std::size_t>(c->parent)];
  return *c;
}

std::string describe_last(const Cell& cell) {
  if (cell.level == 0) return "point";
  if (cell.kind == CellKind::Section) return short_value(cell.sample.back());
  std::string lo = cell.lower ? short_value(*cell.lower) : "-inf";
  std::string hi = cell.upper ? short_value(*cell.upper) : "+inf";
  return "(" + lo + ", " + hi + ")";
}

std::string dump(const CadTree& tree, const std::vector<std::string>& names) {
  std::ostringstream os;
  int n = tree.ladder.nvars;
  os << "cad variables:";
  for (int v = 0; v < n; ++v) os << ' ' << names[static_cast<std::size_t>(v)];
  os << '\n';
  auto list = [&](const std::vector<MPoly>& polys) {
    os << '{';
    for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? ", " : "") << polys[i].to_string(names);
    os << "}\n";
  };
  for (int k = 1; k <= n; ++k) {
    os << "level " << k << " P: ";
    list(tree.ladder.p_level(k));
    os << "level " << k << " Q: ";
    list(tree.ladder.q_level(k));
  }
  for (int k = 1; k <= n; ++k) {
    const auto& cells = tree.level(k);
    os << "cells level " << k << ": " << cells.size() << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      os << "  [" << i << "] parent " << c.parent << ' ' << (c.kind == CellKind::Section ? "section" : "sector") << ' '
         << describe_last(c) << " sample (";
      for (std::size_t j = 0; j < c.sample.size(); ++j) os << (j ? ", " : "") << decimal(c.sample[j]);
      os << ") signs ";
      for (int s : c.signs) os << (s > 0 ? '+' : s < 0 ? '-' : '0');
      if (!c.sample.back().is_rational()) os << " exact " << c.sample.back().to_string();
      if (!c.defining.empty()) {
        os << " on";
        for (const auto& d : c.defining) os << ' ' << d.to_string(names);
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace realideal

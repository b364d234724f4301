#include "realideal/real/real.hpp"

#include <algorithm>
#include <sstream>

namespace realideal {

namespace {

// Variable order with the chosen coordinates first.
struct Frame {
  int n = 0;
  int dim = 0;
  std::vector<int> coords;
  std::vector<int> to_new;
  std::vector<int> to_old;
  std::vector<MPoly> gens;
  SemialgebraicSet set;

  Frame(const Ideal& c, const SemialgebraicSet& s) : n(c.nvars()), dim(dimension(c)) {
    coords = first_top_independent_set(c);
    to_old = coords;
    for (int v = 0; v < n; ++v)
      if (std::find(coords.begin(), coords.end(), v) == coords.end()) to_old.push_back(v);
    to_new.assign(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) to_new[static_cast<std::size_t>(to_old[static_cast<std::size_t>(k)])] = k;
    for (const auto& g : c.basis()) gens.push_back(g.remap(to_new, n));
    set = s.remap(to_new);
  }

  [[nodiscard]] Point original(const Point& p) const {
    Point out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(to_old[k])] = p[k];
    return out;
  }
  [[nodiscard]] MPoly original(const MPoly& f) const { return f.remap(to_old, n); }
};

bool on_variety(const std::vector<MPoly>& gens, const Point& p) {
  return std::all_of(gens.begin(), gens.end(), [&p](const MPoly& g) { return sign_at(g, p) == 0; });
}

bool is_radical(const Ideal& c) { return scoped_radical(c) == c; }

std::string join_names(const std::vector<int>& vars, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + names[static_cast<std::size_t>(vars[i])];
  return out.empty() ? "(none)" : out;
}

}  // namespace

int rank_at(const Ideal& i, const Point& point) {
  const auto& basis = i.basis();
  if (basis.empty()) return 0;
  PolyMatrix m = jacobian(basis);
  MPoly prev = MPoly::constant(i.nvars(), Rational(1));
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int row = r; row < m.rows && pivot < 0; ++row)
      if (sign_at(m.at(row, c), point) != 0) pivot = row;
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    for (int row = r + 1; row < m.rows; ++row) {
      for (int j = c + 1; j < m.cols; ++j)
        m.at(row, j) = exact_divide(m.at(r, c) * m.at(row, j) - m.at(row, c) * m.at(r, j), prev);
      m.at(row, c) = MPoly(i.nvars());
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

ComponentSearch search_component(const Ideal& c, const SemialgebraicSet& s) {
  ComponentSearch out;
  if (c.is_unit()) {
    out.dimension = -1;
    return out;
  }
  Frame f(c, s);
  int n = f.n;
  out.dimension = f.dim;
  out.coordinates = f.coords;
  ProjectionLadder ladder = build_ladder(n, f.gens, f.set.polynomials());
  for (const auto& cell : base_cells(ladder.q_level(1)))
    if (cell.kind == CellKind::Section) out.base_roots.push_back(cell.sample[0]);

  std::vector<Cell> open{Cell{}};
  for (int k = 1; k <= f.dim; ++k) {
    std::vector<Cell> next;
    for (const auto& cell : open)
      for (auto& child : lift(cell, ladder.q_level(k)))
        if (child.kind == CellKind::Sector) next.push_back(std::move(child));
    open = std::move(next);
  }
  out.open_cells = static_cast<int>(open.size());

  int full_rank = n - f.dim;
  for (const auto& base : open) {
    std::vector<Cell> layer{base};
    try {
      for (int k = f.dim + 1; k <= n; ++k) {
        const auto& polys = ladder.p_level(k);
        std::vector<Cell> next;
        for (const auto& cell : layer)
          for (auto& child : lift(cell, polys))
            if (polys.empty() || child.kind == CellKind::Section) next.push_back(std::move(child));
        layer = std::move(next);
      }
    } catch (const Error&) {
      out.refinement_error = true;
      continue;
    }
    for (const auto& top : layer) {
      if (!on_variety(f.gens, top.sample) || !f.set.contains(top.sample)) continue;
      Point p = f.original(top.sample);
      bool interior = s.interior_contains(p);
      int rank = rank_at(c, p);
      if (!out.accepted || (interior && rank == full_rank)) {
        out.accepted = true;
        out.point = p;
        out.interior = interior;
        out.rank = rank;
      }
      if (interior && rank == full_rank) return out;
    }
  }
  return out;
}

std::string to_string(RealityKind k) {
  switch (k) {
    case RealityKind::Real:
      return "Real";
    case RealityKind::NotReal:
      return "NotReal";
    case RealityKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string to_string(RealityCertificate c) {
  switch (c) {
    case RealityCertificate::RankDim:
      return "rank-dim";
    case RealityCertificate::TopDim:
      return "top-dim";
    case RealityCertificate::ComplexSplit:
      return "complex-split";
    case RealityCertificate::RankDeficit:
      return "rank-deficit";
    case RealityCertificate::NotRadical:
      return "not-radical";
    case RealityCertificate::None:
      return "none";
  }
  return "?";
}

std::string to_string(EqualityKind k) {
  switch (k) {
    case EqualityKind::Equal:
      return "Equal";
    case EqualityKind::NotEqual:
      return "NotEqual";
    case EqualityKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

ComponentReality component_reality(const Component& comp) {
  ComponentReality cr;
  const Ideal& c = comp.ideal;
  int n = c.nvars();
  cr.ideal = c;
  cr.evidence = comp.evidence;
  cr.dimension = dimension(c);
  if (!is_radical(c)) {
    cr.verdict = RealityKind::NotReal;
    cr.certificate = RealityCertificate::NotRadical;
    cr.note = "component is not radical";
    return cr;
  }
  if (comp.evidence == PrimeEvidence::NotPrime) {
    cr.note = "component is not prime";
    return cr;
  }
  SplitResult split = complexified_split(c);
  if (split.verdict == SplitVerdict::Split) {
    cr.verdict = RealityKind::NotReal;
    cr.certificate = RealityCertificate::ComplexSplit;
    cr.split = split.witnesses.front();
    return cr;
  }
  ComponentSearch search = search_component(c, SemialgebraicSet::whole(n));
  if (search.accepted) {
    cr.verdict = RealityKind::Real;
    cr.point = search.point;
    cr.rank = search.rank;
    cr.certificate = search.rank == n - cr.dimension ? RealityCertificate::RankDim : RealityCertificate::TopDim;
    return cr;
  }
  if (search.refinement_error) {
    cr.note = "refinement error in the cell search";
    return cr;
  }
  // top-dimensional cells miss V(C): record the best rank over its real points
  cr.verdict = RealityKind::NotReal;
  cr.certificate = RealityCertificate::RankDeficit;
  CadTree tree = build_cad(n, c.basis(), {});
  for (const auto& cell : variety_cells(tree, c.basis(), SemialgebraicSet::whole(n))) {
    int r = rank_at(c, cell.sample);
    if (r > cr.rank) {
      cr.rank = r;
      cr.point = cell.sample;
    }
  }
  if (!cr.point) cr.note = "no real points";
  return cr;
}

}  // namespace

RealityVerdict is_real(const Ideal& i, const std::optional<std::vector<Ideal>>& hint) {
  RealityVerdict v;
  v.nvars = i.nvars();
  if (i.is_unit()) {
    v.verdict = RealityKind::Real;
    return v;
  }
  DecompositionCertificate cert;
  try {
    cert = decompose_scoped(i, hint);
  } catch (const UnsupportedScope&) {
    SplitResult split = complexified_split(i);
    if (split.verdict != SplitVerdict::Split) throw;
    ComponentReality cr;
    cr.ideal = i;
    cr.dimension = dimension(i);
    cr.verdict = RealityKind::NotReal;
    cr.certificate = RealityCertificate::ComplexSplit;
    cr.split = split.witnesses.front();
    cr.note = "splitting witness for the whole ideal";
    v.components.push_back(cr);
    v.verdict = RealityKind::NotReal;
    v.certificate = RealityCertificate::ComplexSplit;
    return v;
  }
  v.origin = cert.origin;
  for (const auto& comp : cert.components) v.components.push_back(component_reality(comp));
  auto first = [&v](RealityKind k) {
    return std::find_if(v.components.begin(), v.components.end(), [k](const auto& c) { return c.verdict == k; });
  };
  if (auto it = first(RealityKind::NotReal); it != v.components.end()) {
    v.verdict = RealityKind::NotReal;
    v.certificate = it->certificate;
  } else if (first(RealityKind::Inconclusive) != v.components.end()) {
    v.verdict = RealityKind::Inconclusive;
  } else {
    v.verdict = RealityKind::Real;
    bool all_rank = std::all_of(v.components.begin(), v.components.end(),
                                [](const auto& c) { return c.certificate == RealityCertificate::RankDim; });
    v.certificate = all_rank ? RealityCertificate::RankDim : RealityCertificate::TopDim;
  }
  return v;
}

EqualityVerdict check_equality(const SemialgebraicSet& s, const Ideal& i, const std::optional<std::vector<Ideal>>& hint) {
  EqualityVerdict v;
  v.nvars = i.nvars();
  if (i.is_unit()) {
    v.verdict = EqualityKind::Equal;
    return v;
  }
  DecompositionCertificate cert = decompose_scoped(i, hint);
  v.origin = cert.origin;
  for (const auto& comp : cert.components) {
    ComponentEquality ce;
    ce.ideal = comp.ideal;
    ce.evidence = comp.evidence;
    ce.search.dimension = dimension(comp.ideal);
    if (!is_radical(comp.ideal)) {
      ce.reason = "component is not radical";
    } else if (comp.evidence == PrimeEvidence::NotPrime) {
      ce.definite = false;
      ce.reason = "component is not prime";
    } else if (complexified_split(comp.ideal).verdict == SplitVerdict::Split) {
      ce.reason = "component splits over the Gaussian rationals";
    } else {
      ce.search = search_component(comp.ideal, s);
      ce.accepted = ce.search.accepted;
      if (ce.accepted) {
        ce.reason = "open cell of top dimension meets S on the variety";
      } else if (ce.search.refinement_error) {
        ce.definite = false;
        ce.reason = "refinement error in the cell search";
      } else {
        ce.reason = "no open cell of top dimension meets S on the variety";
      }
    }
    v.components.push_back(std::move(ce));
  }
  bool undecided = false;
  for (std::size_t k = 0; k < v.components.size(); ++k) {
    const auto& ce = v.components[k];
    if (ce.accepted) continue;
    if (ce.definite && v.failing < 0) v.failing = static_cast<int>(k);
    if (!ce.definite) undecided = true;
  }
  v.verdict = v.failing >= 0 ? EqualityKind::NotEqual : undecided ? EqualityKind::Inconclusive : EqualityKind::Equal;
  return v;
}

namespace {

Ideal repair(Ideal c) {
  for (int round = 0; round < 16; ++round) {
    c = scoped_radical(c);
    if (c.is_unit()) return c;
    SplitResult split = complexified_split(c);
    if (split.verdict != SplitVerdict::Split) return c;
    std::vector<MPoly> extra;
    for (const auto& w : split.witnesses) {
      extra.push_back(w.re);
      extra.push_back(w.im);
    }
    c = c.plus(extra).canonical();
  }
  throw Error("internal error: component repair did not stabilize");
}

// Lowest-degree polynomial cutting out the base projection of each surviving
// cell, combined by lcm, in original coordinates.
MPoly cutting_polynomial(const Ideal& c, const SemialgebraicSet& s) {
  Frame f(c, s);
  int n = f.n;
  CadTree tree = build_cad(n, f.gens, f.set.polynomials());
  MPoly acc = MPoly::constant(n, Rational(1));
  for (auto idx : variety_cell_indices(tree, f.gens, f.set)) {
    const Cell* section = nullptr;
    for (int k = f.dim; k >= 1 && !section; --k) {
      const Cell& a = ancestor(tree, n, idx, k);
      if (a.kind == CellKind::Section) section = &a;
    }
    if (!section) throw Undecidable("surviving cell lies over an open base cell");
    MPoly best = *std::min_element(section->defining.begin(), section->defining.end(), [](const MPoly& a, const MPoly& b) {
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return a.to_string() < b.to_string();
    });
    acc = lcm(acc, f.original(best));
  }
  return acc.primitive();
}

}  // namespace

AugmentRound augment(const SemialgebraicSet& s, const Ideal& i, const std::optional<std::vector<Ideal>>& hint) {
  AugmentRound r;
  r.input = i;
  int n = i.nvars();
  DecompositionCertificate cert = decompose_scoped(i, hint);
  std::vector<Ideal> repaired;
  for (const auto& comp : cert.components) {
    Ideal c = repair(comp.ideal);
    if (c.is_unit()) continue;
    if (std::any_of(repaired.begin(), repaired.end(), [&c](const Ideal& o) { return o == c; })) continue;
    repaired.push_back(c);
  }
  // a component containing another one adds nothing to the intersection
  for (std::size_t a = 0; a < repaired.size(); ++a) {
    for (std::size_t b = 0; b < repaired.size(); ++b) {
      if (a != b && repaired[a].contains(repaired[b])) {
        repaired.erase(repaired.begin() + static_cast<std::ptrdiff_t>(a));
        a = static_cast<std::size_t>(-1);
        break;
      }
    }
  }
  r.repaired = repaired;

  std::vector<ComponentSearch> searches;
  for (std::size_t t = 0; t < repaired.size(); ++t) {
    searches.push_back(search_component(repaired[t], s));
    if (!searches.back().accepted) {
      if (searches.back().refinement_error) throw Undecidable("refinement error while searching a component");
      r.failing.push_back(static_cast<int>(t));
    }
  }
  for (int t : r.failing) {
    if (r.chosen < 0 || searches[static_cast<std::size_t>(t)].dimension > searches[static_cast<std::size_t>(r.chosen)].dimension)
      r.chosen = t;
  }

  for (std::size_t t = 0; t < repaired.size(); ++t) {
    MPoly add(n);
    bool failing = std::find(r.failing.begin(), r.failing.end(), static_cast<int>(t)) != r.failing.end();
    if (failing) {
      add = cutting_polynomial(repaired[t], s);
    } else if (r.chosen >= 0) {
      const Ideal& chosen = repaired[static_cast<std::size_t>(r.chosen)];
      for (const auto& g : repaired[t].basis()) {
        if (!chosen.contains(g)) {
          add = g;
          break;
        }
      }
    }
    r.added.push_back(add);
    Ideal next = add.is_zero() ? repaired[t] : repaired[t].plus({add}).canonical();
    if (!next.is_unit()) r.components.push_back(next);
  }
  r.result = r.components.empty() ? Ideal::unit(n, i.order()) : intersect(r.components).with_order(i.order()).canonical();
  if (!r.result.contains(i)) throw Error("internal error: augmented ideal does not contain the input");
  if (i.contains(r.result)) throw Error("augmentation did not enlarge the ideal");
  return r;
}

AugmentTrace augment_until_equal(const SemialgebraicSet& s, const Ideal& i, const std::optional<std::vector<Ideal>>& hint,
                                 int cap) {
  AugmentTrace trace;
  Ideal cur = i;
  std::optional<std::vector<Ideal>> h = hint;
  for (int round = 0; round <= cap; ++round) {
    trace.final_verdict = check_equality(s, cur, h);
    if (trace.final_verdict.verdict != EqualityKind::NotEqual) {
      trace.result = cur;
      if (h) trace.components = *h;
      return trace;
    }
    if (round == cap) break;
    trace.rounds.push_back(augment(s, cur, h));
    cur = trace.rounds.back().result;
    h = trace.rounds.back().components;
    if (h->empty()) h.reset();
  }
  throw Error("augmentation did not reach equality within " + std::to_string(cap) + " rounds");
}

std::string render_point(const Point& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? ", " : "") + p[k].to_string(6);
  return out + ")";
}

std::string report(const RealityVerdict& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "verdict: " << to_string(v.verdict) << '\n';
  os << "certificate: " << to_string(v.certificate) << '\n';
  os << "decomposition: " << to_string(v.origin) << '\n';
  for (std::size_t k = 0; k < v.components.size(); ++k) {
    const auto& c = v.components[k];
    os << "component " << k + 1 << ": " << c.ideal.to_string(names) << " primality " << to_string(c.evidence) << '\n';
    os << "  verdict: " << to_string(c.verdict) << " certificate " << to_string(c.certificate) << '\n';
    os << "  rank " << c.rank << " dim " << c.dimension << " n " << v.nvars << '\n';
    if (c.point) os << "  point: " << render_point(*c.point) << '\n';
    if (c.split) os << "  split: " << c.split->to_string(names) << '\n';
    if (!c.note.empty()) os << "  note: " << c.note << '\n';
  }
  return os.str();
}

std::string report(const EqualityVerdict& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "verdict: " << to_string(v.verdict) << '\n';
  os << "decomposition: " << to_string(v.origin) << '\n';
  if (v.failing >= 0) os << "failing component: " << v.failing + 1 << '\n';
  for (std::size_t k = 0; k < v.components.size(); ++k) {
    const auto& c = v.components[k];
    os << "component " << k + 1 << ": " << c.ideal.to_string(names) << " primality " << to_string(c.evidence) << " dim "
       << c.search.dimension << '\n';
    os << "  " << (c.accepted ? "accepted" : "rejected") << ": " << c.reason << '\n';
    if (!c.search.coordinates.empty() || c.search.open_cells > 0) {
      os << "  coordinates: " << join_names(c.search.coordinates, names) << '\n';
      os << "  open cells: " << c.search.open_cells << '\n';
    }
    if (c.search.point) {
      os << "  point: " << render_point(*c.search.point) << '\n';
      os << "  interior " << (c.search.interior ? "yes" : "no") << " rank " << c.search.rank << '\n';
    }
  }
  return os.str();
}

std::string report(const AugmentTrace& t, const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t k = 0; k < t.rounds.size(); ++k) {
    const auto& r = t.rounds[k];
    os << "round " << k + 1 << '\n';
    os << "  input: " << r.input.to_string(names) << '\n';
    for (std::size_t c = 0; c < r.repaired.size(); ++c) {
      os << "  component " << c + 1 << ": " << r.repaired[c].to_string(names);
      bool failing = std::find(r.failing.begin(), r.failing.end(), static_cast<int>(c)) != r.failing.end();
      os << (failing ? " failing" : " passing");
      if (static_cast<int>(c) == r.chosen) os << " chosen";
      if (!r.added[c].is_zero()) os << " add " << r.added[c].to_string(names);
      os << '\n';
    }
    os << "  result: " << r.result.to_string(names) << '\n';
  }
  os << "final: " << t.result.to_string(names) << '\n';
  os << "final verdict: " << to_string(t.final_verdict.verdict) << '\n';
  return os.str();
}

}  // namespace realideal

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "realideal/real/real.hpp"
#include "realideal/sdp/sdp.hpp"

namespace realideal {

namespace {

int ceil_half(int d) { return (d + 1) / 2; }

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

using MomentIndex = std::map<Exponent, int>;

MomentIndex index_of(const std::vector<Exponent>& moments) {
  MomentIndex idx;
  for (std::size_t i = 0; i < moments.size(); ++i) idx[moments[i]] = static_cast<int>(i);
  return idx;
}

// Localizing matrix entries: L(g x^(a+b)) expressed over the moments.
// Calls emit(moment, row, col, coefficient) for row <= col.
template <class Emit>
void localizing(const MPoly& g, const std::vector<Exponent>& basis, const MomentIndex& idx, Emit emit) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      Exponent ab = add(basis[a], basis[b]);
      for (const auto& t : g.terms()) emit(idx.at(add(ab, t.exp)), static_cast<int>(a), static_cast<int>(b), t.coeff);
    }
}

std::vector<Exponent> grlex_degree(int nvars, int d) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  // recursive enumeration of exponents of degree exactly d, x1 exponent descending
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, left - a);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace

std::vector<Exponent> monomial_basis(int nvars, int d) {
  std::vector<Exponent> out;
  for (int k = 0; k <= d; ++k) {
    auto part = grlex_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int base_order(const Pop& pop) {
  int k0 = pop.objective.is_zero() ? 0 : pop.objective.total_degree();
  for (const auto& g : pop.inequalities) k0 = std::max(k0, ceil_half(g.total_degree()));
  for (const auto& h : pop.equalities) k0 = std::max(k0, ceil_half(h.total_degree()));
  return k0;
}

TruncationData truncation(const Pop& pop, int k) {
  TruncationData t;
  t.k = k;
  t.k0 = base_order(pop);
  if (k < t.k0) throw InvalidInput("relaxation order " + std::to_string(k) + " is below " + std::to_string(t.k0));
  for (const auto& g : pop.inequalities) {
    int room = k - g.total_degree();
    t.d.push_back(room < 0 ? -1 : room / 2);
  }
  for (const auto& h : pop.equalities) t.e.push_back(k - h.total_degree());
  t.d0 = k / 2;
  t.moments = monomial_basis(pop.nvars, k);
  return t;
}

SdpInstance build_primal(const Pop& pop, int k) {
  TruncationData t = truncation(pop, k);
  SdpInstance inst;
  inst.nvars = pop.nvars;
  inst.moments = t.moments;
  MomentIndex idx = index_of(t.moments);
  std::size_t m = t.moments.size();
  inst.matrices.assign(m, {});
  // moment i sits in matrices[i]; matrices[0] collects the constant part with a sign flip
  auto emit_to = [&inst](int block) {
    return [&inst, block](int moment, int row, int col, const Rational& c) {
      Rational v = moment == 0 ? Rational(-c) : c;
      inst.matrices[static_cast<std::size_t>(moment)].push_back({block, row, col, v});
    };
  };
  MPoly one = MPoly::constant(pop.nvars, Rational(1));
  auto basis0 = monomial_basis(pop.nvars, t.d0);
  inst.blocks.push_back({static_cast<int>(basis0.size()), false, "moment"});
  localizing(one, basis0, idx, emit_to(0));
  for (std::size_t i = 0; i < pop.inequalities.size(); ++i) {
    if (t.d[i] < 0) continue;
    auto basis = monomial_basis(pop.nvars, t.d[i]);
    int block = static_cast<int>(inst.blocks.size());
    inst.blocks.push_back({static_cast<int>(basis.size()), false, "localizing g" + std::to_string(i + 1)});
    localizing(pop.inequalities[i], basis, idx, emit_to(block));
  }
  int rows = 0;
  int eq_block = static_cast<int>(inst.blocks.size());
  for (std::size_t j = 0; j < pop.equalities.size(); ++j) {
    if (t.e[j] < 0) continue;
    for (const auto& beta : monomial_basis(pop.nvars, t.e[j])) {
      for (int sign : {1, -1}) {
        for (const auto& term : pop.equalities[j].terms()) {
          int moment = idx.at(add(beta, term.exp));
          Rational v = term.coeff * sign;
          if (moment == 0) v = -v;
          inst.matrices[static_cast<std::size_t>(moment)].push_back({eq_block, rows, rows, v});
        }
        ++rows;
      }
    }
  }
  if (rows > 0) inst.blocks.push_back({rows, true, "equalities"});
  // merge duplicate positions and drop zeros
  for (auto& mat : inst.matrices) {
    std::map<std::tuple<int, int, int>, Rational> acc;
    for (const auto& e : mat) acc[{e.block, e.row, e.col}] += e.value;
    mat.clear();
    for (const auto& [key, v] : acc)
      if (sgn(v) != 0) mat.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
  }
  inst.offset = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational c = 0;
    for (const auto& term : pop.objective.terms())
      if (term.exp == t.moments[i]) c = term.coeff;
    if (i == 0) {
      inst.offset = c;
    } else {
      inst.objective.push_back(c);
    }
  }
  return inst;
}

GramSystem build_dual(const Pop& pop, int k) {
  TruncationData t = truncation(pop, k);
  GramSystem sys;
  sys.moments = t.moments;
  MomentIndex idx = index_of(t.moments);
  std::size_t m = t.moments.size();
  sys.rows.assign(m, {});
  sys.multiplier_rows.assign(m, {});
  sys.rhs.assign(m, Rational(0));
  for (const auto& term : pop.objective.terms()) sys.rhs[static_cast<std::size_t>(idx.at(term.exp))] = term.coeff;

  // sigma_i g_i = sum_(a,b) G[a][b] x^(a+b) g_i; coefficients per moment index
  std::vector<MPoly> gs{MPoly::constant(pop.nvars, Rational(1))};
  std::vector<int> ds{t.d0};
  std::vector<std::string> labels{"moment"};
  for (std::size_t i = 0; i < pop.inequalities.size(); ++i) {
    if (t.d[i] < 0) continue;
    gs.push_back(pop.inequalities[i]);
    ds.push_back(t.d[i]);
    labels.push_back("localizing g" + std::to_string(i + 1));
  }
  for (std::size_t b = 0; b < gs.size(); ++b) {
    auto basis = monomial_basis(pop.nvars, ds[b]);
    sys.blocks.push_back({static_cast<int>(basis.size()), false, labels[b]});
    for (const auto& term : gs[b].terms()) {
      for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = r; c < basis.size(); ++c) {
          Exponent alpha = add(add(basis[r], basis[c]), term.exp);
          sys.rows[static_cast<std::size_t>(idx.at(alpha))].push_back(
              {static_cast<int>(b), static_cast<int>(r), static_cast<int>(c), term.coeff});
        }
    }
  }
  for (auto& row : sys.rows) {
    std::map<std::tuple<int, int, int>, Rational> acc;
    for (const auto& e : row) acc[{e.block, e.row, e.col}] += e.value;
    row.clear();
    for (const auto& [key, v] : acc)
      if (sgn(v) != 0) row.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
  }
  for (std::size_t j = 0; j < pop.equalities.size(); ++j) {
    if (t.e[j] < 0) continue;
    for (const auto& beta : monomial_basis(pop.nvars, t.e[j])) {
      int col = static_cast<int>(sys.multipliers.size());
      sys.multipliers.emplace_back(static_cast<int>(j), beta);
      for (const auto& term : pop.equalities[j].terms())
        sys.multiplier_rows[static_cast<std::size_t>(idx.at(add(beta, term.exp)))].emplace_back(col, term.coeff);
    }
  }
  return sys;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::InfeasibleSuspected:
      return "infeasible-suspected";
    case SolveStatus::MaxIter:
      return "max-iter";
  }
  return "?";
}

std::string to_string(Guarantee g) {
  switch (g) {
    case Guarantee::None:
      return "none";
    case Guarantee::IdealEquality:
      return "ideal equality I(K) = I";
    case Guarantee::RankWitness:
      return "prime ideal with an interior point of full Jacobian rank";
  }
  return "?";
}

GapReport gap_report(const Pop& pop, int k_lo, int k_hi, const EqualityVerdict* verdict, double tol) {
  GapReport r;
  for (int k = k_lo; k <= k_hi; ++k) {
    GapRecord rec;
    rec.k = k;
    try {
      rec.result = solve_relaxation(pop, k, tol);
    } catch (const Error&) {
      rec.result.status = SolveStatus::InfeasibleSuspected;
    }
    r.records.push_back(rec);
  }
  if (verdict && verdict->verdict == EqualityKind::Equal) {
    r.guarantee = Guarantee::IdealEquality;
    if (verdict->components.size() == 1) {
      const auto& c = verdict->components[0];
      int n = verdict->nvars;
      if (c.evidence != PrimeEvidence::NotPrime && c.search.point && c.search.interior &&
          c.search.rank == n - c.search.dimension)
        r.guarantee = Guarantee::RankWitness;
    }
  }
  return r;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0." + std::string(static_cast<std::size_t>(digits), '0')) s.erase(0, 1);
  return s;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// |primal - dual|, or NaN when either side is unbounded or infeasible.
double gap(const SolveResult& s) {
  if (!std::isfinite(s.primal) || !std::isfinite(s.dual)) return std::nan("");
  return std::abs(s.primal - s.dual);
}

}  // namespace

std::string report(const GapReport& r) {
  std::ostringstream os;
  os << "order  primal          dual            gap       status\n";
  for (const auto& rec : r.records) {
    const auto& s = rec.result;
    std::string p = fixed(s.primal, 9);
    std::string d = fixed(s.dual, 9);
    os << rec.k << std::string(rec.k < 10 ? 6 : 5, ' ') << p << std::string(p.size() < 16 ? 16 - p.size() : 1, ' ') << d
       << std::string(d.size() < 16 ? 16 - d.size() : 1, ' ') << (std::isnan(gap(s)) ? std::string("-       ") : sci(gap(s))) << "  "
       << to_string(s.status) << '\n';
  }
  os << "guarantee: " << to_string(r.guarantee) << '\n';
  return os.str();
}

std::string table(const GapReport& r) {
  std::ostringstream os;
  os << "k\tprimal\tdual\tgap\tstatus\n";
  for (const auto& rec : r.records) {
    const auto& s = rec.result;
    os << rec.k << '\t' << g17(s.primal) << '\t' << g17(s.dual) << '\t' << (std::isnan(gap(s)) ? std::string("-") : g17(gap(s))) << '\t'
       << to_string(s.status) << '\n';
  }
  return os.str();
}

std::string to_sdpa(const SdpInstance& inst) {
  std::ostringstream os;
  os << "* objective offset " << g17(inst.offset.get_d()) << '\n';
  os << inst.objective.size() << '\n' << inst.blocks.size() << '\n';
  for (std::size_t b = 0; b < inst.blocks.size(); ++b)
    os << (b ? " " : "") << (inst.blocks[b].diagonal ? -inst.blocks[b].size : inst.blocks[b].size);
  os << '\n';
  for (std::size_t i = 0; i < inst.objective.size(); ++i) os << (i ? " " : "") << g17(inst.objective[i].get_d());
  os << '\n';
  for (std::size_t mat = 0; mat < inst.matrices.size(); ++mat)
    for (const auto& e : inst.matrices[mat])
      os << mat << ' ' << e.block + 1 << ' ' << e.row + 1 << ' ' << e.col + 1 << ' ' << g17(e.value.get_d()) << '\n';
  return os.str();
}

SdpInstance from_sdpa(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> tokens;
  SdpInstance inst;
  while (std::getline(in, line)) {
    if (!line.empty() && (line[0] == '*' || line[0] == '"')) {
      const std::string tag = "* objective offset ";
      if (line.rfind(tag, 0) == 0) inst.offset = Rational(std::stod(line.substr(tag.size())));
      continue;
    }
    for (char& c : line)
      if (c == ',' || c == '{' || c == '}' || c == '(' || c == ')') c = ' ';
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  std::size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= tokens.size()) throw InvalidInput("truncated SDPA data");
    return tokens[pos++];
  };
  try {
    int m = std::stoi(next());
    int nblocks = std::stoi(next());
    for (int b = 0; b < nblocks; ++b) {
      int s = std::stoi(next());
      inst.blocks.push_back({std::abs(s), s < 0, ""});
    }
    for (int i = 0; i < m; ++i) inst.objective.emplace_back(std::stod(next()));
    inst.matrices.assign(static_cast<std::size_t>(m + 1), {});
    while (pos < tokens.size()) {
      int mat = std::stoi(next());
      int block = std::stoi(next()) - 1;
      int row = std::stoi(next()) - 1;
      int col = std::stoi(next()) - 1;
      double v = std::stod(next());
      if (mat < 0 || mat > m || block < 0 || block >= nblocks) throw InvalidInput("SDPA entry out of range");
      inst.matrices[static_cast<std::size_t>(mat)].push_back({block, std::min(row, col), std::max(row, col), Rational(v)});
    }
  } catch (const std::logic_error&) {
    throw InvalidInput("malformed SDPA number");
  }
  return inst;
}

void export_sdpa(const SdpInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << to_sdpa(inst);
  if (!out) throw Error("cannot write " + path);
}

}  // namespace realideal

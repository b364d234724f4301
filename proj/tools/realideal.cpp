#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "realideal/cli/problem.hpp"
#include "realideal/poly/parse.hpp"
#include "realideal/real/real.hpp"
#include "realideal/sdp/sdp.hpp"

using namespace realideal;

namespace {

constexpr int kExitDefinite = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct Options {
  std::string file;
  bool dump_cad = false;
  std::string sdpa_dir;
  double tol = kDefaultTolerance;
  int max_order = -1;
};

// Error raised inside a named pipeline stage.
struct StageError {
  std::string stage;
  std::string message;
  bool undecided = false;
};

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Undecidable& e) {
    throw StageError{name, e.what(), true};
  } catch (const std::exception& e) {
    throw StageError{name, e.what()};
  }
}

ProblemFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StageError{"input", "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return parse_problem(text);
  } catch (const ParseError& e) {
    auto [line, col] = line_column(text, e.offset());
    throw StageError{"parse", path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what()};
  }
}

std::string verdict_line(EqualityKind k) {
  switch (k) {
    case EqualityKind::Equal:
      return "result: Equal (I(K)=I)";
    case EqualityKind::NotEqual:
      return "result: NotEqual (I(K)!=I)";
    case EqualityKind::Inconclusive:
      break;
  }
  return "result: Inconclusive";
}

void dump_cad(const ProblemFile& p, std::ostream& out) {
  CadTree tree = stage("cad", [&] { return build_cad(p.nvars(), p.ideal().basis(), p.set().polynomials()); });
  out << dump(tree, p.vars);
}

std::pair<int, int> orders(const ProblemFile& p, const Pop& pop, const Options& o) {
  int k0 = base_order(pop);
  int lo = p.order ? std::max(p.order->first, k0) : k0;
  int hi = p.order ? p.order->second : lo + 2;
  if (o.max_order >= 0) hi = o.max_order;
  if (hi < lo) throw StageError{"relaxation", "order range " + std::to_string(lo) + ".." + std::to_string(hi) + " is empty"};
  return {lo, hi};
}

int check_real(const ProblemFile& p, const Options& o, std::ostream& out) {
  RealityVerdict v = stage("reality", [&] { return is_real(p.ideal(), p.hint_ideals()); });
  out << "result: " << to_string(v.verdict) << '\n' << report(v, p.vars);
  if (o.dump_cad) dump_cad(p, out);
  return v.verdict == RealityKind::Inconclusive ? kExitInconclusive : kExitDefinite;
}

int check_ik(const ProblemFile& p, const Options& o, std::ostream& out) {
  EqualityVerdict v = stage("equality", [&] { return check_equality(p.set(), p.ideal(), p.hint_ideals()); });
  out << verdict_line(v.verdict) << '\n' << report(v, p.vars);
  if (o.dump_cad) dump_cad(p, out);
  return v.verdict == EqualityKind::Inconclusive ? kExitInconclusive : kExitDefinite;
}

void print_generators(const Ideal& i, const std::vector<std::string>& names, std::ostream& out) {
  out << "generators:\n";
  for (const auto& g : i.basis()) out << "  " << g.to_string(names) << '\n';
}

int augment_command(const ProblemFile& p, const Options& o, std::ostream& out) {
  AugmentTrace t;
  try {
    t = stage("augment", [&] { return augment_until_equal(p.set(), p.ideal(), p.hint_ideals()); });
  } catch (const StageError&) {
    out << "result: Inconclusive\n";
    throw;
  }
  out << verdict_line(t.final_verdict.verdict) << '\n' << report(t, p.vars);
  print_generators(t.result, p.vars, out);
  if (o.dump_cad) dump_cad(p, out);
  return t.final_verdict.verdict == EqualityKind::Equal ? kExitDefinite : kExitInconclusive;
}

int relax(const ProblemFile& p, const Options& o, std::ostream& out) {
  Pop pop = stage("relaxation", [&] { return p.pop(); });
  auto [lo, hi] = orders(p, pop, o);
  if (!o.sdpa_dir.empty()) std::filesystem::create_directories(o.sdpa_dir);
  for (int k = lo; k <= hi; ++k) {
    SdpInstance inst = stage("relaxation", [&] { return build_primal(pop, k); });
    out << "order " << k << ": " << inst.objective.size() << " free moments, blocks";
    for (const auto& b : inst.blocks) out << ' ' << (b.diagonal ? "diag " : "") << b.size << " (" << b.label << ')';
    out << '\n';
    if (!o.sdpa_dir.empty()) {
      std::string path = (std::filesystem::path(o.sdpa_dir) / ("order" + std::to_string(k) + ".dat-s")).string();
      stage("export", [&] {
        export_sdpa(inst, path);
        return 0;
      });
      out << "  wrote " << path << '\n';
    }
  }
  return kExitDefinite;
}

int solve(const ProblemFile& p, const Options& o, std::ostream& out) {
  Pop pop = stage("relaxation", [&] { return p.pop(); });
  auto [lo, hi] = orders(p, pop, o);
  GapReport r = stage("solve", [&] { return gap_report(pop, lo, hi, nullptr, o.tol); });
  out << report(r) << table(r);
  return kExitDefinite;
}

int full_report(const ProblemFile& p, const Options& o, std::ostream& out) {
  int code = kExitDefinite;
  if (!p.equations.empty()) {
    RealityVerdict rv = stage("reality", [&] { return is_real(p.ideal(), p.hint_ideals()); });
    out << "reality: " << to_string(rv.verdict) << " (" << to_string(rv.certificate) << ")\n";
  }
  EqualityVerdict v = stage("equality", [&] { return check_equality(p.set(), p.ideal(), p.hint_ideals()); });
  out << "equality: " << verdict_line(v.verdict).substr(8) << '\n';
  Ideal ideal = p.ideal();
  if (v.verdict == EqualityKind::NotEqual) {
    AugmentTrace t = stage("augment", [&] { return augment_until_equal(p.set(), p.ideal(), p.hint_ideals()); });
    out << "augmented in " << t.rounds.size() << " round(s) to " << t.result.to_string(p.vars) << '\n';
    ideal = t.result;
    v = t.final_verdict;
    out << "equality after augmentation: " << verdict_line(v.verdict).substr(8) << '\n';
  }
  if (v.verdict == EqualityKind::Inconclusive) code = kExitInconclusive;
  if (p.objective) {
    ProblemFile q = p;
    q.equations = ideal.basis();
    Pop pop = stage("relaxation", [&] { return q.pop(); });
    auto [lo, hi] = orders(q, pop, o);
    GapReport r = stage("solve", [&] { return gap_report(pop, lo, hi, &v, o.tol); });
    out << report(r);
  }
  if (o.dump_cad) dump_cad(p, out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real vanishing ideals, augmentation and moment relaxations"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const ProblemFile&, const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"check-real", "decide whether I(V(I)) = I", check_real},
      {"check-ik", "decide whether I(S ∩ V(I)) = I", check_ik},
      {"augment", "enlarge I until I(S ∩ V(I)) = I", augment_command},
      {"relax", "build the moment relaxations", relax},
      {"solve", "solve the moment and Gram relaxations", solve},
      {"report", "run the full pipeline", full_report},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "problem file")->required();
    sub->add_flag("--dump-cad", o.dump_cad, "print the cylindrical decomposition");
    sub->add_option("--sdpa", o.sdpa_dir, "write SDPA files into this directory");
    sub->add_option("--tol", o.tol, "solver tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-order", o.max_order, "highest relaxation order")->check(CLI::NonNegativeNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  for (const auto& c : commands) {
    if (!app.got_subcommand(c.name)) continue;
    std::ostringstream out;
    try {
      ProblemFile p = load(o.file);
      int code = c.run(p, o, out);
      std::cout << out.str();
      return code;
    } catch (const StageError& e) {
      std::cout << out.str();
      std::cerr << "error in " << e.stage << ": " << e.message << '\n';
      return e.undecided ? kExitInconclusive : kExitError;
    }
  }
  return kExitError;
}

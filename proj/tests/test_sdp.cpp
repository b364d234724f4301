#include <chrono>
#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "realideal/poly/parse.hpp"
#include "realideal/real/real.hpp"
#include "realideal/sdp/sdp.hpp"

using namespace realideal;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

MPoly P(const std::string& s, const std::vector<std::string>& names) { return parse_poly(s, names); }

Pop pop(const std::vector<std::string>& names, const char* f, std::vector<const char*> g, std::vector<const char*> h) {
  Pop p;
  p.nvars = static_cast<int>(names.size());
  p.objective = P(f, names);
  for (const char* s : g) p.inequalities.push_back(P(s, names));
  for (const char* s : h) p.equalities.push_back(P(s, names));
  return p;
}

Pop line_pop() { return pop(kXY, "x^2+y^2", {}, {"x+y-1"}); }

}  // namespace

TEST_CASE("graded lex moment basis") {
  auto b = monomial_basis(2, 2);
  std::vector<Exponent> want{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(b == want);
  CHECK(monomial_basis(3, 3).size() == 20);
  CHECK(monomial_basis(2, 0).size() == 1);
}

TEST_CASE("truncation degrees") {
  Pop p = pop(kXYZ, "x+z", {"1-x^2-y^2-z^2", "x^3"}, {"x*y-z", "x^4"});
  CHECK(base_order(p) == 2);
  auto t = truncation(p, 4);
  CHECK(t.d0 == 2);
  CHECK(t.d == std::vector<int>{1, 0});
  CHECK(t.e == std::vector<int>{2, 0});
  auto t5 = truncation(p, 5);
  CHECK(t5.d == std::vector<int>{1, 1});
  CHECK(t5.d0 == 2);
  CHECK_THROWS_AS(truncation(p, 1), InvalidInput);
  // a degree-4 localizing polynomial does not fit at order 3
  Pop q = pop(kXY, "x", {"1-x^4-y^4"}, {});
  CHECK(base_order(q) == 2);
  CHECK(truncation(q, 3).d == std::vector<int>{-1});
  CHECK(build_primal(q, 3).blocks.size() == 1);
  CHECK(build_primal(q, 4).blocks.size() == 2);
}

TEST_CASE("moment side data for the line") {
  SdpInstance inst = build_primal(line_pop(), 2);
  REQUIRE(inst.moments.size() == 6);
  REQUIRE(inst.blocks.size() == 2);
  CHECK(inst.blocks[0].size == 3);
  CHECK_FALSE(inst.blocks[0].diagonal);
  // rows L(h), L(xh), L(yh), each twice with opposite signs
  CHECK(inst.blocks[1].size == 6);
  CHECK(inst.blocks[1].diagonal);
  CHECK(inst.offset == 0);
  std::vector<Rational> c{0, 0, 1, 0, 1};
  CHECK(inst.objective == c);
  // F_0 carries minus the constant part: the moment-block (1,1) entry and the L(h) constant
  std::vector<SdpEntry> f0{{0, 0, 0, Rational(-1)}, {1, 0, 0, Rational(1)}, {1, 1, 1, Rational(-1)}};
  CHECK(inst.matrices[0] == f0);
  // the moment of x appears in L(h) and L(xh) rows: x*(x+y-1) has -x
  bool in_h = false;
  bool in_xh = false;
  for (const auto& e : inst.matrices[1]) {
    if (e.block == 1 && e.row == 0) in_h = e.value == 1;
    if (e.block == 1 && e.row == 2) in_xh = e.value == -1;
  }
  CHECK(in_h);
  CHECK(in_xh);
}

TEST_CASE("Gram side data reproduces a hand certificate") {
  // x^2+y^2-1/2 = (x-y)^2/2 + ((x+y+1)/2)(x+y-1)
  Pop p = line_pop();
  GramSystem sys = build_dual(p, 2);
  REQUIRE(sys.blocks.size() == 1);
  REQUIRE(sys.multipliers.size() == 3);
  std::vector<std::vector<double>> g{{0, 0, 0}, {0, 0.5, -0.5}, {0, -0.5, 0.5}};
  std::vector<double> r{0.5, 0.5, 0.5};
  double lambda = 0.5;
  for (std::size_t a = 0; a < sys.moments.size(); ++a) {
    double v = sys.rhs[a].get_d() - (a == 0 ? lambda : 0.0);
    for (const auto& e : sys.rows[a])
      v -= e.value.get_d() * g[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] * (e.row == e.col ? 1 : 2);
    for (const auto& [col, c] : sys.multiplier_rows[a]) v -= c.get_d() * r[static_cast<std::size_t>(col)];
    CHECK(std::abs(v) < 1e-15);
  }
}

TEST_CASE("line relaxation reaches one half on both sides") {
  auto start = std::chrono::steady_clock::now();
  SolveResult s = solve_relaxation(line_pop(), 2, 1e-8);
  CHECK(s.status == SolveStatus::Optimal);
  CHECK(std::abs(s.primal - 0.5) <= 1e-6);
  CHECK(std::abs(s.dual - 0.5) <= 1e-6);
  CHECK(s.gram_residual < 1e-6);
  CHECK(s.moments[0] == 1.0);
  CHECK(std::abs(s.moments[1] - 0.5) < 1e-5);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("unconstrained and ball problems") {
  SolveResult s = solve_relaxation(pop(kXY, "x^2", {}, {}), 2);
  CHECK(s.status == SolveStatus::Optimal);
  CHECK(std::abs(s.primal) < 1e-6);
  CHECK(std::abs(s.dual) < 1e-6);
  SolveResult b = solve_relaxation(pop(kXY, "x+y", {"1-x^2-y^2"}, {}), 2);
  CHECK(b.status == SolveStatus::Optimal);
  CHECK(std::abs(b.primal + std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(b.dual + std::sqrt(2.0)) < 1e-6);
}

TEST_CASE("moment and Gram data are transposes") {
  std::vector<Pop> pops{line_pop(), pop(kXYZ, "x*y+z", {"1-x^2-y^2-z^2", "z"}, {"x-y^2"}),
                        pop(kXY, "x^3", {"x", "2-x^2-y^2"}, {})};
  for (const Pop& p : pops) {
    int k = base_order(p) + 1;
    SdpInstance inst = build_primal(p, k);
    GramSystem sys = build_dual(p, k);
    REQUIRE(inst.moments == sys.moments);
    for (std::size_t a = 0; a < inst.moments.size(); ++a) {
      std::vector<SdpEntry> want;
      for (auto e : inst.matrices[a]) {
        if (inst.blocks[static_cast<std::size_t>(e.block)].diagonal) continue;
        if (a == 0) e.value = -e.value;
        want.push_back(e);
      }
      CHECK(sys.rows[a] == want);
    }
  }
}

TEST_CASE("block count is one plus fitting localizers plus the equality block") {
  Pop p = pop(kXYZ, "z", {"1-x^2", "1-y^2", "1-z^2"}, {"x*y*z"});
  CHECK(build_primal(p, 2).blocks.size() == 4);
  CHECK(build_primal(p, 3).blocks.size() == 5);
  Pop q = pop(kXYZ, "z", {"1-x^2", "1-y^2"}, {});
  CHECK(build_primal(q, 2).blocks.size() == 3);
}

TEST_CASE("SDPA export matches the golden file and round trips") {
  Pop p = line_pop();
  p.objective = P("x^2+y^2+1", kXY);
  SdpInstance inst = build_primal(p, 2);
  std::ifstream in(std::string(REALIDEAL_TEST_DATA) + "/line_order2.dat-s");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(to_sdpa(inst) == golden.str());
  SdpInstance back = from_sdpa(golden.str());
  CHECK(back.offset == 1);
  CHECK(back.objective == inst.objective);
  CHECK(back.matrices == inst.matrices);
  REQUIRE(back.blocks.size() == inst.blocks.size());
  for (std::size_t b = 0; b < back.blocks.size(); ++b) {
    CHECK(back.blocks[b].size == inst.blocks[b].size);
    CHECK(back.blocks[b].diagonal == inst.blocks[b].diagonal);
  }
  CHECK(to_sdpa(back) == golden.str());
  CHECK_THROWS_AS(from_sdpa("2\n1\n"), InvalidInput);
  auto path = std::filesystem::temp_directory_path() / "realideal_line_order2.dat-s";
  export_sdpa(inst, path.string());
  std::ifstream written(path);
  std::stringstream text;
  text << written.rdbuf();
  CHECK(text.str() == golden.str());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(export_sdpa(inst, "/nonexistent-dir/x.dat-s"), Error);
}

TEST_CASE("weak duality and monotone orders on a batch of problems") {
  std::vector<Pop> pops{
      line_pop(),
      pop(kXY, "x+y", {"1-x^2-y^2"}, {}),
      pop(kXY, "x^2*y", {"1-x^2-y^2"}, {}),
      pop(kXY, "-x^2-y^2", {"1-x^2", "1-y^2"}, {}),
      pop(kXY, "x^4+y^4-x*y", {"4-x^2-y^2"}, {}),
      pop(kXY, "(x-1)^2+y", {"y"}, {"x^2+y^2-1"}),
      pop(kXYZ, "x*y*z", {"1-x^2-y^2-z^2"}, {}),
      pop(kXYZ, "x+y+z", {"1-(x-1)^2-(y-1)^2-(z-1)^2"}, {"y^2-x*z", "x^3-y*z", "x^2*y-z^2"}),
      pop(kXYZ, "x^2+y^2+(z-1)^2", {"1-x^2-(z-1)^2"}, {"x^2+y^2"}),
      pop(kXYZ, "z-x*y", {"1-x^2-y^2", "z+1", "1-z"}, {"z-x^2"}),
  };
  const double tol = 1e-5;
  for (const Pop& p : pops) {
    int k0 = base_order(p);
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = k0; k <= k0 + 2; ++k) {
      SolveResult s = solve_relaxation(p, k);
      if (s.status != SolveStatus::Optimal) continue;
      CHECK(s.dual <= s.primal + tol);
      CHECK(s.primal >= prev - tol);
      prev = s.primal;
    }
    CHECK(prev > -std::numeric_limits<double>::infinity());
  }
}

TEST_CASE("odd top degree left out of every block is unbounded") {
  SolveResult s = solve_relaxation(pop(kXYZ, "x*y*z", {"1-x^2-y^2-z^2"}, {}), 3);
  CHECK(s.status == SolveStatus::InfeasibleSuspected);
  CHECK(std::isinf(s.primal));
  CHECK(s.primal < 0);
}

TEST_CASE("inconsistent equality rows are infeasible") {
  SolveResult s = solve_relaxation(pop(kXY, "x", {}, {"x^2+1", "x^2"}), 2);
  CHECK(s.status == SolveStatus::InfeasibleSuspected);
  CHECK(s.primal > 0);
  CHECK(std::isinf(s.primal));
}

TEST_CASE("guarantee follows the equality verdict") {
  auto whole = SemialgebraicSet::whole(2);
  Pop p = line_pop();
  EqualityVerdict lin = check_equality(whole, Ideal(2, {P("x+y-1", kXY)}));
  REQUIRE(lin.verdict == EqualityKind::Equal);
  GapReport r = gap_report(p, 2, 3, &lin);
  CHECK(r.guarantee == Guarantee::RankWitness);
  REQUIRE(r.records.size() == 2);
  for (const auto& rec : r.records) CHECK(std::abs(rec.result.primal - rec.result.dual) <= 1e-5);

  Pop cross = pop(kXY, "x^2+y^2+x", {}, {"x*y"});
  EqualityVerdict two = check_equality(whole, Ideal(2, {P("x*y", kXY)}));
  REQUIRE(two.verdict == EqualityKind::Equal);
  CHECK(gap_report(cross, 2, 2, &two).guarantee == Guarantee::IdealEquality);

  EqualityVerdict no = check_equality(whole, Ideal(2, {P("x^2+y^2", kXY)}));
  REQUIRE(no.verdict == EqualityKind::NotEqual);
  CHECK(gap_report(pop(kXY, "x", {}, {"x^2+y^2"}), 2, 2, &no).guarantee == Guarantee::None);
  CHECK(gap_report(p, 2, 2, nullptr).guarantee == Guarantee::None);
}

TEST_CASE("reports are deterministic") {
  GapReport r = gap_report(line_pop(), 2, 3, nullptr);
  CHECK(report(r) == report(gap_report(line_pop(), 2, 3, nullptr)));
  CHECK(report(r).find("guarantee: none") != std::string::npos);
  std::string tab = table(r);
  CHECK(tab.rfind("k\tprimal\tdual\tgap\tstatus\n", 0) == 0);
  CHECK(std::count(tab.begin(), tab.end(), '\n') == 3);
}

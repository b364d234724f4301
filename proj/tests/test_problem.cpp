#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "realideal/cli/problem.hpp"
#include "realideal/poly/parse.hpp"

using namespace realideal;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t error_offset(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for: " << text);
  return 0;
}

}  // namespace

TEST_CASE("minimal set file") {
  ProblemFile p = parse_problem("vars x y; x^2+y^2 = 0;");
  CHECK(p.vars == std::vector<std::string>{"x", "y"});
  CHECK_FALSE(p.objective);
  CHECK(p.set().is_whole());
  REQUIRE(p.equations.size() == 1);
  CHECK(p.ideal() == Ideal(2, {parse_poly("x^2+y^2", p.vars)}));
}

TEST_CASE("cylinder file parses to its data") {
  ProblemFile p = parse_problem(slurp(std::filesystem::path(REALIDEAL_PROBLEMS) / "cylinder.pop"));
  const auto& n = p.vars;
  REQUIRE(p.equations.size() == 1);
  CHECK(p.equations[0] == parse_poly("(x^2+y^2+z^2)*(z-2)", n));
  REQUIRE(p.constraints.size() == 1);
  CHECK(p.constraints[0].poly == parse_poly("1-x^2-(z-1)^2", n));
  CHECK(p.constraints[0].rel == Relation::GreaterEq);
  Pop pop = p.pop();
  CHECK(pop.objective == parse_poly("x^2+y^2+(z-1)^2", n));
}

TEST_CASE("statements") {
  ProblemFile p = parse_problem(
      "# comment\nvars a b;\nminimize a*b; a >= b; # trailing\n a - 1 > 0; a = b^2;\n"
      "hint component: a - b^2;\norder 2..4;\nor { a >= 0; } { b > 1; };\n");
  CHECK(p.objective);
  REQUIRE(p.constraints.size() == 2);
  CHECK(p.constraints[0].poly == parse_poly("a-b", p.vars));
  CHECK(p.constraints[1].rel == Relation::Greater);
  CHECK(p.hints.size() == 1);
  CHECK(p.order == std::pair{2, 4});
  REQUIRE(p.alternatives.size() == 1);
  CHECK(p.alternatives[0].size() == 2);
  SemialgebraicSet s = p.set();
  CHECK(s.conjuncts.size() == 2);
  CHECK(s.conjuncts[0].size() == 3);
  CHECK_THROWS_AS(p.pop(), UnsupportedScope);
  CHECK_THROWS_AS(parse_problem("vars x; x = 0;").pop(), InvalidInput);
}

TEST_CASE("decimals are exact") {
  ProblemFile p = parse_problem("vars x; 0.1*x - 2.50 >= 0;");
  CHECK(p.constraints[0].poly == parse_poly("x/10 - 5/2", p.vars));
}

TEST_CASE("strict inequalities relax to non-strict ones") {
  Pop pop = parse_problem("vars x; minimize x; x > 0;").pop();
  REQUIRE(pop.inequalities.size() == 1);
  CHECK(pop.inequalities[0] == parse_poly("x", {"x"}));
}

TEST_CASE("error positions") {
  std::string bad = "vars x;\nx^^2 = 0;";
  std::size_t at = error_offset(bad);
  CHECK(at == bad.find("^^") + 1);
  CHECK(line_column(bad, at) == std::pair{2, 3});
  CHECK(error_offset("vars x; y = 0;") == 8);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("  # nothing\n") == 12);
  CHECK(error_offset("vars x; x >> 0;") == 11);
  CHECK(error_offset("vars x; x = 0") == 13);
  CHECK(error_offset("vars x x;") == 7);
  CHECK(error_offset("vars order;") == 5);
  CHECK(error_offset("vars x; order 3..2;") == 8);
  CHECK(error_offset("vars x; or { x = 0; };") == 13);
  CHECK(error_offset("x = 0;") == 0);
}

TEST_CASE("render then parse is the identity on every problem file") {
  int seen = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(REALIDEAL_PROBLEMS)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (f.extension() != ".pop") continue;
    ++seen;
    ProblemFile p = parse_problem(slurp(f));
    std::string text = render(p);
    ProblemFile q = parse_problem(text);
    CHECK_MESSAGE(q == p, f.string());
    CHECK(render(q) == text);
  }
  CHECK(seen >= 8);
}

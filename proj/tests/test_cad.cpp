#include <chrono>
#include <cmath>

#include "doctest.h"
#include "realideal/cad/cad.hpp"
#include "realideal/poly/parse.hpp"

using namespace realideal;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

MPoly P(const std::string& s) { return parse_poly(s, kXYZ); }

std::vector<MPoly> Ps(std::initializer_list<const char*> list) {
  std::vector<MPoly> out;
  for (const char* s : list) out.push_back(P(s));
  return out;
}

std::vector<std::string> describe(const std::vector<Cell>& cells) {
  std::vector<std::string> out;
  for (const auto& c : cells) out.push_back(describe_last(c));
  return out;
}

const char* kCylinder = "1-x^2-(z-1)^2";
const char* kBall = "1-(x-1)^2-(y-1)^2-(z-1)^2";

}  // namespace

TEST_CASE("projection of a sphere cone against a cylinder") {
  auto q = project(Ps({"x^2+y^2+z^2", kCylinder}), 2);
  CHECK(q == factor_set(Ps({"x+1", "x-1", "x^2+y^2", "4*x^2+4*y^2+y^4"})));
  auto q2 = project(Ps({"z-2", kCylinder}), 2);
  CHECK(q2 == factor_set(Ps({"x", "x+1", "x-1"})));
  auto circle = project(Ps({"x^2+y^2-1"}), 1);
  CHECK(circle == factor_set(Ps({"x-1", "x+1"})));
  CHECK(project({}, 2).empty());
  CHECK(project(Ps({"x-3"}), 2) == Ps({"x-3"}));
}

TEST_CASE("base cells") {
  auto cells = base_cells(Ps({"x", "x+1", "x-1"}));
  CHECK(describe(cells) == std::vector<std::string>{"(-inf, -1)", "-1", "(-1, 0)", "0", "(0, 1)", "1", "(1, +inf)"});
  CHECK(cells[0].sample[0] == AlgebraicNumber(Rational(-2)));
  CHECK(cells[2].sample[0] == AlgebraicNumber(Rational(-1, 2)));

  auto none = base_cells({});
  REQUIRE(none.size() == 1);
  CHECK(none[0].kind == CellKind::Sector);
  CHECK(none[0].sample[0] == AlgebraicNumber(Rational(0)));
  CHECK(base_cells(Ps({"x^2+1"})).size() == 1);

  auto irr = base_cells(Ps({"x^2-2"}));
  REQUIRE(irr.size() == 5);
  for (const auto& c : irr) {
    if (c.kind == CellKind::Sector) CHECK(c.sample[0].is_rational());
  }
  CHECK(irr[2].sample[0] == AlgebraicNumber(Rational(0)));
  CHECK(sign_at(P("x^2-2"), irr[1].sample) == 0);
}

TEST_CASE("ladder and base cells for the cylinder example") {
  auto ladder = build_ladder(3, Ps({"x^2+y^2+z^2"}), Ps({kCylinder}));
  auto cells = base_cells(ladder.q_level(1));
  CHECK(describe(cells) == std::vector<std::string>{"(-inf, -1)", "-1", "(-1, 0)", "0", "(0, 1)", "1", "(1, +inf)"});
  CHECK(ladder.p_level(3) == Ps({"x^2+y^2+z^2"}));
  for (int k = 1; k <= 3; ++k)
    for (const auto& f : ladder.q_level(k)) {
      CHECK(f.total_degree() >= 1);
      for (int v = k; v < 3; ++v) CHECK_FALSE(f.involves(v));
      CHECK(f.involves(k - 1));
    }
}

TEST_CASE("twisted cubic in a ball: base roots and lifting") {
  auto gens = Ps({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  auto ladder = build_ladder(3, gens, Ps({kBall}));
  auto cells = base_cells(ladder.q_level(1));
  std::vector<double> roots;
  for (const auto& c : cells)
    if (c.kind == CellKind::Section) roots.push_back(c.sample[0].approx());
  auto near = [&roots](double v) {
    return std::any_of(roots.begin(), roots.end(), [v](double r) { return std::fabs(r - v) < 1e-4; });
  };
  CHECK(near(0.522613));
  CHECK(near(1.39169));
  CHECK(cells.size() == 2 * roots.size() + 1);

  Cell sector;
  sector.level = 1;
  sector.sample = {AlgebraicNumber(Rational(5, 8))};
  sector.lower = AlgebraicNumber(Rational(1, 2));
  sector.upper = AlgebraicNumber(Rational(3, 4));
  auto stack = lift(sector, Ps({"x", "y", "x^4-y^3"}));
  std::vector<AlgebraicNumber> ys;
  for (const auto& c : stack)
    if (c.kind == CellKind::Section) ys.push_back(c.sample[1]);
  REQUIRE(ys.size() == 2);
  CHECK(ys[0] == AlgebraicNumber(Rational(0)));
  CHECK(std::fabs(ys[1].approx() - std::cbrt(std::pow(0.625, 4))) < 1e-9);
  CHECK(sign_at(P("x^4-y^3"), stack[3].sample) == 0);

  int on_curve = 0;
  SemialgebraicSet ball{3, {{{P(kBall), Relation::GreaterEq}}}};
  for (const auto& c : stack) {
    if (c.kind != CellKind::Section) continue;
    for (const auto& top : lift(c, gens)) {
      bool on = std::all_of(gens.begin(), gens.end(), [&top](const MPoly& g) { return sign_at(g, top.sample) == 0; });
      if (!on) continue;
      ++on_curve;
      CHECK(ball.contains(top.sample));
    }
  }
  CHECK(on_curve == 1);
}

TEST_CASE("lifting corner cases") {
  Cell origin;
  origin.level = 1;
  origin.kind = CellKind::Section;
  origin.sample = {AlgebraicNumber(Rational(0))};
  auto flat = lift(origin, Ps({"x"}), Nullified::Skip);
  CHECK(flat.size() == 1);
  CHECK_THROWS_AS(lift(origin, Ps({"x*y"})), NonDelineable);
  auto line = lift(origin, {});
  REQUIRE(line.size() == 1);
  CHECK(line[0].kind == CellKind::Sector);

  Cell bad;
  bad.level = 1;
  bad.sample = {AlgebraicNumber(Rational(1, 2))};
  bad.lower = AlgebraicNumber(Rational(0));
  bad.upper = AlgebraicNumber(Rational(2));
  // x - 1 changes the root count of y^2 - (x - 1) inside the sector
  CHECK_THROWS_AS(lift(bad, Ps({"y^2-x+1"})), Error);
}

TEST_CASE("variety cells for the cylinder example") {
  SemialgebraicSet s{3, {{{P(kCylinder), Relation::GreaterEq}}}};
  auto plane = build_cad(3, Ps({"z-2"}), Ps({kCylinder}));
  auto kept = variety_cells(plane, Ps({"z-2"}), s);
  REQUIRE_FALSE(kept.empty());
  for (const auto& c : kept) {
    CHECK(c.sample[0] == AlgebraicNumber(Rational(0)));
    CHECK(c.sample[2] == AlgebraicNumber(Rational(2)));
  }
  auto cone = build_cad(3, Ps({"x^2+y^2+z^2"}), Ps({kCylinder}));
  auto point = variety_cells(cone, Ps({"x^2+y^2+z^2"}), s);
  REQUIRE(point.size() == 1);
  for (int v = 0; v < 3; ++v) CHECK(point[0].sample[static_cast<std::size_t>(v)] == AlgebraicNumber(Rational(0)));

  auto unit = build_cad(3, Ps({"1"}), Ps({kCylinder}));
  CHECK(variety_cells(unit, Ps({"1"}), s).empty());

  for (int k = 1; k <= 3; ++k)
    for (const auto& c : cone.level(k)) {
      for (const auto& d : c.defining) CHECK(sign_at(d, c.sample) == 0);
      const auto& polys = cone.ladder.q_level(k);
      for (std::size_t i = 0; i < polys.size(); ++i) CHECK(sign_at(polys[i], c.sample) == c.signs[i]);
    }
  std::string text = dump(cone, kXYZ);
  CHECK(text.find("cells level 1: 7") != std::string::npos);
  CHECK(text == dump(build_cad(3, Ps({"x^2+y^2+z^2"}), Ps({kCylinder})), kXYZ));
}

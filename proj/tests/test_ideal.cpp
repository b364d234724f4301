#include <algorithm>
#include <random>

#include "doctest.h"
#include "realideal/ideal/decompose.hpp"
#include "realideal/poly/factor.hpp"
#include "realideal/poly/parse.hpp"

using namespace realideal;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXYZW{"x", "y", "z", "w"};

MPoly P(const std::string& s, const std::vector<std::string>& names = kXYZ) { return parse_poly(s, names); }

Ideal I(std::initializer_list<const char*> gens, const std::vector<std::string>& names = kXYZ) {
  std::vector<MPoly> g;
  for (const char* s : gens) g.push_back(P(s, names));
  return Ideal(static_cast<int>(names.size()), g);
}

bool same(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

MPoly random_poly(std::mt19937& rng, int nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_deg);
  MPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(nvars));
    int budget = max_deg;
    for (auto& x : e) {
      x = std::min(budget, deg(rng) / 2);
      budget -= x;
    }
    p += MPoly::monomial(nvars, e, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("groebner bases of small ideals") {
  auto b = groebner({P("x+y"), P("x-y")}, MonomialOrder::grevlex());
  REQUIRE(b.size() == 2);
  CHECK(b[0] == P("y"));
  CHECK(b[1] == P("x"));
  auto sq = groebner({P("x^2")}, MonomialOrder::grevlex());
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == P("x^2"));
  CHECK(Ideal::unit(3).basis().size() == 1);
  CHECK(I({"x", "1+x"}).is_unit());
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)}) {
    auto g = groebner({P("y^2-x*z"), P("x^3-y*z")}, order);
    CHECK(is_groebner(g));
  }
}

TEST_CASE("membership") {
  CHECK(member(P("x*y"), I({"x"})));
  CHECK_FALSE(member(P("x"), I({"x*y"})));
  Ideal curve = I({"y^2-x*z", "x^3-y*z"});
  CHECK_FALSE(member(P("x^2*y-z^2"), curve));
  CHECK(member(P("x*(x^2*y-z^2)"), curve));
  Ideal lex = curve.with_order(MonomialOrder::lex());
  CHECK_FALSE(member(P("x^2*y-z^2"), lex));
  CHECK(member(P("y*(x^2*y-z^2)"), lex));
}

TEST_CASE("intersections") {
  CHECK(intersect(I({"x"}), I({"y"})) == I({"x*y"}));
  CHECK(intersect(I({"x", "y", "z"}), I({"x", "z-2"})) == I({"x", "y*(z-2)", "z*(z-2)"}));
  Ideal curve = I({"y^2-x*z", "x^3-y*z"});
  CHECK(intersect(curve, curve) == curve);
  Ideal j = I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  CHECK(intersect(j, I({"x", "y"})) == curve);
}

TEST_CASE("quotients") {
  CHECK(quotient(I({"x*y"}), P("x")) == I({"y"}));
  CHECK(quotient(I({"x"}), P("1")) == I({"x"}));
  CHECK(quotient(I({"x^2"}), P("x")) == I({"x"}));
  Ideal i = I({"x^2*y", "x*z^2"});
  Ideal q = quotient(i, P("x*z"));
  CHECK(q.contains(i));
  for (const auto& s : q.generators()) CHECK(i.contains(s * P("x*z")));
}

TEST_CASE("dimension and independent sets") {
  CHECK(dimension(Ideal::unit(3)) == -1);
  CHECK(dimension(I({"x", "y"})) == 1);
  CHECK(dimension(I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"})) == 1);
  CHECK(dimension(I({"x^2+y^2+z^2-1"})) == 2);
  CHECK(dimension(Ideal(3, {})) == 3);
  CHECK(first_top_independent_set(I({"x", "y"})) == std::vector<int>{2});
  CHECK(first_top_independent_set(I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"})) == std::vector<int>{0});
  auto sets = maximal_independent_sets(I({"x*y"}));
  CHECK(sets == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
}

TEST_CASE("rational triviality on a variable subset") {
  Ideal j = I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  CHECK_FALSE(rationally_trivial(j, {0}));
  CHECK(rationally_trivial(j, {0, 1}));
  CHECK(rationally_trivial(Ideal(1, {P("x-1", {"x"})}), {0}));
  CHECK_FALSE(rationally_trivial(Ideal(2, {P("y", {"x", "y"})}), {0}));
}

TEST_CASE("radical membership") {
  CHECK(radical_member(P("x"), I({"x^3"})));
  CHECK_FALSE(radical_member(P("y"), I({"x^3"})));
  CHECK(radical_member(P("x*y"), I({"x^2", "y^5"})));
}

TEST_CASE("principal ideals agree with lcm and gcd") {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    MPoly common = random_poly(rng, 2, 2, 2);
    MPoly a = random_poly(rng, 2, 2, 3);
    MPoly b = random_poly(rng, 2, 2, 3);
    if (common.is_zero()) common = MPoly::constant(2, Rational(1));
    MPoly p = a * common, q = b * common;
    if (p.is_zero() || q.is_zero()) continue;
    Ideal ip(2, {p}), iq(2, {q});
    Ideal cap = intersect(ip, iq);
    REQUIRE(cap.basis().size() == 1);
    CHECK(cap.basis()[0] == lcm(p, q).primitive());
    CHECK(is_groebner(cap.basis()));
    // (p) : q = (p / gcd(p, q))
    Ideal quo = quotient(ip, q);
    REQUIRE(quo.basis().size() == 1);
    CHECK(quo.basis()[0] == exact_divide(p, gcd(p, q)).primitive());
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("splitting over the Gaussian rationals") {
  auto two = complexified_split(Ideal(2, {P("x^2+y^2", {"x", "y"})}));
  REQUIRE(two.verdict == SplitVerdict::Split);
  REQUIRE(two.witnesses.size() >= 1);
  CHECK(two.witnesses[0].to_string({"x", "y"}) == "x + i*y");

  auto three = complexified_split(I({"x^2+y^2+z^2"}));
  CHECK(three.verdict == SplitVerdict::PrimeOverC);

  Ideal four = I({"x^2+y^2", "z^2+w^2", "x*z+y*w", "x*w-y*z"}, kXYZW);
  auto s = complexified_split(four);
  REQUIRE(s.verdict == SplitVerdict::Split);
  std::vector<std::string> shown;
  for (const auto& g : s.witnesses) {
    shown.push_back(g.to_string(kXYZW));
    CHECK(four.contains(g.re * g.re + g.im * g.im));
    CHECK_FALSE(four.contains(g.re));
    CHECK_FALSE(four.contains(g.im));
  }
  CHECK(std::find(shown.begin(), shown.end(), "x + i*y") != shown.end());
  CHECK(std::find(shown.begin(), shown.end(), "z + i*w") != shown.end());

  CHECK(complexified_split(I({"x-1"})).verdict == SplitVerdict::PrimeOverC);
}

TEST_CASE("primality checks") {
  CHECK(check_prime(I({"x^2+y^2+z^2"})) == PrimalityCheck::Prime);
  CHECK(check_prime(I({"x", "y"})) == PrimalityCheck::Prime);
  CHECK(check_prime(I({"x", "z-2"})) == PrimalityCheck::Prime);
  CHECK(check_prime(I({"x*y"})) == PrimalityCheck::NotPrime);
  CHECK(check_prime(I({"x^2"})) == PrimalityCheck::NotPrime);
  CHECK(check_prime(I({"x-y^2", "z-x*y"})) == PrimalityCheck::Prime);
  CHECK(check_prime(I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"})) == PrimalityCheck::Unknown);
}

TEST_CASE("scoped decompositions") {
  auto a = decompose_scoped(I({"(x^2+y^2)*z"}));
  REQUIRE(a.components.size() == 2);
  CHECK(a.origin == DecompositionOrigin::Computed);
  CHECK(a.components[0].ideal == I({"z"}));
  CHECK(a.components[1].ideal == I({"x^2+y^2"}));
  for (const auto& c : a.components) CHECK(c.evidence == PrimeEvidence::Proved);

  auto b = decompose_scoped(I({"(x^2+y^2+z^2)*(z-2)"}));
  REQUIRE(b.components.size() == 2);
  CHECK(b.components[0].ideal == I({"z-2"}));
  CHECK(b.components[1].ideal == I({"x^2+y^2+z^2"}));

  auto sq = decompose_scoped(I({"x^2*y"}));
  REQUIRE(sq.components.size() == 2);
  CHECK(sq.components[0].evidence == PrimeEvidence::NotPrime);

  Ideal curve = I({"y^2-x*z", "x^3-y*z"});
  Ideal j = I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  auto c = decompose_scoped(curve, std::vector<Ideal>{j, I({"x", "y"})});
  CHECK(c.origin == DecompositionOrigin::UserSupplied);
  REQUIRE(c.components.size() == 2);
  CHECK(c.components[0].evidence == PrimeEvidence::Trusted);
  CHECK(c.components[1].evidence == PrimeEvidence::Proved);

  CHECK_THROWS_AS(decompose_scoped(curve), UnsupportedScope);
  CHECK_THROWS_AS(decompose_scoped(curve, std::vector<Ideal>{j}), InvalidInput);
  CHECK_THROWS_AS(decompose_scoped(curve, std::vector<Ideal>{I({"x"})}), InvalidInput);

  auto p = decompose_scoped(I({"x", "y"}), std::vector<Ideal>{I({"x", "y"})});
  REQUIRE(p.components.size() == 1);
  CHECK(p.components[0].ideal == I({"x", "y"}));
}

TEST_CASE("scoped radical") {
  CHECK(scoped_radical(I({"x^2"})) == I({"x"}));
  CHECK(scoped_radical(I({"x^2*(y-1)^3"})) == I({"x*(y-1)"}));
  CHECK(scoped_radical(I({"x", "y"})) == I({"x", "y"}));
}

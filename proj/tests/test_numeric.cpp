#include <random>

#include "doctest.h"
#include "realideal/numeric/algebraic.hpp"
#include "realideal/numeric/unipoly.hpp"

using namespace realideal;

namespace {

UniPoly poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long v : low_to_high) c.emplace_back(v);
  return UniPoly(c);
}

UniPoly expand(const UniFactorization& f) {
  UniPoly r(f.unit);
  for (const auto& [q, m] : f.factors) r *= pow(q, static_cast<unsigned>(m));
  for (const auto& q : f.unfactored) r *= q;
  return r;
}

// Independent root locator: plain bisection on a sign change in floating point.
double bisect_root(double lo, double hi, double (*f)(double)) {
  for (int i = 0; i < 200; ++i) {
    double m = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(m) < 0)) lo = m; else hi = m;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("007") == 7);
  CHECK_THROWS_AS(parse_rational("1.5e0"), InvalidInput);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_decimal(Rational(2, 3), 6) == "0.666667");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
}

TEST_CASE("gaussian rationals") {
  GaussianRational z(Rational(1), Rational(2));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()) == GaussianRational(Rational(5)));
  CHECK((z / z) == GaussianRational(Rational(1)));
  CHECK(sgn(z.norm()) >= 0);
}

TEST_CASE("sturm counts") {
  CHECK(*sturm_count(poly({-2, 0, 1}), 0, 2) == 1);
  CHECK(*sturm_count(poly({1, 0, 1}), -10, 10) == 0);
  CHECK(*sturm_count(poly({0, -1, 0, 1}), -2, 2) == 3);
  CHECK_FALSE(sturm_count(poly({0, -1, 0, 1}), -1, 2).has_value());
  CHECK_THROWS_AS((void)sturm_count(UniPoly(), 0, 1), InvalidInput);
}

TEST_CASE("roots of x^3 - x are exact") {
  auto roots = isolate_real_roots(poly({0, -1, 0, 1}));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].is_rational());
  CHECK(roots[0].rational_value() == -1);
  CHECK(roots[1].rational_value() == 0);
  CHECK(roots[2].rational_value() == 1);
  CHECK_THROWS_AS(isolate_real_roots(UniPoly()), InvalidInput);
}

TEST_CASE("roots of x^2 - 2 agree with a bisection oracle") {
  auto roots = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  Rational w(1, 1 << 20);
  double oracle = bisect_root(1.0, 2.0, [](double x) { return x * x - 2; });
  for (int s : {-1, 1}) {
    auto r = roots[s < 0 ? 0 : 1].refine_to(w);
    CHECK(r.width() <= w);
    CHECK(r.lo().get_d() <= s * oracle + 1e-12);
    CHECK(r.hi().get_d() >= s * oracle - 1e-12);
  }
}

TEST_CASE("refinement halves width and keeps the root") {
  auto r = isolate_real_roots(poly({-2, 0, 1}))[1];
  for (int i = 0; i < 30; ++i) {
    auto n = r.refine();
    CHECK(n.width() * 2 == r.width());
    CHECK(n.defining().sign_at(n.lo()) != n.defining().sign_at(n.hi()));
    r = n;
  }
}

TEST_CASE("algebraic sign and comparison") {
  auto sqrt2 = isolate_real_roots(poly({-2, 0, 1}))[1];
  CHECK(sqrt2.sign_of(poly({-1, 1})) == 1);
  CHECK(sqrt2.sign_of(poly({-2, 0, 1})) == 0);
  CHECK(sqrt2.sign_of(poly({-3, 0, 0, 0, 1}) * poly({-2, 0, 1})) == 0);
  auto other = isolate_real_roots(poly({-2, 0, 1}) * poly({-3, 0, 1}));
  REQUIRE(other.size() == 4);
  CHECK(other[2] == sqrt2);
  CHECK(sqrt2 < other[3]);
  CHECK(compare(AlgebraicNumber(Rational(1)), sqrt2) < 0);
  Rational q = rational_between(sqrt2, other[3]);
  CHECK(q == Rational(3, 2));
}

TEST_CASE("univariate factorization") {
  auto f1 = factor_univariate(poly({-1, 0, 1}));
  CHECK(f1.factors.size() == 2);
  CHECK(expand(f1) == poly({-1, 0, 1}));
  auto f2 = factor_univariate(poly({1, 0, 1}));
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].first == poly({1, 0, 1}));
  auto f3 = factor_univariate(poly({4, 0, 0, 0, 1}));
  REQUIRE(f3.factors.size() == 2);
  // oracle: multiply the expected pair back together
  CHECK(poly({2, -2, 1}) * poly({2, 2, 1}) == poly({4, 0, 0, 0, 1}));
  bool has_minus = false, has_plus = false;
  for (auto& [q, m] : f3.factors) {
    CHECK(m == 1);
    has_minus = has_minus || q == poly({2, -2, 1});
    has_plus = has_plus || q == poly({2, 2, 1});
  }
  CHECK(has_minus);
  CHECK(has_plus);
  auto f4 = factor_univariate(poly({0, 0, 3}) * pow(poly({1, 1}), 3) * poly({-7, 0, 2}));
  CHECK(expand(f4) == poly({0, 0, 3}) * pow(poly({1, 1}), 3) * poly({-7, 0, 2}));
}

TEST_CASE("planted rational roots are recovered exactly") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6), deg(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    int d = deg(rng);
    std::vector<Rational> planted;
    UniPoly p(Rational(1));
    for (int i = 0; i < d; ++i) {
      Rational r = make_rational(num(rng), den(rng));
      planted.push_back(r);
      p *= UniPoly::linear_root(r);
    }
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == planted.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      REQUIRE(roots[i].is_rational());
      CHECK(roots[i].rational_value() == planted[i]);
    }
    CHECK(expand(factor_univariate(p)) == p);
    Rational a(-7, 3), b(11, 2);
    if (p.sign_at(a) != 0 && p.sign_at(b) != 0) {
      std::size_t inside = 0;
      for (auto& r : planted) inside += (r > a && r < b);
      CHECK(*sturm_count(p, a, b) == inside);
    }
  }
}

TEST_CASE("random products factor and re-multiply") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly p(Rational(1));
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> v{Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(1)};
      p *= UniPoly(v);
    }
    auto f = factor_univariate(p);
    CHECK(expand(f) == p);
    for (auto& [q, m] : f.factors) {
      // an irreducible factor of degree >= 2 has no rational root
      if (q.degree() >= 2) {
        for (auto& r : isolate_real_roots(q)) CHECK_FALSE(r.is_rational());
      }
    }
  }
}

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "realideal/poly/parse.hpp"
#include "realideal/real/real.hpp"
#include "realideal/sdp/sdp.hpp"

using namespace realideal;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};
const std::vector<std::string> kXYZW{"x", "y", "z", "w"};

const char* kBall = "1-(x-1)^2-(y-1)^2-(z-1)^2";
const char* kCylinder = "1-x^2-(z-1)^2";

MPoly P(const std::string& s, const std::vector<std::string>& n = kXYZ) { return parse_poly(s, n); }

Ideal I(std::initializer_list<const char*> gens, const std::vector<std::string>& n = kXYZ) {
  std::vector<MPoly> g;
  for (const char* s : gens) g.push_back(P(s, n));
  return Ideal(static_cast<int>(n.size()), g);
}

SemialgebraicSet region(const char* g, const std::vector<std::string>& n = kXYZ) {
  return {static_cast<int>(n.size()), {{{P(g, n), Relation::GreaterEq}}}};
}

Pop pop(const std::vector<std::string>& n, const char* f, std::vector<const char*> g, std::vector<const char*> h) {
  Pop p;
  p.nvars = static_cast<int>(n.size());
  p.objective = P(f, n);
  for (const char* s : g) p.inequalities.push_back(P(s, n));
  for (const char* s : h) p.equalities.push_back(P(s, n));
  return p;
}

// Collects failed checks and the text that the determinism criterion compares.
struct Run {
  std::vector<std::string> failures;
  std::ostringstream transcript;
  double slowest = 0;

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class F>
  auto timed(double limit, const std::string& what, F&& f) -> decltype(f()) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    slowest = std::max(slowest, s);
    check(s < limit, what + " took " + std::to_string(s) + " s");
    return r;
  }
};

void reality(Run& r) {
  struct Case {
    Ideal ideal;
    std::optional<std::vector<Ideal>> hint;
    RealityKind verdict;
    RealityCertificate cert;
    std::vector<std::string> names;
  };
  Ideal curve = I({"y^2-x*z", "x^3-y*z"});
  Ideal j = I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  std::vector<Case> cases{
      {Ideal(2, {P("x^2+y^2", kXY)}), std::nullopt, RealityKind::NotReal, RealityCertificate::ComplexSplit, kXY},
      {I({"x^2+y^2+z^2"}), std::nullopt, RealityKind::NotReal, RealityCertificate::RankDeficit, kXYZ},
      {I({"x^2+y^2", "z^2+w^2", "x*z+y*w", "x*w-y*z"}, kXYZW), std::nullopt, RealityKind::NotReal,
       RealityCertificate::ComplexSplit, kXYZW},
      {Ideal(2, {P("x*y", kXY)}), std::vector<Ideal>{Ideal(2, {P("x", kXY)}), Ideal(2, {P("y", kXY)})},
       RealityKind::Real, RealityCertificate::RankDim, kXY},
      {curve, std::vector<Ideal>{j, I({"x", "y"})}, RealityKind::Real, RealityCertificate::RankDim, kXYZ},
  };
  for (const auto& c : cases) {
    std::string name = c.ideal.to_string(c.names);
    RealityVerdict v = r.timed(10, "reality " + name, [&] { return is_real(c.ideal, c.hint); });
    r.check(v.verdict == c.verdict, "reality verdict of " + name);
    r.check(v.certificate == c.cert, "certificate of " + name + ": " + to_string(v.certificate));
    r.transcript << report(v, c.names);
  }
  // the product with a plane is not real either
  RealityVerdict prod = r.timed(10, "reality product", [&] { return is_real(I({"(x^2+y^2)*z"})); });
  r.check(prod.verdict == RealityKind::NotReal, "reality of (x^2+y^2)z");
  r.transcript << report(prod, kXYZ);
}

void equality(Run& r) {
  Ideal j = I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  EqualityVerdict v = r.timed(60, "twisted cubic equality", [&] { return check_equality(region(kBall), j, std::vector<Ideal>{j}); });
  r.check(v.verdict == EqualityKind::Equal, "twisted cubic in a ball is Equal");
  r.transcript << report(v, kXYZ);
  for (double want : {0.522613, 1.39169}) {
    bool found = false;
    if (!v.components.empty())
      for (const auto& root : v.components[0].search.base_roots) found = found || std::abs(root.approx() - want) < 1e-4;
    r.check(found, "level-1 root near " + std::to_string(want));
  }
  SemialgebraicSet disk = region("1-x^2-(y-1)^2", kXY);
  EqualityVerdict t = r.timed(60, "tangency equality", [&] { return check_equality(disk, Ideal(2, {P("y", kXY)})); });
  r.check(t.verdict == EqualityKind::NotEqual, "tangency is NotEqual");
  r.transcript << report(t, kXY);
}

void augmentation(Run& r) {
  Ideal start = I({"(x^2+y^2+z^2)*(z-2)"});
  AugmentTrace t = r.timed(60, "augmentation", [&] { return augment_until_equal(region(kCylinder), start); });
  Ideal want = I({"x", "y*(z-2)", "z*(z-2)"});
  r.check(t.result.contains(want) && want.contains(t.result), "augmentation result");
  r.check(t.final_verdict.verdict == EqualityKind::Equal, "final verdict Equal");
  Ideal prev = start;
  for (const auto& round : t.rounds) {
    r.check(round.result.contains(prev) && !prev.contains(round.result), "round strictly increases");
    prev = round.result;
  }
  r.transcript << report(t, kXYZ);
}

void cad(Run& r) {
  std::vector<MPoly> cone{P("x^2+y^2+z^2")};
  std::vector<MPoly> cyl{P(kCylinder)};
  CadTree tree = build_cad(3, cone, cyl);
  std::vector<std::string> base;
  for (const auto& c : tree.level(1)) base.push_back(describe_last(c));
  r.check(base == std::vector<std::string>{"(-inf, -1)", "-1", "(-1, 0)", "0", "(0, 1)", "1", "(1, +inf)"}, "base cells");
  r.check(tree.level(2).size() == 9, "nine cells in the plane");
  r.check(project({cone[0], cyl[0]}, 2) == factor_set({P("x+1"), P("x-1"), P("x^2+y^2"), P("4*x^2+4*y^2+y^4")}),
          "cone Q-set");
  r.check(project({P("z-2"), cyl[0]}, 2) == factor_set({P("x"), P("x+1"), P("x-1")}), "plane Q-set");
  r.check(project(tree.ladder.q_level(2), 1) == factor_set({P("x"), P("x+1"), P("x-1")}), "base Q-set");

  SemialgebraicSet s = region(kCylinder);
  auto point = variety_cells(tree, cone, s);
  bool origin = point.size() == 1;
  for (const auto& c : point)
    for (const auto& v : c.sample) origin = origin && v == AlgebraicNumber(Rational(0));
  r.check(origin, "cone survives only at the origin");
  CadTree plane = build_cad(3, {P("z-2")}, cyl);
  auto trace = variety_cells(plane, {P("z-2")}, s);
  bool on_trace = !trace.empty();
  bool has_segment = false;
  for (const auto& c : trace) {
    on_trace = on_trace && c.sample[0] == AlgebraicNumber(Rational(0)) && c.sample[2] == AlgebraicNumber(Rational(2));
    has_segment = has_segment || plane.level(2)[static_cast<std::size_t>(c.parent)].kind == CellKind::Sector;
  }
  r.check(on_trace && has_segment, "plane survives on x = 0, z = 2");
  r.transcript << dump(tree, kXYZ) << dump(plane, kXYZ);
}

MPoly random_poly(std::mt19937& rng, int nvars, int degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> exp(0, degree);
  MPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(nvars));
    for (auto& v : e) v = exp(rng);
    p += MPoly::monomial(nvars, e, Rational(coeff(rng)));
  }
  return p;
}

void ideals(Run& r) {
  std::vector<Ideal> built;
  auto keep = [&](const Ideal& i) {
    built.push_back(i);
    return i;
  };
  r.check(keep(intersect(I({"x"}), I({"y"}))) == I({"x*y"}), "<x> cap <y>");
  r.check(keep(intersect(I({"x", "y", "z"}), I({"x", "z-2"}))) == I({"x", "y*(z-2)", "z*(z-2)"}), "point cap line");
  Ideal curve = I({"y^2-x*z", "x^3-y*z"});
  Ideal j = I({"y^2-x*z", "x^3-y*z", "x^2*y-z^2"});
  r.check(!member(P("x^2*y-z^2"), curve), "curve membership");
  r.check(keep(intersect(j, I({"x", "y"}))) == curve, "curve decomposition");
  r.check(keep(quotient(I({"x*y"}), P("x"))) == I({"y"}), "quotient");
  r.check(dimension(Ideal::unit(3)) == -1, "dim of unit");
  r.check(dimension(keep(I({"x", "y"}))) == 1, "dim of <x,y>");
  r.check(dimension(keep(j)) == 1, "dim of J");
  r.check(!rationally_trivial(curve, {0}), "1 not in C(x)I");
  std::mt19937 rng(7);
  int cases = 0;
  while (cases < 100) {
    MPoly c = random_poly(rng, 2, 2, 2);
    MPoly a = random_poly(rng, 2, 2, 3);
    MPoly b = random_poly(rng, 2, 2, 3);
    if (c.is_zero()) c = MPoly::constant(2, Rational(1));
    MPoly p = a * c;
    MPoly q = b * c;
    if (p.is_zero() || q.is_zero()) continue;
    Ideal cap = keep(intersect(Ideal(2, {p}), Ideal(2, {q})));
    r.check(cap.basis().size() == 1 && cap.basis()[0] == lcm(p, q).primitive(), "random lcm");
    Ideal quo = keep(quotient(Ideal(2, {p}), q));
    r.check(quo.basis().size() == 1 && quo.basis()[0] == exact_divide(p, gcd(p, q)).primitive(), "random gcd");
    ++cases;
  }
  for (const auto& i : built) r.check(is_groebner(i.basis()), "S-pairs reduce to zero for " + i.to_string(kXYZ));
  r.transcript << built.size() << " bases\n";
}

void sdp(Run& r) {
  const double tol = 1e-5;
  std::vector<Pop> battery{
      pop(kXY, "x^2+y^2", {}, {"x+y-1"}),
      pop(kXY, "x+y", {"1-x^2-y^2"}, {}),
      pop(kXY, "x^2*y", {"1-x^2-y^2"}, {}),
      pop(kXY, "-x^2-y^2", {"1-x^2", "1-y^2"}, {}),
      pop(kXY, "x^4+y^4-x*y", {"4-x^2-y^2"}, {}),
      pop(kXY, "(x-1)^2+y", {"y"}, {"x^2+y^2-1"}),
      pop(kXY, "x*y", {"x", "y", "3-x-y"}, {}),
      pop(kXYZ, "x*y*z", {"1-x^2-y^2-z^2"}, {}),
      pop(kXYZ, "x+y+z", {kBall}, {"y^2-x*z", "x^3-y*z", "x^2*y-z^2"}),
      pop(kXYZ, "z-x*y", {"1-x^2-y^2", "z+1", "1-z"}, {"z-x^2"}),
  };
  for (std::size_t n = 0; n < battery.size(); ++n) {
    const Pop& p = battery[n];
    int k0 = base_order(p);
    GapReport g = r.timed(30, "battery problem " + std::to_string(n + 1), [&] { return gap_report(p, k0, k0 + 2, nullptr); });
    double prev = -INFINITY;
    bool any = false;
    for (const auto& rec : g.records) {
      const auto& s = rec.result;
      if (s.status != SolveStatus::Optimal) continue;
      any = true;
      r.check(s.dual <= s.primal + tol, "weak duality on problem " + std::to_string(n + 1));
      r.check(s.primal >= prev - tol, "monotone orders on problem " + std::to_string(n + 1));
      prev = s.primal;
    }
    r.check(any, "some order solves problem " + std::to_string(n + 1));
    r.transcript << table(g);
  }

  SolveResult line = r.timed(30, "line", [&] { return solve_relaxation(battery[0], 2); });
  r.check(line.status == SolveStatus::Optimal && std::abs(line.primal - 0.5) <= 1e-6 && std::abs(line.dual - 0.5) <= 1e-6,
          "line problem at 0.5 on both sides");

  struct EqualCase {
    Pop pop;
    SemialgebraicSet set;
    Ideal ideal;
    std::optional<std::vector<Ideal>> hint;
  };
  std::vector<EqualCase> equal{
      {pop(kXY, "x^2+y^2", {"1-x^2-y^2"}, {"x+y-1"}), region("1-x^2-y^2", kXY), Ideal(2, {P("x+y-1", kXY)})},
      {pop(kXY, "x^3-y", {"1-x^2-y^2"}, {"x-2*y"}), region("1-x^2-y^2", kXY), Ideal(2, {P("x-2*y", kXY)})},
      {pop(kXYZ, "x^2+y^2+(z-1)^2", {kCylinder}, {"x", "y*(z-2)", "z*(z-2)"}), region(kCylinder),
       I({"x", "y*(z-2)", "z*(z-2)"}), std::vector<Ideal>{I({"x", "y", "z"}), I({"x", "z-2"})}},
  };
  for (const auto& c : equal) {
    EqualityVerdict v = check_equality(c.set, c.ideal, c.hint);
    r.check(v.verdict == EqualityKind::Equal, "Equal verdict for the relaxation data");
    int k0 = base_order(c.pop);
    GapReport g = r.timed(30, "gap", [&] { return gap_report(c.pop, k0, k0 + 2, &v); });
    r.check(g.guarantee != Guarantee::None, "guarantee flag set");
    for (const auto& rec : g.records) {
      const auto& s = rec.result;
      // an order whose top-degree moments sit in no block is unbounded on both sides
      bool both_unbounded = std::isinf(s.primal) && s.primal < 0 && s.dual == s.primal;
      bool close = s.status == SolveStatus::Optimal && std::abs(s.primal - s.dual) <= tol;
      r.check(close || both_unbounded, "no gap at order " + std::to_string(rec.k));
    }
    r.transcript << report(g);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Run&)> body;
  };
  const std::vector<Criterion> criteria{
      {"reality suite", reality},     {"equality suite", equality}, {"iterated augmentation", augmentation},
      {"CAD golden data", cad},       {"ideal oracles", ideals},    {"SDP suite", sdp},
  };
  bool all = true;
  std::string first_pass;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Run run;
    try {
      criteria[c].body(run);
    } catch (const std::exception& e) {
      run.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = run.failures.empty();
    all = all && ok;
    first_pass += run.transcript.str();
    std::printf("criterion %zu %s: %s (slowest step %.2f s)\n", c + 1, criteria[c].name, ok ? "PASS" : "FAIL", run.slowest);
    for (const auto& f : run.failures) std::printf("  failed: %s\n", f.c_str());
  }

  // Second pass over every stage; the transcripts must match byte for byte.
  std::string second_pass;
  for (const auto& c : criteria) {
    Run run;
    try {
      c.body(run);
    } catch (const std::exception& e) {
      run.transcript << "exception: " << e.what();
    }
    second_pass += run.transcript.str();
  }
  bool same = !first_pass.empty() && first_pass == second_pass;
  all = all && same;
  std::printf("criterion 7 determinism: %s (%zu bytes compared)\n", same ? "PASS" : "FAIL", first_pass.size());
  return all ? 0 : 1;
}

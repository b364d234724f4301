#include <algorithm>

#include "realideal/ideal/decompose.hpp"
#include "realideal/poly/factor.hpp"

namespace realideal {

std::string to_string(PrimeEvidence e) {
  switch (e) {
    case PrimeEvidence::Proved:
      return "proved";
    case PrimeEvidence::Trusted:
      return "trusted";
    case PrimeEvidence::NotPrime:
      return "not-prime";
  }
  return "?";
}

std::string to_string(DecompositionOrigin o) {
  return o == DecompositionOrigin::Computed ? "computed" : "user-supplied";
}

namespace {

// A basis element c*v + (terms free of v) with c constant lets v be eliminated.
bool find_linear_variable(const std::vector<MPoly>& basis, int& var, MPoly& solved) {
  for (const auto& g : basis) {
    for (int v = g.nvars() - 1; v >= 0; --v) {
      if (g.degree(v) != 1) continue;
      auto c = g.coefficients(v);
      if (!c[1].is_constant()) continue;
      var = v;
      solved = -c[0] * Rational(1 / c[1].constant_value());
      return true;
    }
  }
  return false;
}

}  // namespace

PrimalityCheck check_prime(const Ideal& ideal, std::string* reason) {
  auto say = [&](const std::string& s) {
    if (reason) *reason = s;
  };
  if (ideal.is_unit()) {
    say("unit ideal");
    return PrimalityCheck::NotPrime;
  }
  int n = ideal.nvars();
  std::vector<MPoly> gens = ideal.basis();
  int eliminated = 0;
  for (;;) {
    Ideal cur(n, gens, ideal.order());
    if (cur.is_zero()) {
      say(eliminated ? "linear in " + std::to_string(eliminated) + " variable(s) over a polynomial ring" : "zero ideal");
      return PrimalityCheck::Prime;
    }
    if (cur.basis().size() == 1) {
      const MPoly& g = cur.basis()[0];
      if (g.total_degree() > kMultiFactorDegreeCap) {
        say("generator above the factorization degree cap");
        return PrimalityCheck::Unknown;
      }
      auto f = factor(g);
      if (f.size() == 1 && f[0].second == 1) {
        say(eliminated ? "principal with irreducible generator after eliminating linear variables"
                       : "principal with irreducible generator");
        return PrimalityCheck::Prime;
      }
      say("generator factors over the rationals");
      return PrimalityCheck::NotPrime;
    }
    int var = -1;
    MPoly solved;
    bool found = find_linear_variable(cur.basis(), var, solved);
    if (!found) {
      Ideal lex = cur.with_order(MonomialOrder::lex());
      found = find_linear_variable(lex.basis(), var, solved);
    }
    if (!found) {
      say("outside the classes with a primality proof");
      return PrimalityCheck::Unknown;
    }
    std::vector<MPoly> next;
    for (const auto& g : cur.basis()) {
      MPoly s = g.substitute(var, solved.with_order(g.order()));
      if (!s.is_zero()) next.push_back(s);
    }
    gens = std::move(next);
    ++eliminated;
  }
}

Ideal scoped_radical(const Ideal& i) {
  Ideal cur = i.canonical();
  for (int round = 0; round < 64; ++round) {
    std::vector<MPoly> extra;
    for (const auto& g : cur.basis()) {
      MPoly s = squarefree_part(g);
      if (!cur.contains(s)) extra.push_back(s);
    }
    if (extra.empty()) return cur;
    cur = cur.plus(extra).canonical();
  }
  throw Error("internal error: radical iteration did not stabilize");
}

namespace {

Component classify(const Ideal& c) {
  std::string why;
  switch (check_prime(c, &why)) {
    case PrimalityCheck::Prime:
      return {c, PrimeEvidence::Proved, why};
    case PrimalityCheck::NotPrime:
      return {c, PrimeEvidence::NotPrime, why};
    case PrimalityCheck::Unknown:
      break;
  }
  return {c, PrimeEvidence::Trusted, why};
}

}  // namespace

DecompositionCertificate decompose_scoped(const Ideal& i, const std::optional<std::vector<Ideal>>& hint) {
  DecompositionCertificate cert;
  if (hint) {
    cert.origin = DecompositionOrigin::UserSupplied;
    if (hint->empty()) throw InvalidInput("decomposition hint has no components");
    for (const auto& c : *hint) {
      if (!c.contains(i)) throw InvalidInput("hint component does not contain the ideal");
      cert.components.push_back(classify(c.with_order(i.order())));
    }
    if (!(intersect(*hint) == i.with_order(intersect(*hint).order())))
      throw InvalidInput("hint components do not intersect to the ideal");
    return cert;
  }
  if (i.is_unit()) return cert;
  const auto& basis = i.basis();
  if (basis.size() == 1) {
    std::vector<Ideal> parts;
    for (const auto& [f, m] : factor(basis[0])) {
      Ideal c(i.nvars(), {pow(f, static_cast<unsigned>(m))}, i.order());
      parts.push_back(c);
      if (m == 1) {
        cert.components.push_back({c, PrimeEvidence::Proved, "principal with irreducible generator"});
      } else {
        cert.components.push_back({c, PrimeEvidence::NotPrime, "power of an irreducible generator"});
      }
    }
    if (!(intersect(parts) == i)) throw Error("internal error: factorization does not recombine to the ideal");
    return cert;
  }
  Component whole = classify(i);
  if (whole.evidence == PrimeEvidence::Proved) {
    cert.components.push_back(whole);
    return cert;
  }
  throw UnsupportedScope("decomposition of a non-principal ideal needs a hint");
}

}  // namespace realideal

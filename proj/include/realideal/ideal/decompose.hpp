#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realideal/ideal/ideal.hpp"

namespace realideal {

enum class SplitVerdict { PrimeOverC, Split, Inconclusive };

/// Outcome of the search for g = a + i*b with a, b outside I and a^2 + b^2 in I.
struct SplitResult {
  SplitVerdict verdict = SplitVerdict::PrimeOverC;
  /// One normalized witness per leading standard monomial.
  std::vector<ComplexPoly> witnesses;
  int degree_bound = 0;
  std::string note;
};

/// Undetermined-coefficient search over standard monomials of degree at most
/// ceil(d/2), d the lowest degree in the reduced basis. I must be proper.
SplitResult complexified_split(const Ideal& i);

enum class PrimeEvidence { Proved, Trusted, NotPrime };
enum class DecompositionOrigin { Computed, UserSupplied };

std::string to_string(PrimeEvidence e);
std::string to_string(DecompositionOrigin o);

struct Component {
  Ideal ideal;
  PrimeEvidence evidence = PrimeEvidence::Trusted;
  std::string reason;
};

/// Components whose intersection is the decomposed ideal (verified exactly).
struct DecompositionCertificate {
  std::vector<Component> components;
  DecompositionOrigin origin = DecompositionOrigin::Computed;
};

enum class PrimalityCheck { Prime, NotPrime, Unknown };

/// Sound but incomplete primality test over the rationals: eliminates
/// variables that occur linearly, then decides the remaining principal or
/// zero ideal by factorization.
PrimalityCheck check_prime(const Ideal& i, std::string* reason = nullptr);

/// Decomposition within the supported scope: principal ideals by factoring,
/// provably prime ideals as themselves, anything else from a verified hint.
DecompositionCertificate decompose_scoped(const Ideal& i, const std::optional<std::vector<Ideal>>& hint = std::nullopt);

/// Repeatedly adjoins squarefree parts of basis elements. The result lies
/// between I and its radical; it equals the radical when it is prime.
Ideal scoped_radical(const Ideal& i);

}  // namespace realideal

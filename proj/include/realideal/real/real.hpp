#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realideal/cad/cad.hpp"
#include "realideal/ideal/decompose.hpp"

namespace realideal {

/// Rank of the Jacobian of the reduced Groebner basis at a point of V(I),
/// by fraction-free elimination with exact sign decisions.
int rank_at(const Ideal& i, const Point& point);

/// Outcome of the open-cell search on one prime component.
struct ComponentSearch {
  int dimension = 0;
  /// Coordinates placed first for the projection, as original indices.
  std::vector<int> coordinates;
  /// Real roots of the level-1 factors of the constraint chain.
  std::vector<AlgebraicNumber> base_roots;
  int open_cells = 0;
  bool accepted = false;
  /// Some open cell raised a refinement error.
  bool refinement_error = false;
  /// Accepted point in original coordinates.
  std::optional<Point> point;
  bool interior = false;
  int rank = -1;
};

/// Searches the open cells of the base space for a lifted point of V(C) in S.
/// Prefers a point interior to S with full Jacobian rank; otherwise the first hit.
ComponentSearch search_component(const Ideal& c, const SemialgebraicSet& s);

enum class RealityKind { Real, NotReal, Inconclusive };
enum class RealityCertificate { RankDim, TopDim, ComplexSplit, RankDeficit, NotRadical, None };
std::string to_string(RealityKind k);
std::string to_string(RealityCertificate c);

struct ComponentReality {
  Ideal ideal;
  PrimeEvidence evidence = PrimeEvidence::Trusted;
  RealityKind verdict = RealityKind::Inconclusive;
  RealityCertificate certificate = RealityCertificate::None;
  std::optional<Point> point;
  int rank = -1;
  int dimension = 0;
  std::optional<ComplexPoly> split;
  std::string note;
};

struct RealityVerdict {
  RealityKind verdict = RealityKind::Inconclusive;
  RealityCertificate certificate = RealityCertificate::None;
  int nvars = 0;
  DecompositionOrigin origin = DecompositionOrigin::Computed;
  std::vector<ComponentReality> components;
};

/// Decides I(V(I)) = I. Without a usable decomposition only the splitting
/// test on I itself is tried; a witness there is still a valid refutation.
RealityVerdict is_real(const Ideal& i, const std::optional<std::vector<Ideal>>& hint = std::nullopt);

enum class EqualityKind { Equal, NotEqual, Inconclusive };
std::string to_string(EqualityKind k);

struct ComponentEquality {
  Ideal ideal;
  PrimeEvidence evidence = PrimeEvidence::Trusted;
  bool accepted = false;
  bool definite = true;
  std::string reason;
  ComponentSearch search;
};

struct EqualityVerdict {
  EqualityKind verdict = EqualityKind::Inconclusive;
  int nvars = 0;
  DecompositionOrigin origin = DecompositionOrigin::Computed;
  std::vector<ComponentEquality> components;
  /// Index of the first failing component, when NotEqual.
  int failing = -1;
};

/// Decides I(S ∩ V(I)) = I component by component.
EqualityVerdict check_equality(const SemialgebraicSet& s, const Ideal& i,
                               const std::optional<std::vector<Ideal>>& hint = std::nullopt);

/// One enlargement round.
struct AugmentRound {
  Ideal input;
  /// Components after radical and splitting repair.
  std::vector<Ideal> repaired;
  /// Components whose search failed, and the chosen one (-1 when none failed).
  std::vector<int> failing;
  int chosen = -1;
  /// Added polynomial per repaired component; zero means none.
  std::vector<MPoly> added;
  Ideal result;
  /// Components of the result, passed as the hint of the next round.
  std::vector<Ideal> components;
};

/// One round of enlargement. The result strictly contains I.
AugmentRound augment(const SemialgebraicSet& s, const Ideal& i,
                     const std::optional<std::vector<Ideal>>& hint = std::nullopt);

struct AugmentTrace {
  std::vector<AugmentRound> rounds;
  Ideal result;
  std::vector<Ideal> components;
  EqualityVerdict final_verdict;
};

inline constexpr int kAugmentRoundCap = 16;

/// Alternates check_equality and augment until equality holds.
AugmentTrace augment_until_equal(const SemialgebraicSet& s, const Ideal& i,
                                 const std::optional<std::vector<Ideal>>& hint = std::nullopt,
                                 int cap = kAugmentRoundCap);

std::string render_point(const Point& p);
std::string report(const RealityVerdict& v, const std::vector<std::string>& names);
std::string report(const EqualityVerdict& v, const std::vector<std::string>& names);
std::string report(const AugmentTrace& t, const std::vector<std::string>& names);

}  // namespace realideal

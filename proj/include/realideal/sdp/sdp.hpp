#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realideal/poly/mpoly.hpp"

namespace realideal {

struct EqualityVerdict;

/// minimize f subject to g_i >= 0 and h_j = 0.
struct Pop {
  int nvars = 0;
  MPoly objective;
  std::vector<MPoly> inequalities;
  std::vector<MPoly> equalities;
};

/// Exponents of total degree at most d in graded lex order: increasing degree,
/// and within a degree x1 before x2 (1, x, y, x^2, xy, y^2, ...).
std::vector<Exponent> monomial_basis(int nvars, int d);

/// max(ceil(deg g_i / 2), ceil(deg h_j / 2), deg f).
int base_order(const Pop& pop);

struct TruncationData {
  int k = 0;
  int k0 = 0;
  /// Half-degree per inequality; -1 when 2d + deg g_i <= k has no solution.
  std::vector<int> d;
  /// Multiplier degree per equality; negative means no rows.
  std::vector<int> e;
  /// Half-degree of the moment block.
  int d0 = 0;
  /// Moment indices Λ(k).
  std::vector<Exponent> moments;
};

/// Throws InvalidInput when k < k0.
TruncationData truncation(const Pop& pop, int k);

struct SdpEntry {
  int block = 0;
  int row = 0;
  int col = 0;
  Rational value;

  friend bool operator==(const SdpEntry& a, const SdpEntry& b) {
    return a.block == b.block && a.row == b.row && a.col == b.col && a.value == b.value;
  }
};

struct SdpBlock {
  int size = 0;
  bool diagonal = false;
  std::string label;
};

/// Block-diagonal data with exact rational entries in SDPA primal shape:
/// minimize sum_i c_i x_i subject to sum_i x_i F_i - F_0 >= 0, with entries on
/// or above the diagonal. For the moment side x_i is the moment of
/// moments[i + 1] (the moment of 1 is fixed to one and folded into F_0),
/// and `offset` is added to the objective.
struct SdpInstance {
  int nvars = 0;
  std::vector<Exponent> moments;
  std::vector<SdpBlock> blocks;
  std::vector<Rational> objective;
  Rational offset;
  /// matrices[0] is F_0, matrices[i] is F_i.
  std::vector<std::vector<SdpEntry>> matrices;
};

/// Moment side: moment and localizing blocks plus a diagonal block that holds
/// each equality row twice with opposite signs (SDPA has no free blocks).
SdpInstance build_primal(const Pop& pop, int k);

/// Gram side: for each moment index alpha, the coefficient of x^alpha in
/// sigma_i g_i as a matrix per Gram block, and in x^beta h_j per multiplier.
struct GramSystem {
  std::vector<Exponent> moments;
  std::vector<SdpBlock> blocks;
  /// rows[alpha] lists Gram entries (block, row, col, value) with row <= col.
  std::vector<std::vector<SdpEntry>> rows;
  /// Multiplier columns: (equality index, monomial) and their coefficient rows.
  std::vector<std::pair<int, Exponent>> multipliers;
  std::vector<std::vector<std::pair<int, Rational>>> multiplier_rows;
  /// Coefficient of x^alpha in f.
  std::vector<Rational> rhs;
};

GramSystem build_dual(const Pop& pop, int k);

enum class SolveStatus { Optimal, InfeasibleSuspected, MaxIter };
std::string to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::MaxIter;
  /// Moment-side value f_k and Gram-side value q_k.
  double primal = 0;
  double dual = 0;
  int iterations = 0;
  /// Moments y_alpha for alpha in moments (y_0 = 1).
  std::vector<double> moments;
  /// Gram matrices per PSD block (dense, row-major) and multiplier coefficients.
  std::vector<std::vector<double>> gram;
  std::vector<double> multipliers;
  /// Largest coefficient mismatch of f - q - sum sigma_i g_i - sum r_j h_j.
  double gram_residual = 0;
};

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr int kMaxIterations = 200;

/// Primal-dual interior point solve of the order-k pair.
SolveResult solve_relaxation(const Pop& pop, int k, double tol = kDefaultTolerance);

enum class Guarantee { None, IdealEquality, RankWitness };
std::string to_string(Guarantee g);

struct GapRecord {
  int k = 0;
  SolveResult result;
};

struct GapReport {
  std::vector<GapRecord> records;
  Guarantee guarantee = Guarantee::None;
};

/// Solves orders k_lo..k_hi. The guarantee follows the verdict: ideal
/// equality, or the rank witness when the ideal is a single prime component
/// with an interior point of full Jacobian rank.
GapReport gap_report(const Pop& pop, int k_lo, int k_hi, const EqualityVerdict* verdict, double tol = kDefaultTolerance);

std::string report(const GapReport& r);
/// Tab-separated k, primal, dual, gap, status.
std::string table(const GapReport& r);

/// SDPA sparse text: m, block count, block sizes, objective, entries with 17 significant digits.
std::string to_sdpa(const SdpInstance& inst);
/// Parses SDPA sparse text; moments and labels are not recoverable and are left empty.
SdpInstance from_sdpa(const std::string& text);
/// Writes to_sdpa to a file; throws Error when it cannot be written.
void export_sdpa(const SdpInstance& inst, const std::string& path);

}  // namespace realideal

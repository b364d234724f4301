#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realideal/poly/evaluation.hpp"

namespace realideal {

/// Squarefree primitive factors of the inputs, constants dropped, deduplicated
/// and sorted by (total degree, rendering). Factorization falls back to the
/// squarefree part when a polynomial is above the degree cap.
std::vector<MPoly> factor_set(const std::vector<MPoly>& polys);

/// Collins-style projection eliminating `var`: leading coefficients, the
/// principal subresultant coefficients of each pair and of each polynomial
/// with its derivative. Inputs free of `var` pass through. Output is a factor_set.
std::vector<MPoly> project(const std::vector<MPoly>& polys, int var);

/// Factor sets by level: level k (1-based) holds the factors whose highest
/// variable is x_{k-1}. Two chains share the layout: `p` from the ideal's
/// generators alone, `q` from generators plus constraint polynomials.
struct ProjectionLadder {
  int nvars = 0;
  std::vector<std::vector<MPoly>> p;
  std::vector<std::vector<MPoly>> q;

  [[nodiscard]] const std::vector<MPoly>& p_level(int level) const { return p[static_cast<std::size_t>(level)]; }
  [[nodiscard]] const std::vector<MPoly>& q_level(int level) const { return q[static_cast<std::size_t>(level)]; }
};

/// Projects both chains from level n down to level 1.
ProjectionLadder build_ladder(int nvars, const std::vector<MPoly>& generators, const std::vector<MPoly>& constraints);

enum class CellKind { Sector, Section };

struct Cell {
  int level = 0;
  CellKind kind = CellKind::Sector;
  Point sample;
  /// Neighbouring roots of the last coordinate; absent means unbounded.
  std::optional<AlgebraicNumber> lower;
  std::optional<AlgebraicNumber> upper;
  /// Signs of the lifting polynomials at the sample.
  std::vector<int> signs;
  /// Lifting polynomials that vanish at a section sample.
  std::vector<MPoly> defining;
  int parent = -1;
};

/// Alternating sectors and sections over the sorted real roots of the
/// factors. Sector samples are rational: midpoints between rational roots,
/// simplest dyadic otherwise, and one unit beyond the extreme roots.
std::vector<Cell> base_cells(const std::vector<MPoly>& polys);

enum class Nullified { Throw, Skip };

/// Stack over `cell` from the real roots in the next variable of `polys`.
/// A polynomial vanishing identically on the fiber raises NonDelineable, or
/// is treated as zero on the whole fiber under Nullified::Skip. Sector
/// parents get a three-probe root count check.
std::vector<Cell> lift(const Cell& cell, const std::vector<MPoly>& polys, Nullified mode = Nullified::Throw);

/// Full CAD over the Q chain: every cell at every level.
struct CadTree {
  ProjectionLadder ladder;
  std::vector<std::vector<Cell>> cells;

  [[nodiscard]] const std::vector<Cell>& level(int k) const { return cells[static_cast<std::size_t>(k)]; }
};

/// Builds the ladder and lifts every cell through the Q chain, skipping
/// polynomials that vanish on a whole fiber.
CadTree build_cad(int nvars, const std::vector<MPoly>& generators, const std::vector<MPoly>& constraints);

/// Strict or non-strict sign condition g rel 0.
enum class Relation { Greater, GreaterEq, Equal };
std::string to_string(Relation r);

struct Constraint {
  MPoly poly;
  Relation rel = Relation::GreaterEq;
};

/// Union of conjunctions of sign conditions. An empty list of conjuncts is the
/// empty set; a single empty conjunct is the whole space.
struct SemialgebraicSet {
  int nvars = 0;
  std::vector<std::vector<Constraint>> conjuncts;

  static SemialgebraicSet whole(int nvars) { return {nvars, {{}}}; }
  [[nodiscard]] bool is_whole() const;
  [[nodiscard]] std::vector<MPoly> polynomials() const;
  /// Exact membership of a point.
  [[nodiscard]] bool contains(const Point& point) const;
  /// Strict satisfaction of every inequality in some conjunct without equations.
  [[nodiscard]] bool interior_contains(const Point& point) const;
  /// The same set with every polynomial remapped through a variable permutation.
  [[nodiscard]] SemialgebraicSet remap(const std::vector<int>& map) const;
};

/// Top-level cells whose sample zeroes every generator and lies in S.
std::vector<Cell> variety_cells(const CadTree& tree, const std::vector<MPoly>& generators, const SemialgebraicSet& s);

/// Indices into the top level of the same cells as variety_cells.
std::vector<std::size_t> variety_cell_indices(const CadTree& tree, const std::vector<MPoly>& generators,
                                              const SemialgebraicSet& s);

/// Ancestor at level k of the cell at (level, index).
const Cell& ancestor(const CadTree& tree, int level, std::size_t index, int k);

/// Structured text dump: factor lists by level and the cell table.
std::string dump(const CadTree& tree, const std::vector<std::string>& names);

/// "(-inf, -1)", "-1", "(0.522613, 0.714577)" style description of the last coordinate.
std::string describe_last(const Cell& cell);

}  // namespace realideal

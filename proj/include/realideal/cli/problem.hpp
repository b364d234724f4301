#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realideal/cad/cad.hpp"
#include "realideal/ideal/ideal.hpp"
#include "realideal/sdp/sdp.hpp"

namespace realideal {

/// Parsed problem file. Serves both the optimization shape (objective
/// present) and the set shape (S and I only).
struct ProblemFile {
  std::vector<std::string> vars;
  std::optional<MPoly> objective;
  /// Top-level sign conditions `p >= 0` and `p > 0`.
  std::vector<Constraint> constraints;
  /// Top-level `p = 0` lines; they generate I.
  std::vector<MPoly> equations;
  /// Each `or` statement lists alternative conjunctions; S is the top-level
  /// conditions and one alternative from every statement.
  std::vector<std::vector<std::vector<Constraint>>> alternatives;
  /// `hint component:` lines, one generator list per component.
  std::vector<std::vector<MPoly>> hints;
  std::optional<std::pair<int, int>> order;

  [[nodiscard]] int nvars() const { return static_cast<int>(vars.size()); }
  [[nodiscard]] SemialgebraicSet set() const;
  [[nodiscard]] Ideal ideal() const;
  [[nodiscard]] std::optional<std::vector<Ideal>> hint_ideals() const;
  /// Throws UnsupportedScope for `or` blocks and InvalidInput without an objective.
  /// Strict inequalities enter as non-strict ones.
  [[nodiscard]] Pop pop() const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

/// Throws ParseError with the byte offset of the problem.
ProblemFile parse_problem(std::string_view text);

/// Canonical text that parses back to an equal ProblemFile.
std::string render(const ProblemFile& p);

/// 1-based line and column of a byte offset.
std::pair<int, int> line_column(std::string_view text, std::size_t offset);

}  // namespace realideal

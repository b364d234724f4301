#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "realideal/poly/mpoly.hpp"

namespace realideal {

/// Syntax error with the byte offset where it was detected.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t offset) : InvalidInput(what), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses a polynomial expression starting at `pos`, stopping before the first
/// character that cannot continue it. On return `pos` points past the expression.
/// Grammar: sums and differences of products of powers; powers take a
/// non-negative integer exponent; division only by nonzero constants.
MPoly parse_poly_at(std::string_view text, std::size_t& pos, const std::vector<std::string>& names,
                    MonomialOrder order = MonomialOrder::grevlex());

/// Parses a whole string as one polynomial.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& names,
                 MonomialOrder order = MonomialOrder::grevlex());

}  // namespace realideal

#include "realideal/poly/parse.hpp"

#include <cctype>

namespace realideal {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos, const std::vector<std::string>& names, MonomialOrder order)
      : text_(text), pos_(pos), names_(names), order_(order) {}

  MPoly expression() {
    skip();
    MPoly acc = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  [[nodiscard]] std::size_t pos() const { return pos_; }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        acc *= unary();
      } else if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division only by a nonzero constant", at);
        acc *= Rational(1 / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) throw ParseError("exponent too large", start);
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  MPoly primary() {
    skip();
    char c = peek();
    int n = static_cast<int>(names_.size());
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '.') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      std::string lit(text_.substr(start, pos_ - start));
      if (lit == ".") throw ParseError("malformed number", start);
      return MPoly::constant(n, parse_rational(lit), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string id(text_.substr(start, pos_ - start));
      for (int i = 0; i < n; ++i)
        if (names_[static_cast<std::size_t>(i)] == id) return MPoly::variable(n, i, order_);
      throw ParseError("undeclared variable '" + id + "'", start);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_;
  const std::vector<std::string>& names_;
  MonomialOrder order_;
};

}  // namespace

MPoly parse_poly_at(std::string_view text, std::size_t& pos, const std::vector<std::string>& names,
                    MonomialOrder order) {
  Parser p(text, pos, names, order);
  MPoly r = p.expression();
  pos = p.pos();
  return r;
}

MPoly parse_poly(std::string_view text, const std::vector<std::string>& names, MonomialOrder order) {
  std::size_t pos = 0;
  MPoly r = parse_poly_at(text, pos, names, order);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
  return r;
}

}  // namespace realideal

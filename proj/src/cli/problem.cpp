#include "realideal/cli/problem.hpp"

#include <cctype>

#include "realideal/poly/parse.hpp"

namespace realideal {

namespace {

bool same(const std::vector<Constraint>& a, const std::vector<Constraint>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rel != b[i].rel || a[i].poly != b[i].poly) return false;
  return true;
}

bool is_keyword(const std::string& s) {
  return s == "vars" || s == "minimize" || s == "hint" || s == "component" || s == "order" || s == "or";
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ProblemFile file() {
    ProblemFile p;
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty problem file", pos_);
    std::size_t at = pos_;
    if (word() != "vars") throw ParseError("expected 'vars'", at);
    for (;;) {
      skip();
      if (peek() == ';') break;
      at = pos_;
      std::string v = word();
      if (v.empty()) throw ParseError("expected a variable name", at);
      if (is_keyword(v)) throw ParseError("'" + v + "' is reserved", at);
      for (const auto& w : p.vars)
        if (w == v) throw ParseError("variable '" + v + "' declared twice", at);
      p.vars.push_back(v);
    }
    if (p.vars.empty()) throw ParseError("no variables declared", pos_);
    ++pos_;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) break;
      statement(p);
    }
    return p;
  }

 private:
  void statement(ProblemFile& p) {
    std::size_t at = pos_;
    std::string w = lookahead_word();
    if (w == "minimize") {
      word();
      if (p.objective) throw ParseError("second objective", at);
      p.objective = poly(p);
      expect(';');
    } else if (w == "hint") {
      word();
      skip();
      std::size_t c = pos_;
      if (word() != "component") throw ParseError("expected 'component'", c);
      expect(':');
      std::vector<MPoly> gens{poly(p)};
      for (;;) {
        skip();
        if (peek() != ',') break;
        ++pos_;
        gens.push_back(poly(p));
      }
      expect(';');
      p.hints.push_back(std::move(gens));
    } else if (w == "order") {
      word();
      if (p.order) throw ParseError("second order range", at);
      int lo = integer();
      expect('.');
      expect('.');
      int hi = integer();
      if (hi < lo) throw ParseError("empty order range", at);
      expect(';');
      p.order = std::pair{lo, hi};
    } else if (w == "or") {
      word();
      std::vector<std::vector<Constraint>> alts;
      for (;;) {
        skip();
        if (peek() != '{') break;
        ++pos_;
        std::vector<Constraint> conj;
        for (;;) {
          skip();
          if (peek() == '}') break;
          std::size_t c = pos_;
          auto [poly_, rel] = condition(p);
          if (rel == Relation::Equal) throw ParseError("equations are not allowed inside 'or'", c);
          conj.push_back({poly_, rel});
          expect(';');
        }
        ++pos_;
        alts.push_back(std::move(conj));
      }
      if (alts.empty()) throw ParseError("expected '{'", pos_);
      expect(';');
      p.alternatives.push_back(std::move(alts));
    } else {
      auto [poly_, rel] = condition(p);
      expect(';');
      if (rel == Relation::Equal) {
        p.equations.push_back(poly_);
      } else {
        p.constraints.push_back({poly_, rel});
      }
    }
  }

  std::pair<MPoly, Relation> condition(const ProblemFile& p) {
    MPoly lhs = poly(p);
    skip();
    Relation rel;
    if (text_.substr(pos_, 2) == ">=") {
      rel = Relation::GreaterEq;
      pos_ += 2;
    } else if (peek() == '>') {
      rel = Relation::Greater;
      ++pos_;
    } else if (peek() == '=') {
      rel = Relation::Equal;
      ++pos_;
    } else {
      throw ParseError("expected '>=', '>' or '='", pos_);
    }
    MPoly rhs = poly(p);
    return {lhs - rhs, rel};
  }

  MPoly poly(const ProblemFile& p) {
    skip();
    return parse_poly_at(text_, pos_, p.vars);
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 4) throw ParseError("expected a small integer", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string lookahead_word() {
    std::size_t save = pos_;
    std::string w = word();
    pos_ = save;
    return w;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (start < pos_ && std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      return {};
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string relation_text(Relation r) {
  switch (r) {
    case Relation::Greater:
      return ">";
    case Relation::GreaterEq:
      return ">=";
    case Relation::Equal:
      return "=";
  }
  return "?";
}

}  // namespace

SemialgebraicSet ProblemFile::set() const {
  std::vector<std::vector<Constraint>> conjuncts{constraints};
  for (const auto& alts : alternatives) {
    std::vector<std::vector<Constraint>> next;
    for (const auto& base : conjuncts)
      for (const auto& alt : alts) {
        auto c = base;
        c.insert(c.end(), alt.begin(), alt.end());
        next.push_back(std::move(c));
      }
    conjuncts = std::move(next);
  }
  return {nvars(), conjuncts};
}

Ideal ProblemFile::ideal() const { return Ideal(nvars(), equations); }

std::optional<std::vector<Ideal>> ProblemFile::hint_ideals() const {
  if (hints.empty()) return std::nullopt;
  std::vector<Ideal> out;
  for (const auto& h : hints) out.emplace_back(nvars(), h);
  return out;
}

Pop ProblemFile::pop() const {
  if (!objective) throw InvalidInput("no objective: add a 'minimize' line");
  if (!alternatives.empty()) throw UnsupportedScope("relaxations need a single conjunction; 'or' blocks are not supported");
  Pop p;
  p.nvars = nvars();
  p.objective = *objective;
  for (const auto& c : constraints) p.inequalities.push_back(c.poly);
  p.equalities = equations;
  return p;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (a.vars != b.vars || a.objective.has_value() != b.objective.has_value()) return false;
  if (a.objective && *a.objective != *b.objective) return false;
  if (!same(a.constraints, b.constraints) || a.equations != b.equations || a.order != b.order) return false;
  if (a.hints != b.hints || a.alternatives.size() != b.alternatives.size()) return false;
  for (std::size_t i = 0; i < a.alternatives.size(); ++i) {
    if (a.alternatives[i].size() != b.alternatives[i].size()) return false;
    for (std::size_t j = 0; j < a.alternatives[i].size(); ++j)
      if (!same(a.alternatives[i][j], b.alternatives[i][j])) return false;
  }
  return true;
}

ProblemFile parse_problem(std::string_view text) { return Reader(text).file(); }

std::string render(const ProblemFile& p) {
  const auto& n = p.vars;
  std::string out = "vars";
  for (const auto& v : n) out += " " + v;
  out += ";\n";
  if (p.objective) out += "minimize " + p.objective->to_string(n) + ";\n";
  for (const auto& c : p.constraints) out += c.poly.to_string(n) + " " + relation_text(c.rel) + " 0;\n";
  for (const auto& e : p.equations) out += e.to_string(n) + " = 0;\n";
  for (const auto& alts : p.alternatives) {
    out += "or";
    for (const auto& conj : alts) {
      out += " {";
      for (const auto& c : conj) out += " " + c.poly.to_string(n) + " " + relation_text(c.rel) + " 0;";
      out += " }";
    }
    out += ";\n";
  }
  for (const auto& h : p.hints) {
    out += "hint component:";
    for (std::size_t i = 0; i < h.size(); ++i) out += (i ? ", " : " ") + h[i].to_string(n);
    out += ";\n";
  }
  if (p.order) out += "order " + std::to_string(p.order->first) + ".." + std::to_string(p.order->second) + ";\n";
  return out;
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace realideal

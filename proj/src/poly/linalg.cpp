#include <map>

#include "realideal/poly/mpoly.hpp"

namespace realideal {

std::vector<std::vector<Rational>> PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j).evaluate(point);
  return m;
}

PolyMatrix jacobian(const std::vector<MPoly>& gens, const std::vector<int>& vars) {
  PolyMatrix j;
  j.rows = static_cast<int>(gens.size());
  j.cols = static_cast<int>(vars.size());
  for (const auto& g : gens)
    for (int v : vars) j.entries.push_back(g.derivative(v));
  return j;
}

PolyMatrix jacobian(const std::vector<MPoly>& gens) {
  std::vector<int> vars;
  if (!gens.empty())
    for (int v = 0; v < gens[0].nvars(); ++v) vars.push_back(v);
  return jacobian(gens, vars);
}

namespace {

// Row echelon form in place; returns the rank and the determinant sign flips.
int eliminate(std::vector<std::vector<Rational>>& m, Rational* det) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != r) {
      std::swap(m[piv], m[r]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank(std::vector<std::vector<Rational>> m) { return eliminate(m, nullptr); }

Rational determinant(std::vector<std::vector<Rational>> m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidInput("determinant of a non-square matrix");
  Rational d;
  int r = eliminate(m, &d);
  return r == static_cast<int>(m.size()) ? d : Rational(0);
}

std::vector<std::vector<Rational>> inverse(const std::vector<std::vector<Integer>>& t) {
  std::size_t n = t.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw InvalidInput("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = t[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) throw InvalidInput("singular linear change of coordinates");
    std::swap(a[piv], a[c]);
    Rational p = a[c][c];
    for (auto& v : a[c]) v /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

MPoly linear_change(const MPoly& p, const std::vector<std::vector<Rational>>& t) {
  int n = p.nvars();
  if (static_cast<int>(t.size()) != n) throw InvalidInput("linear change has the wrong size");
  if (sgn(determinant(t)) == 0) throw InvalidInput("singular linear change of coordinates");
  std::vector<MPoly> image;
  for (int i = 0; i < n; ++i) {
    MPoly y(n, p.order());
    for (int j = 0; j < n; ++j)
      y += MPoly::variable(n, j, p.order()) * t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    image.push_back(std::move(y));
  }
  std::map<std::pair<int, int>, MPoly> powers;
  auto power = [&](int v, int e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(image[static_cast<std::size_t>(v)], static_cast<unsigned>(e))).first;
    return it->second;
  };
  MPoly out(n, p.order());
  for (const auto& term : p.terms()) {
    MPoly m = MPoly::constant(n, term.coeff, p.order());
    for (int v = 0; v < n; ++v)
      if (term.exp[static_cast<std::size_t>(v)] > 0) m *= power(v, term.exp[static_cast<std::size_t>(v)]);
    out += m;
  }
  return out;
}

MPoly linear_change(const MPoly& p, const std::vector<std::vector<Integer>>& t) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : t) q.emplace_back(row.begin(), row.end());
  return linear_change(p, q);
}

}  // namespace realideal

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "realideal/poly/mpoly.hpp"

namespace realideal {

/// Reduced Groebner basis: primitive integer coefficients, positive leading
/// coefficients, sorted by increasing leading monomial. {1} for the unit ideal.
std::vector<MPoly> groebner(const std::vector<MPoly>& gens, const MonomialOrder& order);

/// Remainder of f on full division by `basis`.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis);

/// S-polynomial of two polynomials with the same order.
MPoly s_polynomial(const MPoly& f, const MPoly& g);

/// True when every S-polynomial of the basis reduces to zero.
bool is_groebner(const std::vector<MPoly>& basis);

/// Ideal of Q[x_1..x_n] given by generators. The reduced Groebner basis is
/// computed on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(int nvars, std::vector<MPoly> gens, MonomialOrder order = MonomialOrder::grevlex());

  static Ideal unit(int nvars, MonomialOrder order = MonomialOrder::grevlex());

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<MPoly>& generators() const { return gens_; }
  [[nodiscard]] const std::vector<MPoly>& basis() const;

  [[nodiscard]] bool is_unit() const;
  [[nodiscard]] bool is_zero() const { return basis().empty(); }
  [[nodiscard]] MPoly reduce(const MPoly& f) const;
  [[nodiscard]] bool contains(const MPoly& f) const { return reduce(f).is_zero(); }
  [[nodiscard]] bool contains(const Ideal& other) const;
  [[nodiscard]] Ideal with_order(const MonomialOrder& order) const;
  /// Ideal generated by these generators plus extra ones.
  [[nodiscard]] Ideal plus(const std::vector<MPoly>& extra) const;
  /// The same ideal with its reduced basis as generator list.
  [[nodiscard]] Ideal canonical() const;

  /// "<g1, g2>" using the reduced basis.
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;
  /// "<g1, g2>" using the generators as given.
  [[nodiscard]] std::string generators_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    std::vector<MPoly> basis;
  };
  int nvars_ = 0;
  MonomialOrder order_;
  std::vector<MPoly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool member(const MPoly& f, const Ideal& i);

/// Generators of I ∩ J via elimination of an auxiliary variable.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);
/// Generators of (I : <g>).
Ideal quotient(const Ideal& i, const MPoly& g);
/// I ∩ Q[vars] expressed in the original ring.
Ideal eliminate_to(const Ideal& i, const std::vector<int>& keep);
/// f lies in the radical of I (Rabinowitsch).
bool radical_member(const MPoly& f, const Ideal& i);

/// Krull dimension; -1 for the unit ideal.
int dimension(const Ideal& i);
/// Maximal (by inclusion) sets of variables independent modulo the leading
/// term ideal, in lexicographic order of their sorted index lists.
std::vector<std::vector<int>> maximal_independent_sets(const Ideal& i);
/// Lexicographically first variable set of size dimension(I) on which I
/// restricts to zero. Unlike the leading-term sets this does not depend on the order.
std::vector<int> first_top_independent_set(const Ideal& i);
/// I ∩ Q[vars] != {0}.
bool rationally_trivial(const Ideal& i, const std::vector<int>& vars);

}  // namespace realideal

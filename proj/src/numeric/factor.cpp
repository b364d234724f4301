// Univariate factorization over the rationals.
//
// Squarefree parts are factored by the Zassenhaus scheme: a factorization
// modulo a small prime p (distinct-degree + Cantor-Zassenhaus splitting),
// linear Hensel lifting to p^k beyond the Mignotte bound, then recombination
// of lifted factors by trial division over the integers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>

#include "realideal/numeric/unipoly.hpp"

namespace realideal {

namespace {

using ZPoly = std::vector<Integer>;  // low to high, trimmed
using Mod = long long;
using MPoly_ = std::vector<Mod>;  // polynomial over Z/p

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

void trim(MPoly_& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly to_z(const UniPoly& p) {
  UniPoly q = p.primitive();
  ZPoly out;
  for (const auto& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

UniPoly from_z(const ZPoly& a, int var) {
  std::vector<Rational> c;
  for (const auto& v : a) c.emplace_back(v);
  return UniPoly(std::move(c), var);
}

Mod mod(const Integer& z, Mod p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
  return static_cast<Mod>(r.get_si());
}

Mod powmod(Mod b, Mod e, Mod p) {
  Mod r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Mod inv(Mod a, Mod p) { return powmod(((a % p) + p) % p, p - 2, p); }

// ---- arithmetic over Z/p -------------------------------------------------

MPoly_ reduce(const ZPoly& a, Mod p) {
  MPoly_ r;
  for (const auto& c : a) r.push_back(mod(c, p));
  trim(r);
  return r;
}

MPoly_ mul(const MPoly_& a, const MPoly_& b, Mod p) {
  if (a.empty() || b.empty()) return {};
  MPoly_ r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

MPoly_ sub(MPoly_ a, const MPoly_& b, Mod p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

std::pair<MPoly_, MPoly_> divmod(MPoly_ a, const MPoly_& b, Mod p) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {{}, a};
  MPoly_ q(da - db + 1, 0);
  Mod il = inv(b.back(), p);
  for (int i = da; i >= db; --i) {
    Mod f = a[i] * il % p;
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

MPoly_ monic(MPoly_ a, Mod p) {
  if (a.empty()) return a;
  Mod il = inv(a.back(), p);
  for (auto& c : a) c = c * il % p;
  return a;
}

MPoly_ gcd(MPoly_ a, MPoly_ b, Mod p) {
  while (!b.empty()) {
    auto r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

MPoly_ derivative(const MPoly_& a, Mod p) {
  MPoly_ d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<Mod>(i) % p);
  trim(d);
  return d;
}

MPoly_ powmod_poly(MPoly_ base, Integer e, const MPoly_& m, Mod p) {
  MPoly_ r{1};
  base = divmod(base, m, p).second;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = divmod(mul(r, base, p), m, p).second;
    base = divmod(mul(base, base, p), m, p).second;
    e /= 2;
  }
  return r;
}

// extended Euclid: s*a + t*b = 1 (a, b coprime)
void ext_gcd(const MPoly_& a, const MPoly_& b, Mod p, MPoly_& s, MPoly_& t) {
  MPoly_ r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    MPoly_ s2 = sub(s0, mul(q, s1, p), p);
    MPoly_ t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Mod il = inv(r0.back(), p);
  for (auto& c : s0) c = c * il % p;
  for (auto& c : t0) c = c * il % p;
  trim(s0);
  trim(t0);
  s = s0;
  t = t0;
}

// f monic squarefree over Z/p; returns monic irreducible factors
std::vector<MPoly_> factor_mod_p(const MPoly_& f, Mod p, std::mt19937_64& rng) {
  std::vector<MPoly_> result;
  // distinct-degree factorization
  std::vector<std::pair<MPoly_, int>> dd;
  MPoly_ rest = f;
  MPoly_ h{0, 1};  // x
  MPoly_ x{0, 1};
  for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
    h = powmod_poly(h, Integer(static_cast<long>(p)), rest, p);
    MPoly_ g = gcd(rest, sub(h, x, p), p);
    if (g.size() > 1) {
      dd.emplace_back(g, d);
      rest = divmod(rest, g, p).first;
      h = divmod(h, rest, p).second;
    }
  }
  if (rest.size() > 1) dd.emplace_back(monic(rest, p), static_cast<int>(rest.size()) - 1);

  // equal-degree splitting (p odd)
  std::function<void(const MPoly_&, int)> split = [&](const MPoly_& g, int d) {
    int deg = static_cast<int>(g.size()) - 1;
    if (deg == d) {
      result.push_back(monic(g, p));
      return;
    }
    std::uniform_int_distribution<Mod> coin(0, p - 1);
    for (;;) {
      MPoly_ a(deg, 0);
      for (auto& c : a) c = coin(rng);
      trim(a);
      if (a.size() <= 1) continue;
      Integer e = (pow(Integer(static_cast<long>(p)), static_cast<unsigned>(d)) - 1) / 2;
      MPoly_ b = powmod_poly(a, e, g, p);
      b = sub(b, MPoly_{1}, p);
      MPoly_ c = gcd(g, b, p);
      int dc = static_cast<int>(c.size()) - 1;
      if (dc > 0 && dc < deg) {
        split(c, d);
        split(divmod(g, c, p).first, d);
        return;
      }
    }
  };
  for (auto& [g, d] : dd) split(g, d);
  std::sort(result.begin(), result.end());
  return result;
}

// ---- integer / p-adic helpers ---------------------------------------------

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void zmod(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

void symmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
}

ZPoly lift_poly(const MPoly_& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  trim(r);
  return r;
}

// divide a monic polynomial modulo m by a monic divisor
// F monic mod p^k, F = G*H mod p with G, H monic and coprime mod p
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, MPoly_ g, MPoly_ h, Mod p, unsigned k) {
  MPoly_ s, t;
  ext_gcd(g, h, p, s, t);
  ZPoly G = lift_poly(g), H = lift_poly(h);
  Integer pj = static_cast<long>(p);
  for (unsigned j = 1; j < k; ++j) {
    Integer pj1 = pj * static_cast<long>(p);
    ZPoly diff = F;
    ZPoly gh = zmul(G, H);
    if (diff.size() < gh.size()) diff.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    zmod(diff, pj1);
    for (auto& c : diff) c /= pj;  // exact: F = GH mod p^j
    MPoly_ e = reduce(diff, p);
    if (!e.empty()) {
      // G*dH + H*dG = e mod p
      MPoly_ et = mul(e, t, p);
      auto [q, dG] = divmod(et, g, p);
      MPoly_ dH = mul(e, s, p);
      MPoly_ qh = mul(q, h, p);
      if (dH.size() < qh.size()) dH.resize(qh.size(), 0);
      for (std::size_t i = 0; i < qh.size(); ++i) dH[i] = (dH[i] + qh[i]) % p;
      trim(dH);
      ZPoly zg = lift_poly(dG), zh = lift_poly(dH);
      if (G.size() < zg.size()) G.resize(zg.size(), Integer(0));
      for (std::size_t i = 0; i < zg.size(); ++i) G[i] += zg[i] * pj;
      if (H.size() < zh.size()) H.resize(zh.size(), Integer(0));
      for (std::size_t i = 0; i < zh.size(); ++i) H[i] += zh[i] * pj;
      zmod(G, pj1);
      zmod(H, pj1);
    }
    pj = pj1;
  }
  return {G, H};
}

std::vector<ZPoly> hensel_multi(const ZPoly& F, const std::vector<MPoly_>& factors, Mod p, unsigned k,
                                const Integer& modulus) {
  std::vector<ZPoly> out;
  ZPoly cur = F;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    MPoly_ h{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) h = mul(h, factors[j], p);
    auto [G, H] = hensel_pair(cur, factors[i], h, p, k);
    out.push_back(G);
    cur = H;
    zmod(cur, modulus);
  }
  out.push_back(cur);
  return out;
}

bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  // exact division over Z
  int df = static_cast<int>(f.size()) - 1;
  int dg = static_cast<int>(g.size()) - 1;
  if (dg > df) return false;
  ZPoly a = f;
  ZPoly q(df - dg + 1, Integer(0));
  for (int i = df; i >= dg; --i) {
    if (sgn(a[i]) == 0) continue;
    if (!mpz_divisible_p(a[i].get_mpz_t(), g.back().get_mpz_t())) return false;
    Integer c = a[i] / g.back();
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) a[i - dg + j] -= c * g[j];
  }
  for (int i = 0; i < dg; ++i)
    if (sgn(a[i]) != 0) return false;
  trim(q);
  quotient = q;
  return true;
}

ZPoly zprimitive(ZPoly a) {
  Integer g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) == 0) return a;
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f squarefree primitive, degree >= 1. Returns irreducible factors over Z.
// When only_linear is set, only linear factors are split off.
std::vector<ZPoly> zassenhaus(ZPoly f, bool only_linear) {
  std::vector<ZPoly> found;
  int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {f};
  // pick a good prime
  static const Mod primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,
                               53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109,
                               113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
                               193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269};
  Mod p = 0;
  std::vector<MPoly_> modfactors;
  std::mt19937_64 rng(0x5eedULL);
  std::size_t best = SIZE_MAX;
  int good_primes = 0;
  for (Mod cand : primes) {
    if (mod(f.back(), cand) == 0) continue;
    MPoly_ fp = reduce(f, cand);
    if (gcd(fp, derivative(fp, cand), cand).size() != 1) continue;
    auto facs = factor_mod_p(monic(fp, cand), cand, rng);
    if (facs.size() < best) {
      best = facs.size();
      p = cand;
      modfactors = facs;
    }
    // a few good primes are enough to find a cheap recombination
    if (best <= 2 || ++good_primes >= 5) break;
  }
  if (p == 0) throw Error("no suitable prime for factorization");
  if (modfactors.size() == 1) return {f};
  if (only_linear) {
    std::vector<MPoly_> lin;
    for (auto& g : modfactors)
      if (g.size() == 2) lin.push_back(g);
    if (lin.empty()) return {f};
  }

  // Mignotte bound on factor coefficients, scaled by the leading coefficient
  Integer norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * abs(f.back()) * pow(Integer(2), static_cast<unsigned>(n)) * norm;
  unsigned k = 1;
  Integer modulus = static_cast<long>(p);
  while (modulus <= bound) {
    modulus *= static_cast<long>(p);
    ++k;
  }
  // monic image of f modulo p^k
  Integer lcinv;
  Integer lc = f.back();
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly F = f;
  for (auto& c : F) c *= lcinv;
  zmod(F, modulus);
  auto lifted = hensel_multi(F, modfactors, p, k, modulus);

  std::vector<bool> used(lifted.size(), false);
  int remaining = static_cast<int>(lifted.size());
  for (int s = 1; 2 * s <= remaining; ++s) {
    if (only_linear && s > 1) break;
    bool restart = true;
    while (restart) {
      restart = false;
      std::vector<int> pool;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) pool.push_back(static_cast<int>(i));
      if (2 * s > static_cast<int>(pool.size())) break;
      std::vector<int> idx(s);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        ZPoly cand{f.back()};
        for (int i : idx) {
          cand = zmul(cand, lifted[pool[i]]);
          zmod(cand, modulus);
        }
        symmetric(cand, modulus);
        cand = zprimitive(cand);
        if (only_linear && cand.size() != 2) continue;
        ZPoly q;
        if (cand.size() >= 2 && zdivides(f, cand, q)) {
          found.push_back(cand);
          f = zprimitive(q);
          for (int i : idx) used[pool[i]] = true;
          remaining -= s;
          restart = true;
          break;
        }
      } while (next_combination(idx, static_cast<int>(pool.size())));
    }
  }
  if (f.size() > 1) found.push_back(zprimitive(f));
  return found;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.to_string() < b.to_string();
}

}  // namespace

std::vector<UniPoly> irreducible_factors(const UniPoly& p, int degree_cap) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  ZPoly f = to_z(p);
  // strip a power of x first
  std::size_t shift = 0;
  while (shift < f.size() && sgn(f[shift]) == 0) ++shift;
  if (shift > 0) {
    out.push_back(UniPoly({Rational(0), Rational(1)}, p.var()));
    f.erase(f.begin(), f.begin() + static_cast<long>(shift));
  }
  if (f.size() > 1) {
    bool capped = static_cast<int>(f.size()) - 1 > degree_cap;
    for (auto& z : zassenhaus(zprimitive(f), capped)) out.push_back(from_z(z, p.var()));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

UniFactorization factor_univariate(const UniPoly& p, int degree_cap) {
  if (p.is_zero()) throw InvalidInput("factor_univariate of the zero polynomial");
  UniFactorization out;
  UniPoly product(Rational(1));
  for (auto& [sq, mult] : squarefree_decomposition(p)) {
    UniPoly prim = sq.primitive();
    bool capped = prim.degree() > degree_cap;
    auto facs = irreducible_factors(prim, degree_cap);
    for (auto& f : facs) {
      // with a cap in force only the linear factors are certainly irreducible
      if (capped && f.degree() > 1) {
        out.unfactored.push_back(f);
      }
      out.factors.emplace_back(f, mult);
      product *= pow(f, static_cast<unsigned>(mult));
    }
  }
  out.unit = product.is_zero() ? Rational(0) : Rational(p.lc() / product.lc());
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

}  // namespace realideal

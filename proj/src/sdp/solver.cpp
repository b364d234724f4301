#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "realideal/sdp/sdp.hpp"

namespace realideal {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMatrix& a, std::size_t cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  a.resize(row);
  return pivots;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

MatrixXd to_double(const RMatrix& m) {
  MatrixXd out(static_cast<Eigen::Index>(m.size()), m.empty() ? 0 : static_cast<Eigen::Index>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j].get_d();
  return out;
}

// Block-diagonal symmetric matrix.
using Blocks = std::vector<MatrixXd>;

double inner(const Blocks& a, const Blocks& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].cwiseProduct(b[i]).sum();
  return s;
}

double norm(const Blocks& a) { return std::sqrt(inner(a, a)); }

// Largest t with x + t dx >= 0, capped at a large value.
double max_step(const MatrixXd& x, const MatrixXd& dx) {
  Eigen::LLT<MatrixXd> llt(x);
  if (llt.info() != Eigen::Success) return 0;
  MatrixXd l = llt.matrixL();
  MatrixXd t = l.triangularView<Eigen::Lower>().solve(dx);
  t = l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
  t = 0.5 * (t + t.transpose());
  double lam = Eigen::SelfAdjointEigenSolver<MatrixXd>(t, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  return lam >= 0 ? 1e30 : -1 / lam;
}

// Standard pair: min <C,X> s.t. <A_i,X> = b_i, X >= 0, and max b'w s.t. C - sum w_i A_i >= 0.
struct Standard {
  Blocks c;
  std::vector<Blocks> a;
  VectorXd b;
};

struct IpmResult {
  SolveStatus status = SolveStatus::MaxIter;
  Blocks x;
  Blocks z;
  VectorXd w;
  int iterations = 0;
};

IpmResult hkm(const Standard& sp, double tol) {
  const std::size_t nb = sp.c.size();
  const auto m = static_cast<Eigen::Index>(sp.a.size());
  double n = 0;
  for (const auto& blk : sp.c) n += static_cast<double>(blk.rows());

  double b_norm = sp.b.norm();
  double c_norm = norm(sp.c);
  double xi = std::max(10.0, std::sqrt(n));
  double eta = std::max({10.0, std::sqrt(n), c_norm});
  for (Eigen::Index i = 0; i < m; ++i) {
    double an = norm(sp.a[static_cast<std::size_t>(i)]);
    xi = std::max(xi, n * (1 + std::abs(sp.b(i))) / (1 + an));
    eta = std::max(eta, an);
  }
  IpmResult r;
  r.w = VectorXd::Zero(m);
  for (const auto& blk : sp.c) {
    r.x.push_back(xi * MatrixXd::Identity(blk.rows(), blk.cols()));
    r.z.push_back(eta * MatrixXd::Identity(blk.rows(), blk.cols()));
  }

  auto primal_residual = [&](const Blocks& x) {
    VectorXd rp(m);
    for (Eigen::Index i = 0; i < m; ++i) rp(i) = sp.b(i) - inner(sp.a[static_cast<std::size_t>(i)], x);
    return rp;
  };
  auto dual_residual = [&]() {
    Blocks rd = sp.c;
    for (std::size_t k = 0; k < nb; ++k) {
      rd[k] -= r.z[k];
      for (Eigen::Index i = 0; i < m; ++i) rd[k] -= r.w(i) * sp.a[static_cast<std::size_t>(i)][k];
    }
    return rd;
  };

  for (r.iterations = 0; r.iterations < kMaxIterations; ++r.iterations) {
    VectorXd rp = primal_residual(r.x);
    Blocks rd = dual_residual();
    double pobj = inner(sp.c, r.x);
    double dobj = sp.b.dot(r.w);
    double mu = inner(r.x, r.z) / n;
    double relgap = std::abs(pobj - dobj) / (1 + std::abs(pobj) + std::abs(dobj));
    double pinf = rp.norm() / (1 + b_norm);
    double dinf = norm(rd) / (1 + c_norm);
    if (relgap < tol && pinf < tol && dinf < tol) {
      r.status = SolveStatus::Optimal;
      return r;
    }
    if (norm(r.x) > 1e12 || norm(r.z) > 1e12 || r.w.norm() > 1e12) {
      r.status = SolveStatus::InfeasibleSuspected;
      return r;
    }

    Blocks zinv(nb);
    bool ok = true;
    for (std::size_t k = 0; k < nb; ++k) {
      Eigen::LLT<MatrixXd> llt(r.z[k]);
      if (llt.info() != Eigen::Success) ok = false;
      zinv[k] = llt.solve(MatrixXd::Identity(r.z[k].rows(), r.z[k].cols()));
      zinv[k] = 0.5 * (zinv[k] + zinv[k].transpose());
    }
    if (!ok) break;

    // Schur complement M_ij = tr(A_i X A_j Z^-1).
    std::vector<Blocks> g(static_cast<std::size_t>(m), Blocks(nb));
    for (Eigen::Index j = 0; j < m; ++j)
      for (std::size_t k = 0; k < nb; ++k) g[static_cast<std::size_t>(j)][k] = r.x[k] * sp.a[static_cast<std::size_t>(j)][k] * zinv[k];
    MatrixXd schur(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i; j < m; ++j) {
        double v = inner(sp.a[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)]);
        schur(i, j) = v;
        schur(j, i) = v;
      }
    Eigen::LDLT<MatrixXd> ldlt(schur);
    if (ldlt.info() != Eigen::Success) break;

    // X Rd Z^-1 is shared by predictor and corrector.
    Blocks xrdz(nb);
    for (std::size_t k = 0; k < nb; ++k) xrdz[k] = r.x[k] * rd[k] * zinv[k];

    auto direction = [&](const Blocks& rc, Blocks& dx, Blocks& dz, VectorXd& dw) {
      Blocks t(nb);
      for (std::size_t k = 0; k < nb; ++k) t[k] = rc[k] * zinv[k] - xrdz[k];
      VectorXd rhs(m);
      for (Eigen::Index i = 0; i < m; ++i) rhs(i) = rp(i) - inner(sp.a[static_cast<std::size_t>(i)], t);
      dw = m > 0 ? VectorXd(ldlt.solve(rhs)) : VectorXd();
      dz = rd;
      for (std::size_t k = 0; k < nb; ++k)
        for (Eigen::Index i = 0; i < m; ++i) dz[k] -= dw(i) * sp.a[static_cast<std::size_t>(i)][k];
      dx.resize(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        MatrixXd d = (rc[k] - r.x[k] * dz[k]) * zinv[k];
        dx[k] = 0.5 * (d + d.transpose());
      }
    };
    auto steps = [&](const Blocks& dx, const Blocks& dz) {
      double ap = 1e30;
      double ad = 1e30;
      for (std::size_t k = 0; k < nb; ++k) {
        ap = std::min(ap, max_step(r.x[k], dx[k]));
        ad = std::min(ad, max_step(r.z[k], dz[k]));
      }
      return std::pair{ap, ad};
    };

    Blocks rc(nb);
    for (std::size_t k = 0; k < nb; ++k) rc[k] = -r.x[k] * r.z[k];
    Blocks dx;
    Blocks dz;
    VectorXd dw;
    direction(rc, dx, dz, dw);
    auto [ap, ad] = steps(dx, dz);
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    Blocks xa = r.x;
    Blocks za = r.z;
    for (std::size_t k = 0; k < nb; ++k) {
      xa[k] += ap * dx[k];
      za[k] += ad * dz[k];
    }
    double mu_aff = inner(xa, za) / n;
    double sigma = std::pow(std::max(0.0, mu_aff) / mu, 3);
    sigma = std::min(1.0, sigma);

    for (std::size_t k = 0; k < nb; ++k)
      rc[k] = sigma * mu * MatrixXd::Identity(r.x[k].rows(), r.x[k].cols()) - r.x[k] * r.z[k] - dx[k] * dz[k];
    direction(rc, dx, dz, dw);
    std::tie(ap, ad) = steps(dx, dz);
    double gamma = 0.95;
    ap = std::min(1.0, gamma * ap);
    ad = std::min(1.0, gamma * ad);
    for (std::size_t k = 0; k < nb; ++k) {
      r.x[k] += ap * dx[k];
      r.x[k] = 0.5 * (r.x[k] + r.x[k].transpose());
      r.z[k] += ad * dz[k];
      r.z[k] = 0.5 * (r.z[k] + r.z[k].transpose());
    }
    if (m > 0) r.w += ad * dw;
  }
  return r;
}

// Equality rows of the moment vector: L(x^beta h_j) = 0, plus y_0 = 1 as the last row.
RMatrix equality_system(const Pop& pop, const TruncationData& t, const std::map<Exponent, int>& idx) {
  std::size_t nm = t.moments.size();
  RMatrix rows;
  for (std::size_t j = 0; j < pop.equalities.size(); ++j) {
    if (t.e[j] < 0) continue;
    for (const auto& beta : monomial_basis(pop.nvars, t.e[j])) {
      std::vector<Rational> row(nm + 1, Rational(0));
      for (const auto& term : pop.equalities[j].terms())
        row[static_cast<std::size_t>(idx.at(add(beta, term.exp)))] += term.coeff;
      rows.push_back(std::move(row));
    }
  }
  std::vector<Rational> one(nm + 1, Rational(0));
  one[0] = 1;
  one[nm] = 1;
  rows.push_back(std::move(one));
  return rows;
}

}  // namespace

SolveResult solve_relaxation(const Pop& pop, int k, double tol) {
  SdpInstance inst = build_primal(pop, k);
  TruncationData t = truncation(pop, k);
  std::map<Exponent, int> idx;
  for (std::size_t i = 0; i < t.moments.size(); ++i) idx[t.moments[i]] = static_cast<int>(i);
  const std::size_t nm = t.moments.size();
  SolveResult out;
  const double inf = std::numeric_limits<double>::infinity();

  // y = yp + N z over the free moments.
  RMatrix eq = equality_system(pop, t, idx);
  std::vector<int> pivots = rref(eq, nm + 1);
  if (!pivots.empty() && pivots.back() == static_cast<int>(nm)) {
    out.status = SolveStatus::InfeasibleSuspected;
    out.primal = inf;
    out.dual = inf;
    return out;
  }
  std::vector<bool> is_pivot(nm, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free_cols;
  for (std::size_t c = 0; c < nm; ++c)
    if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
  std::vector<Rational> yp(nm, Rational(0));
  RMatrix nmat(nm, std::vector<Rational>(free_cols.size(), Rational(0)));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    auto p = static_cast<std::size_t>(pivots[r]);
    yp[p] = eq[r][nm];
    for (std::size_t f = 0; f < free_cols.size(); ++f) nmat[p][f] = -eq[r][static_cast<std::size_t>(free_cols[f])];
  }
  for (std::size_t f = 0; f < free_cols.size(); ++f) nmat[static_cast<std::size_t>(free_cols[f])][f] = 1;

  std::vector<Rational> fcoef(nm, Rational(0));
  for (const auto& term : pop.objective.terms()) fcoef[static_cast<std::size_t>(idx.at(term.exp))] = term.coeff;
  Rational constant = 0;
  for (std::size_t a = 0; a < nm; ++a) constant += fcoef[a] * yp[a];
  std::vector<Rational> ctil(free_cols.size(), Rational(0));
  for (std::size_t f = 0; f < free_cols.size(); ++f)
    for (std::size_t a = 0; a < nm; ++a) ctil[f] += fcoef[a] * nmat[a][f];

  // PSD blocks as affine functions of z: F0 + sum z_f F_f, exactly.
  std::vector<int> psd;
  for (std::size_t b = 0; b < inst.blocks.size(); ++b)
    if (!inst.blocks[b].diagonal) psd.push_back(static_cast<int>(b));
  std::size_t nz = free_cols.size();
  // affine[b][f] with f = nz for the constant part
  std::vector<std::vector<RMatrix>> affine(psd.size());
  for (std::size_t pb = 0; pb < psd.size(); ++pb) {
    auto s = static_cast<std::size_t>(inst.blocks[static_cast<std::size_t>(psd[pb])].size);
    affine[pb].assign(nz + 1, RMatrix(s, std::vector<Rational>(s, Rational(0))));
  }
  for (std::size_t a = 0; a < nm; ++a) {
    for (const auto& e : inst.matrices[a]) {
      auto it = std::find(psd.begin(), psd.end(), e.block);
      if (it == psd.end()) continue;
      auto pb = static_cast<std::size_t>(it - psd.begin());
      Rational v = a == 0 ? Rational(-e.value) : e.value;
      auto r = static_cast<std::size_t>(e.row);
      auto c = static_cast<std::size_t>(e.col);
      auto put = [&](std::size_t slot, const Rational& w) {
        if (sgn(w) == 0) return;
        affine[pb][slot][r][c] += w * v;
        if (r != c) affine[pb][slot][c][r] += w * v;
      };
      put(nz, yp[a]);
      for (std::size_t f = 0; f < nz; ++f) put(f, nmat[a][f]);
    }
  }

  // Linearly dependent directions: an objective change along a direction that
  // leaves every block fixed means the moment side is unbounded.
  RMatrix dirs;
  for (std::size_t pb = 0; pb < psd.size(); ++pb) {
    std::size_t s = affine[pb][0].size();
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = r; c < s; ++c) {
        std::vector<Rational> row(nz);
        bool any = false;
        for (std::size_t f = 0; f < nz; ++f) {
          row[f] = affine[pb][f][r][c];
          any = any || sgn(row[f]) != 0;
        }
        if (any) dirs.push_back(std::move(row));
      }
  }
  std::vector<int> indep = rref(dirs, nz);
  std::vector<bool> is_indep(nz, false);
  for (int p : indep) is_indep[static_cast<std::size_t>(p)] = true;
  for (std::size_t f = 0; f < nz; ++f) {
    if (is_indep[f]) continue;
    Rational combo = 0;
    for (std::size_t r = 0; r < indep.size(); ++r) combo += dirs[r][f] * ctil[static_cast<std::size_t>(indep[r])];
    if (combo != ctil[f]) {
      out.status = SolveStatus::InfeasibleSuspected;
      out.primal = -inf;
      out.dual = -inf;
      return out;
    }
  }

  // Restrict each block to the complement of its common kernel.
  Standard sp;
  const auto m = static_cast<Eigen::Index>(indep.size());
  sp.b = VectorXd(m);
  for (Eigen::Index i = 0; i < m; ++i) sp.b(i) = -ctil[static_cast<std::size_t>(indep[static_cast<std::size_t>(i)])].get_d();
  sp.a.assign(static_cast<std::size_t>(m), {});
  std::vector<MatrixXd> range(psd.size());
  std::vector<int> kept;
  for (std::size_t pb = 0; pb < psd.size(); ++pb) {
    std::size_t s = affine[pb][0].size();
    RMatrix stacked;
    for (std::size_t f = 0; f <= nz; ++f)
      for (const auto& row : affine[pb][f])
        if (std::any_of(row.begin(), row.end(), [](const Rational& v) { return sgn(v) != 0; })) stacked.push_back(row);
    rref(stacked, s);
    if (stacked.empty()) continue;
    MatrixXd basis = to_double(stacked).transpose();
    Eigen::HouseholderQR<MatrixXd> qr(basis);
    MatrixXd q = qr.householderQ() * MatrixXd::Identity(basis.rows(), basis.cols());
    range[pb] = q;
    kept.push_back(static_cast<int>(pb));
    sp.c.push_back(q.transpose() * to_double(affine[pb][nz]) * q);
    for (Eigen::Index i = 0; i < m; ++i)
      sp.a[static_cast<std::size_t>(i)].push_back(
          -(q.transpose() * to_double(affine[pb][static_cast<std::size_t>(indep[static_cast<std::size_t>(i)])]) * q));
  }

  IpmResult ipm;
  if (sp.c.empty()) {
    // Every block is constant zero; nothing constrains z beyond consistency.
    ipm.status = m == 0 ? SolveStatus::Optimal : SolveStatus::InfeasibleSuspected;
    ipm.w = VectorXd::Zero(m);
  } else {
    ipm = hkm(sp, tol);
  }
  out.status = ipm.status;
  out.iterations = ipm.iterations;
  double cst = constant.get_d();
  out.primal = cst - sp.b.dot(ipm.w);
  out.dual = cst - (sp.c.empty() ? 0.0 : inner(sp.c, ipm.x));
  if (ipm.status == SolveStatus::InfeasibleSuspected && m > 0 && sp.c.empty()) {
    out.primal = -inf;
    out.dual = -inf;
  }

  std::vector<double> z(nz, 0.0);
  for (Eigen::Index i = 0; i < m; ++i) z[static_cast<std::size_t>(indep[static_cast<std::size_t>(i)])] = ipm.w(i);
  out.moments.assign(nm, 0.0);
  for (std::size_t a = 0; a < nm; ++a) {
    double v = yp[a].get_d();
    for (std::size_t f = 0; f < nz; ++f)
      if (sgn(nmat[a][f]) != 0) v += nmat[a][f].get_d() * z[f];
    out.moments[a] = v;
  }

  // Gram matrices in the original bases and the certificate residual.
  GramSystem sys = build_dual(pop, k);
  std::vector<MatrixXd> gram;
  for (std::size_t pb = 0; pb < psd.size(); ++pb) {
    auto s = static_cast<Eigen::Index>(inst.blocks[static_cast<std::size_t>(psd[pb])].size);
    MatrixXd gm = MatrixXd::Zero(s, s);
    auto pos = std::find(kept.begin(), kept.end(), static_cast<int>(pb));
    if (pos != kept.end() && !ipm.x.empty()) {
      const MatrixXd& x = ipm.x[static_cast<std::size_t>(pos - kept.begin())];
      gm = range[pb] * x * range[pb].transpose();
    }
    gram.push_back(gm);
    out.gram.emplace_back(gm.data(), gm.data() + gm.size());
  }
  VectorXd res(static_cast<Eigen::Index>(nm));
  for (std::size_t a = 0; a < nm; ++a) {
    double v = sys.rhs[a].get_d() - (a == 0 ? out.dual : 0.0);
    for (const auto& e : sys.rows[a]) {
      double g = gram[static_cast<std::size_t>(e.block)](e.row, e.col);
      v -= e.value.get_d() * g * (e.row == e.col ? 1 : 2);
    }
    res(static_cast<Eigen::Index>(a)) = v;
  }
  auto nmult = static_cast<Eigen::Index>(sys.multipliers.size());
  if (nmult > 0) {
    MatrixXd h = MatrixXd::Zero(static_cast<Eigen::Index>(nm), nmult);
    for (std::size_t a = 0; a < nm; ++a)
      for (const auto& [col, v] : sys.multiplier_rows[a]) h(static_cast<Eigen::Index>(a), col) = v.get_d();
    VectorXd r = h.colPivHouseholderQr().solve(res);
    out.multipliers.assign(r.data(), r.data() + r.size());
    res -= h * r;
  }
  out.gram_residual = nm > 0 ? res.cwiseAbs().maxCoeff() : 0.0;
  return out;
}

}  // namespace realideal

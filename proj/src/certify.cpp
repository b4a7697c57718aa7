#include "rigidity/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace rigidity {

std::string to_string(VerdictOutcome v) {
  switch (v) {
    case VerdictOutcome::rigid_by_vanishing:
      return "rigid_by_vanishing";
    case VerdictOutcome::rigid_by_certificate:
      return "rigid_by_certificate";
    case VerdictOutcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

RealSubspace centralizer_in_g(const Embedding& e, const ToleranceConfig& cfg) {
  std::vector<RMatrix> ops;
  ops.reserve(e.images.size());
  for (const auto& img : e.images) ops.push_back(e.target->ad(img));
  return joint_kernel(ops, e.target->dim(), cfg);
}

RealSubspace centralizer_in_k(const Embedding& e, const ToleranceConfig& cfg) {
  const int D = e.target->dim();
  std::vector<RMatrix> ops;
  ops.reserve(e.images.size() + 1);
  for (const auto& img : e.images) ops.push_back(e.target->ad(img));
  ops.push_back(e.target->cartan_theta() - RMatrix::Identity(D, D));
  RealSubspace zk = joint_kernel(ops, D, cfg);
  if (zk.dim() == 0) return zk;
  return orthonormalize(zk, e.target->compact_inner(), cfg);
}

RMatrix gram_of_Q(const RVector& Z, const WmSubspace& W, const AlgebraPtr& g,
                  double* antisym_norm) {
  const RMatrix& V = W.subspace.basis;
  const int w = static_cast<int>(V.cols());
  const RMatrix JV = V * W.Jm;  // column b = J_m w_b in ambient coordinates
  const RVector BZ = g->trace_gram() * Z;
  RMatrix M(w, w);
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b)
      M(a, b) = -BZ.dot(g->bracket(V.col(a), JV.col(b)));
  if (antisym_norm) *antisym_norm = 0.5 * (M - M.transpose()).norm();
  return (M + M.transpose()) / 2.0;
}

std::map<int, double> margins_of(const RVector& Z,
                                 const std::vector<WmSubspace>& wms,
                                 const AlgebraPtr& g) {
  std::map<int, double> out;
  for (const auto& W : wms) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(gram_of_Q(Z, W, g));
    out[W.m] = es.eigenvalues()(0);
  }
  return out;
}

std::pair<double, double> diagonal_gamma_window(int n, int q0, int p, int q) {
  const int p1 = p - n * q0;
  const int q1 = q - q0;
  if (p1 <= 0) throw BadParameters("gamma window requires p1 > 0");
  const double lo = double(p1) / double((n + 1) * q0 + q1);
  const double hi = q1 > 0
                        ? double((n + 1) * q0 + p1) / double(q1)
                        : std::numeric_limits<double>::infinity();
  return {lo, hi};
}

AlgebraElement diagonal_reference_Z(int n, int q0, int p, int q, double gamma,
                                    const AlgebraPtr& target,
                                    const ToleranceConfig& cfg) {
  GroupCase c{CaseKind::diagonal, n, q0, p, q, {}};
  c.validate();
  const int p1 = p - n * q0;
  const int q1 = q - q0;
  const int head = (n + 1) * q0;
  const cxd I(0, 1);
  CMatrix Z = CMatrix::Zero(p + q, p + q);
  if (p1 > 0) {
    const auto [lo, hi] = diagonal_gamma_window(n, q0, p, q);
    if (!(gamma > lo && gamma < hi))
      throw GammaOutOfWindow("gamma " + std::to_string(gamma) +
                             " outside (" + std::to_string(lo) + ", " +
                             std::to_string(hi) + ")");
    const double beta = -1.0;
    const double alpha = (p1 - gamma * q1) / double(head);
    if (!(gamma > alpha && alpha > beta))
      throw GammaOutOfWindow("gamma does not give gamma > alpha > beta");
    for (int i = 0; i < head; ++i) Z(i, i) = I * alpha;
    for (int i = 0; i < p1; ++i) Z(head + i, head + i) = I * beta;
    for (int i = 0; i < q1; ++i) Z(head + p1 + i, head + p1 + i) = I * gamma;
  } else {
    if (q1 <= 0) throw BadParameters("p1 = 0 requires q1 > 0");
    const double alpha = -double(q1) / double(head);
    for (int i = 0; i < head; ++i) Z(i, i) = I * alpha;
    for (int i = 0; i < q1; ++i) Z(head + i, head + i) = I;
  }
  double res = 0.0;
  RVector coords = target->coordinates(Z, &res);
  if (res > cfg.residual_tol)
    throw BadParameters("reference Z is not in the target algebra");
  return AlgebraElement{target, coords};
}

AlgebraElement satake_reference_Z0(const AlgebraPtr& target,
                                   const ToleranceConfig& cfg) {
  const int k = target->matrix_size() / 2;
  double res = 0.0;
  RVector coords = target->coordinates(real_structure(k).cast<cxd>(), &res);
  if (res > cfg.residual_tol)
    throw BadParameters("multiplication by i is not in the target algebra");
  return AlgebraElement{target, coords};
}

namespace {

bool lex_less(const RVector& a, const RVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i) - 1e-15) return true;
    if (a(i) > b(i) + 1e-15) return false;
  }
  return false;
}

}  // namespace

SearchOutcome certificate_search(const Embedding& e,
                                 const DecompositionReport& rep,
                                 const std::vector<WmSubspace>& wms,
                                 const ToleranceConfig& cfg) {
  if (rep.g1_dims.empty())
    throw BadParameters("certificate_search needs at least one sym_power component");
  RealSubspace zk = centralizer_in_k(e, cfg);
  const int zdim = zk.dim();
  if (zdim == 0) throw EmptyCentralizer("the compact centralizer is zero");

  // Grams of Q for each centralizer basis element; Q is linear in Z
  std::vector<std::vector<RMatrix>> gm(wms.size());
  for (size_t w = 0; w < wms.size(); ++w)
    for (int k = 0; k < zdim; ++k)
      gm[w].push_back(gram_of_Q(zk.basis.col(k), wms[w], e.target));

  auto fval = [&](const RVector& c, int* active = nullptr,
                  RVector* eigvec = nullptr) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t w = 0; w < wms.size(); ++w) {
      RMatrix Gz = RMatrix::Zero(gm[w][0].rows(), gm[w][0].cols());
      for (int k = 0; k < zdim; ++k)
        if (c(k) != 0.0) Gz += c(k) * gm[w][k];
      Eigen::SelfAdjointEigenSolver<RMatrix> es(Gz);
      if (es.eigenvalues()(0) < best) {
        best = es.eigenvalues()(0);
        if (active) *active = static_cast<int>(w);
        if (eigvec) *eigvec = es.eigenvectors().col(0);
      }
    }
    return best;
  };

  // dense sampling of the unit sphere, deterministic
  std::vector<RVector> candidates;
  if (zdim == 1) {
    candidates.push_back(RVector::Constant(1, 1.0));
    candidates.push_back(RVector::Constant(1, -1.0));
  } else if (zdim == 2) {
    const int N = 12000;
    for (int i = 0; i < N; ++i) {
      const double t = 2.0 * std::numbers::pi * i / N;
      RVector c(2);
      c << std::cos(t), std::sin(t);
      candidates.push_back(c);
    }
  } else if (zdim == 3) {
    const int N = 20000;  // Fibonacci sphere
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < N; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / N;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double t = golden * i;
      RVector c(3);
      c << r * std::cos(t), r * std::sin(t), z;
      candidates.push_back(c);
    }
  } else {
    std::mt19937 rng(987654321);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < zdim; ++k) {
      candidates.push_back(RVector::Unit(zdim, k));
      candidates.push_back(-RVector::Unit(zdim, k));
    }
    for (int i = 0; i < 20000; ++i) {
      RVector c(zdim);
      for (int k = 0; k < zdim; ++k) c(k) = gauss(rng);
      const double nrm = c.norm();
      if (nrm > 1e-12) candidates.push_back(c / nrm);
    }
  }

  RVector best = candidates.front();
  double bestf = -std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) {
    const double f = fval(c);
    if (f > bestf + 1e-12 || (std::abs(f - bestf) <= 1e-12 && lex_less(c, best))) {
      bestf = f;
      best = c;
    }
  }

  // subgradient ascent on the sphere from the best sample
  RVector x = best;
  for (int k = 1; k <= 200; ++k) {
    int active = 0;
    RVector v;
    fval(x, &active, &v);
    RVector grad(zdim);
    for (int j = 0; j < zdim; ++j) grad(j) = v.dot(gm[active][j] * v);
    grad -= grad.dot(x) * x;
    if (grad.norm() < 1e-14) break;
    x = (x + (1.0 / k) * grad).normalized();
    const double f = fval(x);
    if (f > bestf) {
      bestf = f;
      best = x;
    }
  }

  // deterministic shrinking-radius polish; the objective is a minimum of
  // eigenvalues and typically has a kink at the argmax, where the plain
  // subgradient steps stall
  if (zdim > 1) {
    std::mt19937 rng(24601);
    std::normal_distribution<double> gauss;
    double radius = 1e-2;
    while (radius > 1e-10) {
      bool improved = false;
      for (int s = 0; s < 12 * zdim; ++s) {
        RVector dir(zdim);
        for (int j = 0; j < zdim; ++j) dir(j) = gauss(rng);
        dir -= dir.dot(best) * best;
        if (dir.norm() < 1e-14) continue;
        const RVector cand = (best + radius * dir.normalized()).normalized();
        const double f = fval(cand);
        if (f > bestf + 1e-15) {
          bestf = f;
          best = cand;
          improved = true;
        }
      }
      if (!improved) radius *= 0.5;
    }
  }

  SearchOutcome out;
  out.achieved = fval(best);
  out.best_coords = best;
  out.feasible = out.achieved > cfg.certificate_margin_tol;
  if (out.feasible) {
    PositivityCertificate cert;
    cert.z_coords = best;
    cert.Z = zk.basis * best;
    cert.margins = margins_of(cert.Z, wms, e.target);
    const RVector thz = e.target->cartan_theta() * cert.Z;
    cert.normalization = -e.target->trace_form(cert.Z, thz);
    out.certificate = std::move(cert);
  }
  return out;
}

double schur_cross_residual(const RVector& Z, const IsotypicComponent& a,
                            const IsotypicComponent& b, const AlgebraPtr& g) {
  const RVector BZ = g->trace_gram() * Z;
  const double znorm = Z.norm();
  if (znorm == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < a.subspace.dim(); ++i)
    for (int j = 0; j < b.subspace.dim(); ++j) {
      const RVector br = g->bracket(a.subspace.basis.col(i), b.subspace.basis.col(j));
      worst = std::max(worst, std::abs(BZ.dot(br)));
    }
  return worst / znorm;
}

Verdict rigidity_verdict(const Embedding& e, const DecompositionReport& rep,
                         const std::optional<PositivityCertificate>& cert,
                         double achieved, const ToleranceConfig& cfg) {
  Verdict v;
  v.gcase = rep.gcase;
  v.achieved = achieved;
  if ((rep.gcase.kind == CaseKind::ihara_so ||
       rep.gcase.kind == CaseKind::ihara_sostar) &&
      rep.gcase.n == 2) {
    v.flags.push_back(
        "n=2 duality: the alternating-square component is equivalent to the "
        "realified standard representation, so it is reported as sym_power(1)");
  }
  if (rep.g1_dims.empty()) {
    v.outcome = VerdictOutcome::rigid_by_vanishing;
    return v;
  }
  if (cert) {
    bool covers = true;
    for (const auto& [m, dim] : rep.g1_dims) {
      auto it = cert->margins.find(m);
      if (it == cert->margins.end() || it->second <= cfg.certificate_margin_tol)
        covers = false;
    }
    if (covers) {
      v.outcome = VerdictOutcome::rigid_by_certificate;
      v.certificate = cert;
      return v;
    }
  }
  v.outcome = VerdictOutcome::inconclusive;
  return v;
}

}  // namespace rigidity

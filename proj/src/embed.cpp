#include "rigidity/embed.hpp"

namespace rigidity {

namespace {

Embedding finish(Embedding e, const ToleranceConfig& cfg) {
  const double res = homomorphism_residual(e);
  if (res > cfg.residual_tol)
    throw ResidualTooHigh("embedding homomorphism residual " + fmt_residual(res));
  if (injectivity_margin(e) <= 1e-8)
    throw ResidualTooHigh("embedding is not injective");
  return e;
}

RVector member_coords(const AlgebraPtr& g, const CMatrix& M,
                      const ToleranceConfig& cfg) {
  double res = 0.0;
  RVector c = g->coordinates(M, &res);
  if (res > cfg.residual_tol)
    throw ResidualTooHigh("image matrix is not in the target algebra (residual " +
                          fmt_residual(res) + ")");
  return c;
}

}  // namespace

RVector Embedding::map(const RVector& source_coords) const {
  RVector out = RVector::Zero(target->dim());
  for (int i = 0; i < source_coords.size(); ++i)
    if (source_coords(i) != 0.0) out += source_coords(i) * images[i];
  return out;
}

RMatrix Embedding::image_matrix() const {
  RMatrix M(target->dim(), static_cast<int>(images.size()));
  for (size_t i = 0; i < images.size(); ++i) M.col(static_cast<int>(i)) = images[i];
  return M;
}

Embedding diagonal_embedding(int n, int q0, int p, int q,
                             const ToleranceConfig& cfg) {
  GroupCase c{CaseKind::diagonal, n, q0, p, q, {}};
  c.validate();
  const int p1 = p - n * q0;
  const int q1 = q - q0;

  // form diag(J1, J2) so that the X (x) I block lands literally up front
  RVector signs(p + q);
  signs.head(n * q0).setOnes();
  signs.segment(n * q0, q0).setConstant(-1.0);
  if (p1 > 0) signs.segment((n + 1) * q0, p1).setOnes();
  if (q1 > 0) signs.tail(q1).setConstant(-1.0);

  Embedding e;
  e.source = su_n1(n, cfg);
  e.target = build_su(SignatureForm{signs}, cfg);
  e.gcase = c;

  const CMatrix Iq0 = CMatrix::Identity(q0, q0);
  const int N = p + q;
  for (const auto& X : e.source->basis()) {
    CMatrix M = CMatrix::Zero(N, N);
    M.topLeftCorner((n + 1) * q0, (n + 1) * q0) = kronecker(X, Iq0);
    e.images.push_back(member_coords(e.target, M, cfg));
  }
  return finish(std::move(e), cfg);
}

Embedding satake_embedding(int n, const ToleranceConfig& cfg) {
  GroupCase c{CaseKind::satake, n, 0, 0, 0, {}};
  c.validate();
  Embedding e;
  e.source = su_n1(n, cfg);
  e.target = build_sp_real(n, cfg);
  e.gcase = c;
  for (const auto& X : e.source->basis())
    e.images.push_back(member_coords(e.target, realify(X).cast<cxd>(), cfg));
  return finish(std::move(e), cfg);
}

Embedding ihara_embedding(int n, IharaTarget target, const ToleranceConfig& cfg) {
  GroupCase c{target == IharaTarget::so_2n2 ? CaseKind::ihara_so
                                            : CaseKind::ihara_sostar,
              n, 0, 0, 0, {}};
  c.validate();
  Embedding e;
  e.source = su_n1(n, cfg);
  e.gcase = c;
  if (target == IharaTarget::so_2n2) {
    e.target = build_so_2n2(n, cfg);
    for (const auto& X : e.source->basis())
      e.images.push_back(member_coords(e.target, realify(X).cast<cxd>(), cfg));
  } else {
    // Fixed part of X -> j1 X j1^{-1} with j1 = [[0, I], [-I, 0]]: matrices
    // [[A, B], [-B, A]] with A = (T - T^t)/2, B = -i(T + T^t)/2; the map
    // T -> [[A, B], [-B, A]] identifies u(n,1) with that commutant.
    e.target = build_so_star(n, cfg);
    const int m = n + 1;
    for (const auto& T : e.source->basis()) {
      const CMatrix A = (T - T.transpose()) / 2.0;
      const CMatrix B = cxd(0, -1) * (T + T.transpose()) / 2.0;
      CMatrix M(2 * m, 2 * m);
      M.topLeftCorner(m, m) = A;
      M.topRightCorner(m, m) = B;
      M.bottomLeftCorner(m, m) = -B;
      M.bottomRightCorner(m, m) = A;
      e.images.push_back(member_coords(e.target, M, cfg));
    }
  }
  return finish(std::move(e), cfg);
}

Embedding build_case_embedding(const GroupCase& c, const ToleranceConfig& cfg) {
  c.validate();
  switch (c.kind) {
    case CaseKind::diagonal:
      return diagonal_embedding(c.n, c.q0, c.p, c.q, cfg);
    case CaseKind::satake:
      return satake_embedding(c.n, cfg);
    case CaseKind::ihara_so:
      return ihara_embedding(c.n, IharaTarget::so_2n2, cfg);
    case CaseKind::ihara_sostar:
      return ihara_embedding(c.n, IharaTarget::so_star, cfg);
  }
  throw BadParameters("unknown case kind");
}

double homomorphism_residual(const Embedding& e) {
  const int d = e.source->dim();
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const RVector lhs = e.map(e.source->ad_basis(i).col(j));
      const RVector rhs = e.target->bracket(e.images[i], e.images[j]);
      worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
    }
  return worst;
}

double injectivity_margin(const Embedding& e) {
  Eigen::JacobiSVD<RMatrix> svd(e.image_matrix());
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

}  // namespace rigidity

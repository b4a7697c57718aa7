#include "rigidity/liealg.hpp"

#include <algorithm>
#include <cmath>

namespace rigidity {

std::shared_ptr<const LieAlgebra> LieAlgebra::make(
    std::string name, std::vector<CMatrix> basis, Realization realization,
    const ToleranceConfig& cfg,
    std::optional<std::function<CMatrix(const CMatrix&)>> cartan) {
  cfg.validate();
  if (basis.empty()) throw BadParameters("empty basis");
  auto g = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  g->name_ = std::move(name);
  g->matrix_size_ = static_cast<int>(basis[0].rows());
  g->basis_ = std::move(basis);
  g->realization_ = std::move(realization);
  g->cfg_ = cfg;

  const int d = g->dim();
  const int N = g->matrix_size_;
  g->real_matrices_ = true;
  for (const auto& M : g->basis_) {
    if (M.rows() != N || M.cols() != N)
      throw BadParameters("basis matrices have mixed sizes");
    if (!M.allFinite()) throw BadParameters("basis matrix has non-finite entries");
    if (M.imag().norm() > 1e-14 * std::max(1.0, M.norm()))
      g->real_matrices_ = false;
  }

  g->basis_flat_.resize(2 * N * N, d);
  for (int i = 0; i < d; ++i) g->basis_flat_.col(i) = flatten(g->basis_[i]);
  {
    Eigen::JacobiSVD<RMatrix> svd(g->basis_flat_);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= cfg.residual_tol * sv(0))
      throw BadParameters("basis is not real-linearly independent");
  }
  g->basis_qr_.compute(g->basis_flat_);

  // trace form, checked real-valued on basis pairs
  g->trace_gram_.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const cxd t = (g->basis_[i] * g->basis_[j]).trace();
      if (std::abs(t.imag()) > 1e-12 * std::abs(t) + 1e-12)
        throw BadParameters("trace form is not real-valued on the basis");
      g->trace_gram_(i, j) = g->trace_gram_(j, i) = t.real();
    }

  // bracket closure and the ad tensor, solved in one batched pass
  g->ad_basis_.assign(d, RMatrix(d, d));
  {
    RMatrix rhs(2 * N * N, static_cast<long>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        rhs.col(static_cast<long>(i) * d + j) =
            flatten(g->basis_[i] * g->basis_[j] - g->basis_[j] * g->basis_[i]);
    const RMatrix coef = g->basis_qr_.solve(rhs);
    const RMatrix resid = g->basis_flat_ * coef - rhs;
    double worst_closure = 0.0;
    for (long c = 0; c < rhs.cols(); ++c) {
      const double scale = std::max(1.0, rhs.col(c).norm());
      worst_closure = std::max(worst_closure, resid.col(c).norm() / scale);
    }
    if (worst_closure > cfg.residual_tol)
      throw ClosureViolation(g->name_ +
                             ": basis is not closed under the bracket (residual " +
                             fmt_residual(worst_closure) + ")");
    for (int i = 0; i < d; ++i)
      g->ad_basis_[i] = coef.middleCols(static_cast<long>(i) * d, d);
  }

  if (cartan) {
    RMatrix theta(d, d);
    for (int i = 0; i < d; ++i) {
      double res = 0.0;
      theta.col(i) = g->coordinates((*cartan)(g->basis_[i]), &res);
      if (res > cfg.residual_tol)
        throw MissingInvolution("cartan candidate does not preserve the algebra");
    }
    // involutive automorphism
    if ((theta * theta - RMatrix::Identity(d, d)).norm() > cfg.residual_tol * d)
      throw MissingInvolution("cartan candidate is not involutive");
    double auto_res = 0.0;
    for (int i = 0; i < d; ++i) {
      const RMatrix ad_theta_i = g->ad(theta.col(i));
      for (int j = 0; j < d; ++j) {
        RVector lhs = theta * g->ad_basis_[i].col(j);  // theta([Xi, Xj])
        RVector rhs = ad_theta_i * theta.col(j);       // [theta Xi, theta Xj]
        auto_res = std::max(auto_res, (lhs - rhs).norm());
      }
    }
    if (auto_res > cfg.residual_tol * 100)
      throw MissingInvolution("cartan candidate is not an automorphism");
    RMatrix G = -g->trace_gram_ * theta;
    G = ((G + G.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(G);
    if (es.eigenvalues()(0) <= 0)
      throw MissingInvolution("-B(x, theta y) is not positive definite");
    g->theta_ = theta;
    g->compact_inner_ = G;
  }
  return g;
}

RVector LieAlgebra::coordinates(const CMatrix& M, double* residual) const {
  const RVector rhs = flatten(M);
  RVector c = basis_qr_.solve(rhs);
  if (residual) {
    *residual = (basis_flat_ * c - rhs).norm() / std::max(1.0, rhs.norm());
  }
  return c;
}

CMatrix LieAlgebra::matrix_of(const RVector& coords) const {
  if (coords.size() != dim()) throw BadParameters("coordinate vector has wrong length");
  return unflatten(basis_flat_ * coords, matrix_size_, matrix_size_);
}

RVector LieAlgebra::bracket(const RVector& x, const RVector& y) const {
  RVector out = RVector::Zero(dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) out += x(i) * (ad_basis_[i] * y);
  return out;
}

double LieAlgebra::trace_form(const RVector& x, const RVector& y) const {
  return x.dot(trace_gram_ * y);
}

RMatrix LieAlgebra::ad(const RVector& x) const {
  RMatrix A = RMatrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x(i) != 0.0) A += x(i) * ad_basis_[i];
  return A;
}

const RMatrix& LieAlgebra::cartan_theta() const {
  if (!theta_) throw MissingInvolution(name_ + " was built without a Cartan involution");
  return *theta_;
}

const RMatrix& LieAlgebra::compact_inner() const {
  if (!theta_) throw MissingInvolution(name_ + " was built without a Cartan involution");
  return compact_inner_;
}

RealSubspace LieAlgebra::cartan_fixed_part() const {
  const RMatrix& th = cartan_theta();
  std::vector<RMatrix> ops{th - RMatrix::Identity(dim(), dim())};
  RealSubspace fixed = joint_kernel(ops, dim(), cfg_);
  return orthonormalize(fixed, compact_inner_, cfg_);
}

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y) {
  if (X.algebra != Y.algebra)
    throw BadParameters("bracket: elements of different algebras");
  return AlgebraElement{X.algebra, X.algebra->bracket(X.coords, Y.coords)};
}

double trace_form(const AlgebraElement& X, const AlgebraElement& Y) {
  if (X.algebra != Y.algebra)
    throw BadParameters("trace_form: elements of different algebras");
  return X.algebra->trace_form(X.coords, Y.coords);
}

double jacobi_residual(const LieAlgebra& g) {
  // Jacobi identity in operator form, ad([Xi,Xj]) = [ad Xi, ad Xj]; this
  // covers all triples (i, j, k) at once, column by column.
  const int d = g.dim();
  double worst = 0.0;
  double cscale = 0.0;
  for (int i = 0; i < d; ++i) cscale = std::max(cscale, g.ad_basis(i).norm());
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const RVector bij = g.ad_basis(i).col(j);
      RMatrix ad_bij = RMatrix::Zero(d, d);
      for (int l = 0; l < d; ++l)
        if (bij(l) != 0.0) ad_bij += bij(l) * g.ad_basis(l);
      const RMatrix comm =
          g.ad_basis(i) * g.ad_basis(j) - g.ad_basis(j) * g.ad_basis(i);
      worst = std::max(worst, (ad_bij - comm).norm());
    }
  }
  return worst / std::max(1.0, cscale * cscale);
}

double closure_residual(const LieAlgebra& g) {
  const int d = g.dim();
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const CMatrix br = g.basis()[i] * g.basis()[j] - g.basis()[j] * g.basis()[i];
      double res = 0.0;
      g.coordinates(br, &res);
      worst = std::max(worst, res);
    }
  return worst;
}

}  // namespace rigidity

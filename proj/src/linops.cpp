#include "rigidity/linops.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

namespace rigidity {

void ToleranceConfig::validate() const {
  if (residual_tol <= 0 || eigen_gap_tol <= 0 || certificate_margin_tol <= 0)
    throw BadParameters("tolerances must be strictly positive");
  if (residual_tol >= eigen_gap_tol)
    throw BadParameters("residual_tol must be smaller than eigen_gap_tol");
}

ToleranceConfig ToleranceConfig::from_env() {
  ToleranceConfig cfg;
  if (const char* s = std::getenv("RIGIDITY_TOL")) {
    cfg.residual_tol = std::stod(s);
  }
  return cfg;
}

RealSubspace RealSubspace::full(int n) {
  return RealSubspace{n, RMatrix::Identity(n, n)};
}

RealSubspace RealSubspace::zero(int n) {
  return RealSubspace{n, RMatrix::Zero(n, 0)};
}

HermitianEigen hermitian_eigen(const CMatrix& M, const ToleranceConfig& cfg) {
  if (M.rows() != M.cols()) throw NonHermitianInput("matrix not square");
  const double scale = M.norm();
  if ((M - M.adjoint()).norm() > cfg.residual_tol * std::max(scale, 1e-300))
    throw NonHermitianInput("matrix not Hermitian within residual_tol");
  Eigen::SelfAdjointEigenSolver<CMatrix> es((M + M.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw Error("hermitian eigensolver failed to converge");
  return HermitianEigen{es.eigenvalues(), es.eigenvectors()};
}

RealSubspace joint_kernel(const std::vector<RMatrix>& maps, int ambient_dim,
                          const ToleranceConfig& cfg) {
  std::vector<const RMatrix*> used;
  long rows = 0;
  for (const auto& A : maps) {
    if (A.cols() != ambient_dim)
      throw BadParameters("joint_kernel: operator acts on wrong dimension");
    // an operator that is negligible at tolerance constrains nothing;
    // normalizing it would amplify roundoff into fake constraints
    if (A.norm() > cfg.residual_tol) {
      used.push_back(&A);
      rows += A.rows();
    }
  }
  if (used.empty()) return RealSubspace::full(ambient_dim);

  RMatrix stacked(rows, ambient_dim);
  long r = 0;
  for (const auto* A : used) {
    stacked.middleRows(r, A->rows()) = *A / A->norm();
    r += A->rows();
  }
  Eigen::JacobiSVD<RMatrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = cfg.residual_tol * std::max(smax, 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  RealSubspace out;
  out.ambient_dim = ambient_dim;
  out.basis = svd.matrixV().rightCols(ambient_dim - rank);
  return out;
}

RealSubspace orthonormalize(const RealSubspace& S, const RMatrix& inner,
                            const ToleranceConfig& cfg) {
  if (inner.rows() != S.ambient_dim || inner.cols() != S.ambient_dim)
    throw BadParameters("orthonormalize: inner product has wrong size");
  if (S.dim() == 0) return S;
  RMatrix gram = S.basis.transpose() * inner * S.basis;
  gram = (gram + gram.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RMatrix> es(gram);
  if (es.eigenvalues()(0) <= cfg.residual_tol * std::max(es.eigenvalues().maxCoeff(), 1.0))
    throw DegenerateForm("inner product is not positive definite on the subspace");
  Eigen::LLT<RMatrix> llt(gram);
  RMatrix L = llt.matrixL();
  RealSubspace out;
  out.ambient_dim = S.ambient_dim;
  out.basis = L.triangularView<Eigen::Lower>()
                  .transpose()
                  .solve<Eigen::OnTheRight>(S.basis);
  return out;
}

RealSubspace intersect(const RealSubspace& A, const RealSubspace& B,
                       const ToleranceConfig& cfg) {
  if (A.ambient_dim != B.ambient_dim)
    throw BadParameters("intersect: ambient dimensions differ");
  const int n = A.ambient_dim;
  std::vector<RMatrix> ops;
  ops.push_back(RMatrix::Identity(n, n) - A.basis * A.basis.transpose());
  ops.push_back(RMatrix::Identity(n, n) - B.basis * B.basis.transpose());
  return joint_kernel(ops, n, cfg);
}

RealSubspace column_span(const RMatrix& M, const ToleranceConfig& cfg) {
  RealSubspace out;
  out.ambient_dim = static_cast<int>(M.rows());
  if (M.cols() == 0 || M.norm() == 0) {
    out.basis = RMatrix::Zero(M.rows(), 0);
    return out;
  }
  Eigen::JacobiSVD<RMatrix> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cfg.residual_tol * sv(0)) ++rank;
  out.basis = svd.matrixU().leftCols(rank);
  return out;
}

std::vector<std::pair<int, int>> cluster_eigenvalues(const RVector& sorted,
                                                     double gap) {
  std::vector<std::pair<int, int>> ranges;
  int begin = 0;
  for (int i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted(i) - sorted(i - 1) > gap) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  return ranges;
}

RMatrix real_structure(int k) {
  RMatrix J = RMatrix::Zero(2 * k, 2 * k);
  for (int a = 0; a < k; ++a) {
    J(2 * a, 2 * a + 1) = -1.0;
    J(2 * a + 1, 2 * a) = 1.0;
  }
  return J;
}

RMatrix realify(const CMatrix& T) {
  const int r = static_cast<int>(T.rows()), c = static_cast<int>(T.cols());
  RMatrix M(2 * r, 2 * c);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < c; ++b) {
      const double re = T(a, b).real(), im = T(a, b).imag();
      M(2 * a, 2 * b) = re;
      M(2 * a, 2 * b + 1) = -im;
      M(2 * a + 1, 2 * b) = im;
      M(2 * a + 1, 2 * b + 1) = re;
    }
  return M;
}

RMatrix realify_conjugate(const CMatrix& C) {
  const int r = static_cast<int>(C.rows()), c = static_cast<int>(C.cols());
  RMatrix M(2 * r, 2 * c);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < c; ++b) {
      const double re = C(a, b).real(), im = C(a, b).imag();
      M(2 * a, 2 * b) = re;
      M(2 * a, 2 * b + 1) = im;
      M(2 * a + 1, 2 * b) = im;
      M(2 * a + 1, 2 * b + 1) = -re;
    }
  return M;
}

CMatrix complex_linear_part(const RMatrix& M) {
  const int k = static_cast<int>(M.rows()) / 2;
  RMatrix i_r = real_structure(k);
  RMatrix lin = (M - i_r * M * i_r) / 2.0;
  CMatrix T(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      T(a, b) = cxd(lin(2 * a, 2 * b), lin(2 * a + 1, 2 * b));
  return T;
}

CMatrix conjugate_linear_part(const RMatrix& M) {
  const int k = static_cast<int>(M.rows()) / 2;
  RMatrix i_r = real_structure(k);
  RMatrix con = (M + i_r * M * i_r) / 2.0;
  CMatrix C(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      C(a, b) = cxd(con(2 * a, 2 * b), con(2 * a + 1, 2 * b));
  return C;
}

RMatrix kronecker(const RMatrix& A, const RMatrix& B) {
  RMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

CMatrix kronecker(const CMatrix& A, const CMatrix& B) {
  CMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

std::string fmt_residual(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

RVector flatten(const CMatrix& M) {
  const long n = M.size();
  RVector v(2 * n);
  Eigen::Map<const CVector> m(M.data(), n);
  v.head(n) = m.real();
  v.tail(n) = m.imag();
  return v;
}

CMatrix unflatten(const RVector& v, int rows, int cols) {
  CMatrix M(rows, cols);
  const long n = static_cast<long>(rows) * cols;
  Eigen::Map<CVector> m(M.data(), n);
  m.real() = v.head(n);
  m.imag() = v.tail(n);
  return M;
}

}  // namespace rigidity

#ifndef RIGIDITY_LINOPS_HPP
#define RIGIDITY_LINOPS_HPP

// Dense matrix and subspace primitives shared by the whole library:
// complex Hermitian spectra, joint kernels via singular-value thresholding,
// orthonormalization against a supplied inner product, realification maps.
// All numerics are double precision; rank decisions are always relative to
// the largest singular value.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rigidity/errors.hpp"

namespace rigidity {

using cxd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct ToleranceConfig {
  double residual_tol = 1e-9;
  double eigen_gap_tol = 1e-6;
  double certificate_margin_tol = 1e-8;

  void validate() const;
  /// Defaults, with RIGIDITY_TOL (if set) overriding residual_tol.
  static ToleranceConfig from_env();
};

/// A subspace of R^n stored as orthonormal basis columns.
struct RealSubspace {
  int ambient_dim = 0;
  RMatrix basis;  // ambient_dim x dim, orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }
  static RealSubspace full(int n);
  static RealSubspace zero(int n);
};

struct HermitianEigen {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // orthonormal columns
};

/// Spectral decomposition of a Hermitian matrix; throws NonHermitianInput
/// when ||M - M^dagger|| > residual_tol * ||M||.
HermitianEigen hermitian_eigen(const CMatrix& M, const ToleranceConfig& cfg);

/// Common kernel of a family of operators on R^ambient_dim, computed by
/// singular-value thresholding of the stacked (norm-scaled) operators.
/// An empty family yields the full space.
RealSubspace joint_kernel(const std::vector<RMatrix>& maps, int ambient_dim,
                          const ToleranceConfig& cfg);

/// Basis of S made orthonormal for the inner product with Gram matrix
/// `inner` (positive definite); throws DegenerateForm otherwise.
RealSubspace orthonormalize(const RealSubspace& S, const RMatrix& inner,
                            const ToleranceConfig& cfg);

/// Intersection of two subspaces of the same ambient space.
RealSubspace intersect(const RealSubspace& A, const RealSubspace& B,
                       const ToleranceConfig& cfg);

/// Column span of M as an orthonormal basis (rank cut at
/// residual_tol * sigma_max).
RealSubspace column_span(const RMatrix& M, const ToleranceConfig& cfg);

/// [first,last) index ranges of eigenvalues closer than `gap` to each other;
/// input must be sorted ascending.
std::vector<std::pair<int, int>> cluster_eigenvalues(const RVector& sorted,
                                                     double gap);

// --- realification helpers (interleaved convention) -----------------------
//
// C^k is identified with R^{2k} by z_j = x_j + i y_j -> (x_1,y_1,...,x_k,y_k),
// so the matrix of multiplication by i is block-diagonal [[0,-1],[1,0]].

/// Matrix of multiplication by i on R^{2k}.
RMatrix real_structure(int k);

/// Real matrix of the complex-linear map z -> T z.
RMatrix realify(const CMatrix& T);

/// Real matrix of the conjugate-linear map z -> C * conj(z).
RMatrix realify_conjugate(const CMatrix& C);

/// Complex-linear coefficient of a real matrix of even size:
/// T with realify(T) = (M - i_R M i_R)/2.
CMatrix complex_linear_part(const RMatrix& M);

/// Conjugate-linear coefficient: C with realify_conjugate(C) = (M + i_R M i_R)/2.
CMatrix conjugate_linear_part(const RMatrix& M);

RMatrix kronecker(const RMatrix& A, const RMatrix& B);
CMatrix kronecker(const CMatrix& A, const CMatrix& B);

/// Short scientific-notation rendering for residuals in messages.
std::string fmt_residual(double v);

/// Frobenius flattening of a complex matrix to a real vector (Re then Im).
RVector flatten(const CMatrix& M);
CMatrix unflatten(const RVector& v, int rows, int cols);

}  // namespace rigidity

#endif

#include <random>

#include "doctest.h"
#include "rigidity/linops.hpp"

using namespace rigidity;

namespace {
const ToleranceConfig cfg;
}

TEST_CASE("hermitian_eigen on diagonal and zero matrices") {
  CMatrix M = CMatrix::Zero(2, 2);
  M(0, 0) = 1;
  M(1, 1) = 2;
  auto [vals, vecs] = hermitian_eigen(M, cfg);
  CHECK(vals(0) == doctest::Approx(1.0));
  CHECK(vals(1) == doctest::Approx(2.0));
  CHECK(std::abs(vecs(0, 0)) == doctest::Approx(1.0));

  auto z = hermitian_eigen(CMatrix::Zero(3, 3), cfg);
  CHECK(z.eigenvalues.norm() == doctest::Approx(0.0));
  CHECK((z.eigenvectors.adjoint() * z.eigenvectors - CMatrix::Identity(3, 3)).norm() <
        1e-12);
}

TEST_CASE("hermitian_eigen off-diagonal case against the characteristic polynomial") {
  // oracle: roots of det([[0,1],[1,0]] - t I) = t^2 - 1 are -1, 1 with
  // eigenvectors (1, -1)/sqrt(2) and (1, 1)/sqrt(2)
  CMatrix M(2, 2);
  M << 0, 1, 1, 0;
  auto [vals, vecs] = hermitian_eigen(M, cfg);
  CHECK(vals(0) == doctest::Approx(-1.0));
  CHECK(vals(1) == doctest::Approx(1.0));
  CVector minus(2), plus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(minus.dot(vecs.col(0))) == doctest::Approx(1.0));
  CHECK(std::abs(plus.dot(vecs.col(1))) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen rejects a non-Hermitian matrix") {
  CMatrix M(2, 2);
  M << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigen(M, cfg), NonHermitianInput);
}

TEST_CASE("hermitian_eigen reconstruction residual on random matrices") {
  std::mt19937 rng(11);
  std::normal_distribution<double> gauss;
  for (int dim : {4, 32, 128}) {
    CMatrix A(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) A(i, j) = cxd(gauss(rng), gauss(rng));
    CMatrix M = (A + A.adjoint()) / 2.0;
    auto [vals, vecs] = hermitian_eigen(M, cfg);
    const CMatrix rec = vecs * vals.asDiagonal() * vecs.adjoint();
    CHECK((M - rec).norm() <= 10 * cfg.residual_tol * M.norm());
  }
}

TEST_CASE("joint_kernel basic contracts") {
  // a single identity map has trivial kernel
  std::vector<RMatrix> ops{RMatrix::Identity(4, 4)};
  CHECK(joint_kernel(ops, 4, cfg).dim() == 0);
  // no constraints leave the full space
  CHECK(joint_kernel({}, 4, cfg).dim() == 4);
}

TEST_CASE("joint_kernel finds the trivial center of sl(2,C) realified") {
  // oracle: the center of sl(2) is zero, so ad(E12) and ad(E21) have no
  // common kernel.  Realify the 3-dimensional complex algebra by hand.
  CMatrix e(2, 2), f(2, 2), h(2, 2);
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  h << 1, 0, 0, -1;
  std::vector<CMatrix> basis{e, f, h, cxd(0, 1) * e, cxd(0, 1) * f, cxd(0, 1) * h};
  auto coords = [&](const CMatrix& M) {
    RVector v(6);
    v << M(0, 1).real(), M(1, 0).real(), M(0, 0).real(), M(0, 1).imag(),
        M(1, 0).imag(), M(0, 0).imag();
    return v;
  };
  auto ad_of = [&](const CMatrix& X) {
    RMatrix A(6, 6);
    for (int j = 0; j < 6; ++j) A.col(j) = coords(X * basis[j] - basis[j] * X);
    return A;
  };
  std::vector<RMatrix> ops{ad_of(e), ad_of(f)};
  CHECK(joint_kernel(ops, 6, cfg).dim() == 0);
}

TEST_CASE("joint_kernel idempotence") {
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  RMatrix A(3, 7);
  for (int i = 0; i < A.size(); ++i) A(i / 7, i % 7) = gauss(rng);
  RealSubspace k1 = joint_kernel({A}, 7, cfg);
  // restrict A to the kernel: recomputing returns the same span
  RMatrix Ak = A * k1.basis;
  RealSubspace k2 = joint_kernel({Ak}, k1.dim(), cfg);
  CHECK(k2.dim() == k1.dim());
}

TEST_CASE("orthonormalize against a weighted inner product") {
  // {(1,1)} with form diag(1,4) normalizes to (1,1)/sqrt(5)
  RealSubspace s;
  s.ambient_dim = 2;
  s.basis = RMatrix(2, 1);
  s.basis << 1, 1;
  RMatrix inner = RVector::Constant(2, 1.0).asDiagonal();
  inner(1, 1) = 4.0;
  RealSubspace out = orthonormalize(s, inner, cfg);
  CHECK(out.basis(0, 0) == doctest::Approx(1.0 / std::sqrt(5.0)));
  CHECK(out.basis(1, 0) == doctest::Approx(1.0 / std::sqrt(5.0)));

  // Gram-Schmidt case {(1,0),(1,1)} with the dot product
  RealSubspace t;
  t.ambient_dim = 2;
  t.basis = RMatrix(2, 2);
  t.basis << 1, 1, 0, 1;
  RealSubspace u = orthonormalize(t, RMatrix::Identity(2, 2), cfg);
  CHECK((u.basis.transpose() * u.basis - RMatrix::Identity(2, 2)).norm() <
        cfg.residual_tol);
  CHECK(std::abs(u.basis(0, 0)) == doctest::Approx(1.0));

  // degenerate form fails
  RMatrix bad = RMatrix::Zero(2, 2);
  CHECK_THROWS_AS(orthonormalize(t, bad, cfg), DegenerateForm);
}

TEST_CASE("orthonormalize output Gram is the identity") {
  std::mt19937 rng(17);
  std::normal_distribution<double> gauss;
  RMatrix B(6, 3);
  for (int i = 0; i < B.size(); ++i) B(i / 3, i % 3) = gauss(rng);
  RMatrix W(6, 6);
  for (int i = 0; i < W.size(); ++i) W(i / 6, i % 6) = gauss(rng);
  RMatrix inner = W * W.transpose() + RMatrix::Identity(6, 6);
  RealSubspace s{6, B};
  RealSubspace o = orthonormalize(s, inner, cfg);
  CHECK((o.basis.transpose() * inner * o.basis - RMatrix::Identity(3, 3)).norm() <
        cfg.residual_tol);
}

TEST_CASE("realification helpers invert each other") {
  std::mt19937 rng(23);
  std::normal_distribution<double> gauss;
  CMatrix T(3, 3), C(3, 3);
  for (int i = 0; i < 9; ++i) {
    T(i / 3, i % 3) = cxd(gauss(rng), gauss(rng));
    C(i / 3, i % 3) = cxd(gauss(rng), gauss(rng));
  }
  const RMatrix M = realify(T) + realify_conjugate(C);
  CHECK((complex_linear_part(M) - T).norm() < 1e-14);
  CHECK((conjugate_linear_part(M) - C).norm() < 1e-14);
  // multiplication by i commutes with complex-linear maps
  const RMatrix i_r = real_structure(3);
  CHECK((i_r * realify(T) - realify(T) * i_r).norm() < 1e-14);
  CHECK((i_r * realify_conjugate(C) + realify_conjugate(C) * i_r).norm() < 1e-14);
}

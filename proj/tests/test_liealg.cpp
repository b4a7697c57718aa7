#include <random>

#include "doctest.h"
#include "rigidity/embed.hpp"
#include "rigidity/groups.hpp"

using namespace rigidity;

namespace {
const ToleranceConfig cfg;
}

TEST_CASE("bracket in sl(2) coordinates") {
  // [E12, E21] = E11 - E22 checked through a hand-built algebra
  CMatrix e(2, 2), f(2, 2), h(2, 2);
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  h << 1, 0, 0, -1;
  auto g = LieAlgebra::make("sl2", {e, f, h}, Realization{}, cfg);
  const RVector ce = g->coordinates(e);
  const RVector cf = g->coordinates(f);
  const CMatrix br = g->matrix_of(g->bracket(ce, cf));
  CHECK((br - h).norm() < 1e-12);
  // antisymmetry: [X, X] = 0
  CHECK(g->bracket(ce, ce).norm() < 1e-12);
  // B(E12 - E21, E11 - E22) = 0
  const RVector x = g->coordinates(e - f);
  const RVector y = g->coordinates(h);
  CHECK(std::abs(g->trace_form(x, y)) < 1e-12);
}

TEST_CASE("trace form of T0 is -n/(n+1)") {
  // tr T0^2 = -(n + n^2)/(n+1)^2 = -n/(n+1); for n = 2 this is -2/3
  auto l = su_n1(2, cfg);
  AlgebraElement t0 = central_element_T0(l);
  CHECK(trace_form(t0, t0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
  const CMatrix M = t0.matrix();
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(0, 0) = expected(1, 1) = cxd(0, 1.0 / 3.0);
  expected(2, 2) = cxd(0, -2.0 / 3.0);
  CHECK((M - expected).norm() < 1e-12);

  auto l3 = su_n1(3, cfg);
  AlgebraElement t03 = central_element_T0(l3);
  CHECK(trace_form(t03, t03) == doctest::Approx(-3.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("trace form of Z0 in the sp(3,R) realization is -6") {
  // Z0 is multiplication by i on R^6; the real trace of Z0^2 = -Id_6 is -6
  auto sp = build_sp_real(2, cfg);
  double res = 0.0;
  const RVector z0 = sp->coordinates(real_structure(3).cast<cxd>(), &res);
  CHECK(res < 1e-12);
  CHECK(sp->trace_form(z0, z0) == doctest::Approx(-6.0).epsilon(1e-12));
}

TEST_CASE("conjugate-linear bracket [X^c, iX^c] = -2i X conj(X) in sp") {
  // X = E11 supported on the compact block of V; the bracket of the
  // conjugate-linear elements X^c and (iX)^c is the complex-linear map with
  // matrix -2i X conj(X), an element of the embedded u(n,1)
  auto sp = build_sp_real(2, cfg);
  CMatrix X = CMatrix::Zero(3, 3);
  X(0, 0) = 1;
  double res = 0.0;
  const RVector xc = sp->coordinates(realify_conjugate(X).cast<cxd>(), &res);
  CHECK(res < 1e-12);
  const RVector ixc = sp->coordinates(realify_conjugate(cxd(0, 1) * X).cast<cxd>(), &res);
  CHECK(res < 1e-12);
  const RVector br = sp->bracket(xc, ixc);
  const CMatrix expected = realify(cxd(0, -2) * X * X.conjugate()).cast<cxd>();
  CHECK((sp->matrix_of(br) - expected).norm() < 1e-12);
}

TEST_CASE("jacobi residual is tiny for exact constructions") {
  CHECK(jacobi_residual(*su_n1(2, cfg)) < 1e-12);
  CHECK(jacobi_residual(*build_so_star(2, cfg)) < 1e-12);
}

TEST_CASE("a perturbed basis is detected") {
  // Perturbing one basis matrix by 1e-3 leaves a span that is no longer a
  // Lie algebra.  The closure residual carries the linear-order signal; the
  // Jacobi defect of the projected structure constants is quadratic in the
  // perturbation (the span is still 1e-3 close to a true algebra), so it
  // sits orders of magnitude above the exact-construction gate but below
  // the closure signal.  Build with loose tolerances so construction
  // succeeds at all.
  ToleranceConfig loose;
  loose.residual_tol = 1e-2;
  loose.eigen_gap_tol = 1e-1;
  auto l = su_n1(2, loose);
  std::vector<CMatrix> basis = l->basis();
  CMatrix bump = CMatrix::Zero(3, 3);
  // i E00 leaves the trace form real but is not in su(2,1)
  bump(0, 0) = cxd(0, 1e-3);
  basis[0] += bump;
  auto perturbed = LieAlgebra::make("perturbed", basis, Realization{}, loose);
  CHECK(closure_residual(*perturbed) > 1e-4);
  CHECK(jacobi_residual(*perturbed) > 1e-8);
  CHECK(jacobi_residual(*l) < 1e-12);
}

TEST_CASE("closure violation is detected at standard tolerances") {
  std::vector<CMatrix> basis = su_n1(2, cfg)->basis();
  basis.pop_back();  // removing one element breaks bracket closure
  CHECK_THROWS_AS(LieAlgebra::make("broken", basis, Realization{}, cfg),
                  ClosureViolation);
}

TEST_CASE("cartan fixed parts have the expected dimensions") {
  // s(u(2)+u(1)) inside su(2,1): 4; s(u(3)+u(2)) inside su(3,2): 12;
  // so(4)+so(2) inside so(4,2): 7
  CHECK(su_n1(2, cfg)->cartan_fixed_part().dim() == 4);
  CHECK(build_su(3, 2, cfg)->cartan_fixed_part().dim() == 12);
  CHECK(build_so_2n2(2, cfg)->cartan_fixed_part().dim() == 7);
}

TEST_CASE("cartan fixed part is bracket-closed and -B positive definite") {
  for (const AlgebraPtr& g :
       {su_n1(2, cfg), build_sp_real(2, cfg), build_so_star(2, cfg)}) {
    RealSubspace k = g->cartan_fixed_part();
    for (int i = 0; i < k.dim(); ++i) {
      const RVector xi = k.basis.col(i);
      CHECK(-g->trace_form(xi, xi) > 0.0);
      for (int j = 0; j < k.dim(); ++j) {
        const RVector br = g->bracket(xi, k.basis.col(j));
        // the bracket stays inside the fixed part
        const RVector proj = k.basis * (k.basis.transpose() *
                                        (g->compact_inner() * br));
        CHECK((br - proj).norm() < 1e-9);
      }
    }
  }
}

TEST_CASE("trace form ad-invariance on random triples") {
  auto g = build_su(3, 2, cfg);
  std::mt19937 rng(99);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 100; ++trial) {
    RVector x(g->dim()), y(g->dim()), z(g->dim());
    for (int i = 0; i < g->dim(); ++i) {
      x(i) = gauss(rng);
      y(i) = gauss(rng);
      z(i) = gauss(rng);
    }
    const double lhs =
        g->trace_form(g->bracket(z, x), y) + g->trace_form(x, g->bracket(z, y));
    const double scale = g->matrix_of(x).norm() * g->matrix_of(y).norm() *
                         g->matrix_of(z).norm();
    CHECK(std::abs(lhs) <= 1e-9 * scale);
  }
}

TEST_CASE("missing involution is reported") {
  CMatrix e(2, 2), f(2, 2), h(2, 2);
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  h << 1, 0, 0, -1;
  auto g = LieAlgebra::make("sl2r", {e, f, h}, Realization{}, cfg);
  CHECK_THROWS_AS(g->cartan_fixed_part(), MissingInvolution);
}

#include "doctest.h"
#include "rigidity/groups.hpp"

using namespace rigidity;

namespace {
const ToleranceConfig cfg;
}

TEST_CASE("su constructor dimensions") {
  CHECK(su_n1(2, cfg)->dim() == 8);
  CHECK(build_su(2, 1, cfg)->dim() == 8);
  CHECK(build_su(1, 1, cfg)->dim() == 3);
  // block convention diag(J1, J2) with J1 = diag(1,1,-1), J2 = diag(1,-1)
  RVector s(5);
  s << 1, 1, -1, 1, -1;
  auto g = build_su(SignatureForm{s}, cfg);
  CHECK(g->dim() == 24);
  CHECK(g->name() == "su(3,2)");
}

TEST_CASE("sp constructor dimension and membership of Z0") {
  auto sp2 = build_sp_real(2, cfg);
  CHECK(sp2->dim() == 21);  // (n+1)(2n+3) = 3*7
  CHECK(build_sp_real(1, cfg)->dim() == 10);

  // Z0 = multiplication by i lies in the algebra and commutes with the
  // realified u(n,1)
  double res = 0.0;
  const RVector z0 = sp2->coordinates(real_structure(3).cast<cxd>(), &res);
  CHECK(res < 1e-12);
  auto l = su_n1(2, cfg);
  for (const auto& X : l->basis()) {
    const RVector img = sp2->coordinates(realify(X).cast<cxd>(), &res);
    CHECK(res < 1e-12);
    CHECK(sp2->bracket(z0, img).norm() < 1e-12);
  }
}

TEST_CASE("so* constructor dimension and the matrix j") {
  auto g2 = build_so_star(2, cfg);
  CHECK(g2->dim() == 15);  // (n+1)(2n+1) = 3*5
  CHECK(build_so_star(3, cfg)->dim() == 28);
  const CMatrix j = g2->realization().form;
  CHECK((j.transpose() + j).norm() < 1e-15);
  CHECK((j.adjoint() * j - CMatrix::Identity(6, 6)).norm() < 1e-15);
}

TEST_CASE("so(2n,2) constructor dimension and u(n,1) inclusion") {
  auto g2 = build_so_2n2(2, cfg);
  CHECK(g2->dim() == 15);
  CHECK(build_so_2n2(3, cfg)->dim() == 28);
  // the realification of u(n,1) is contained in it
  auto l = su_n1(2, cfg);
  double res = 0.0;
  for (const auto& X : l->basis()) {
    g2->coordinates(realify(X).cast<cxd>(), &res);
    CHECK(res < 1e-12);
  }
  g2->coordinates(real_structure(3).cast<cxd>(), &res);  // the center of u(2,1)
  CHECK(res < 1e-12);
}

TEST_CASE("two real forms of so(2n+2,C) have equal dimension") {
  for (int n = 1; n <= 4; ++n)
    CHECK(build_so_star(n, cfg)->dim() == build_so_2n2(n, cfg)->dim());
}

TEST_CASE("T0 is central in u(n) and rotates the noncompact part") {
  const int n = 2;
  auto l = su_n1(n, cfg);
  AlgebraElement t0 = central_element_T0(l);
  // [T0, compact part] = 0
  for (int idx : compact_indices_su_n1(n))
    CHECK(l->bracket(t0.coords, RVector::Unit(l->dim(), idx)).norm() < 1e-12);
  // [T0, P_k] = Q_k and [T0, Q_k] = -P_k: ad(T0) acts as multiplication by i
  // on the tangent space, the +i eigenvalue on the holomorphic side
  const int off = compact_count_su_n1(n);
  for (int k = 0; k < n; ++k) {
    const int pk = off + 2 * k, qk = off + 2 * k + 1;
    RVector br = l->bracket(t0.coords, RVector::Unit(l->dim(), pk));
    CHECK((br - RVector::Unit(l->dim(), qk)).norm() < 1e-12);
    br = l->bracket(t0.coords, RVector::Unit(l->dim(), qk));
    CHECK((br + RVector::Unit(l->dim(), pk)).norm() < 1e-12);
  }
}

TEST_CASE("constructed bases satisfy their defining conditions") {
  auto sp = build_sp_real(2, cfg);
  const CMatrix W = sp->realization().form;
  for (const auto& X : sp->basis())
    CHECK((X.transpose() * W + W * X).norm() < 1e-12);

  auto ss = build_so_star(2, cfg);
  const CMatrix j = ss->realization().form;
  for (const auto& X : ss->basis()) {
    CHECK((X.transpose() + X).norm() < 1e-12);
    CHECK((X.adjoint() * j + j * X).norm() < 1e-12);
  }

  auto su = build_su(3, 2, cfg);
  const CMatrix J = su->realization().form;
  for (const auto& X : su->basis()) {
    CHECK((X.adjoint() * J + J * X).norm() < 1e-12);
    CHECK(std::abs(X.trace()) < 1e-12);
  }
}

TEST_CASE("group case validation") {
  GroupCase bad{CaseKind::diagonal, 1, 1, 3, 2, {}};
  CHECK_THROWS_AS(bad.validate(), BadParameters);
  GroupCase bad2{CaseKind::diagonal, 2, 1, 1, 1, {}};
  CHECK_THROWS_AS(bad2.validate(), BadParameters);
  GroupCase ok{CaseKind::diagonal, 2, 1, 2, 1, {}};
  CHECK_NOTHROW(ok.validate());
  CHECK_THROWS_AS(SignatureForm::standard(0, 0), BadSignature);
}

#include <random>

#include "doctest.h"
#include "rigidity/certify.hpp"

using namespace rigidity;

namespace {

const ToleranceConfig cfg;

const IsotypicComponent* find_comp(const DecompositionReport& rep, LabelKind k,
                                   int m = -1) {
  for (const auto& c : rep.components)
    if (c.label.kind == k && (k != LabelKind::sym_power || c.label.m == m))
      return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("centralizer dimensions in the diagonal case (2,1,3,2)") {
  Embedding e = diagonal_embedding(2, 1, 3, 2, cfg);
  CHECK(centralizer_in_g(e, cfg).dim() == 4);  // su(1,1) + RE
  RealSubspace zk = centralizer_in_k(e, cfg);
  CHECK(zk.dim() == 2);
  // z_k is orthonormal for -B(x, theta y) and theta-fixed
  const RMatrix& G = e.target->compact_inner();
  CHECK((zk.basis.transpose() * G * zk.basis - RMatrix::Identity(2, 2)).norm() <
        1e-10);
  CHECK(((e.target->cartan_theta() - RMatrix::Identity(24, 24)) * zk.basis).norm() <
        1e-10);
}

TEST_CASE("the Satake centralizer is the Z0 line") {
  Embedding e = satake_embedding(2, cfg);
  RealSubspace zg = centralizer_in_g(e, cfg);
  REQUIRE(zg.dim() == 1);
  AlgebraElement z0 = satake_reference_Z0(e.target, cfg);
  const RVector dir = z0.coords / z0.coords.norm();
  CHECK(std::abs(std::abs(zg.basis.col(0).dot(dir)) - 1.0) < 1e-10);
  CHECK(centralizer_in_k(e, cfg).dim() == 1);
}

TEST_CASE("the Ihara so* centralizer contains the center of u(n,1)") {
  Embedding e = ihara_embedding(3, IharaTarget::so_star, cfg);
  RealSubspace zg = centralizer_in_g(e, cfg);
  CHECK(zg.dim() >= 1);
  CHECK(centralizer_in_k(e, cfg).dim() >= 1);
}

TEST_CASE("gamma window and the reference Z of the diagonal case") {
  // (2,1,3,2): window 1/4 < gamma < 4
  const auto [lo, hi] = diagonal_gamma_window(2, 1, 3, 2);
  CHECK(lo == doctest::Approx(0.25));
  CHECK(hi == doctest::Approx(4.0));
  Embedding e = diagonal_embedding(2, 1, 3, 2, cfg);
  CHECK_THROWS_AS(diagonal_reference_Z(2, 1, 3, 2, 5.0, e.target, cfg),
                  GammaOutOfWindow);
  CHECK_THROWS_AS(diagonal_reference_Z(2, 1, 3, 2, 0.25, e.target, cfg),
                  GammaOutOfWindow);

  AlgebraElement Z = diagonal_reference_Z(2, 1, 3, 2, 1.0, e.target, cfg);
  CMatrix expected = CMatrix::Zero(5, 5);
  expected(3, 3) = cxd(0, -1);
  expected(4, 4) = cxd(0, 1);
  CHECK((Z.matrix() - expected).norm() < 1e-12);

  // Z is theta-fixed, traceless and commutes with the image
  CHECK(std::abs(Z.matrix().trace()) < 1e-14);
  const RVector thz = e.target->cartan_theta() * Z.coords;
  CHECK((thz - Z.coords).norm() < 1e-10);
  for (const auto& img : e.images)
    CHECK(e.target->bracket(Z.coords, img).norm() < 1e-10);
}

TEST_CASE("the p1 = 0 reference element") {
  Embedding e = diagonal_embedding(2, 1, 2, 2, cfg);
  AlgebraElement Z = diagonal_reference_Z(2, 1, 2, 2, 99.0, e.target, cfg);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = expected(1, 1) = expected(2, 2) = cxd(0, -1.0 / 3.0);
  expected(3, 3) = cxd(0, 1);
  CHECK((Z.matrix() - expected).norm() < 1e-12);  // gamma is ignored
}

TEST_CASE("Q_Z on W_1 matches the closed diagonal formula") {
  Embedding e = diagonal_embedding(2, 1, 3, 2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  WmSubspace w1 = extract_Wm(*find_comp(rep, LabelKind::sym_power, 1), e, cfg);

  // with (alpha, beta, gamma) = (0, -1, 1):
  // Q_Z(X(b)) = 2(alpha-beta)|b11|^2 + 2(gamma-alpha)|b12|^2 = 2|b|^2
  AlgebraElement Z = diagonal_reference_Z(2, 1, 3, 2, 1.0, e.target, cfg);
  double antisym = 0.0;
  const RMatrix gram = gram_of_Q(Z.coords, w1, e.target, &antisym);
  CHECK(antisym < 1e-10);
  std::mt19937 rng(4242);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    RVector c(w1.subspace.dim());
    for (int i = 0; i < c.size(); ++i) c(i) = gauss(rng);
    const CMatrix M = e.target->matrix_of(w1.subspace.basis * c);
    const CMatrix b = M.topRightCorner(3, 2);
    const double q = c.dot(gram * c);
    CHECK(q == doctest::Approx(2.0 * b.squaredNorm()).epsilon(1e-9));
  }

  // zero element gives the zero form, and the Gram is linear in Z
  CHECK(gram_of_Q(RVector::Zero(24), w1, e.target).norm() == 0.0);
}

TEST_CASE("Q_Z on W_1 for the p1 = 0 branch carries the derived constant") {
  // the printed element Z = diag(-i q1/((n+1)q0) I, i I) gives
  // Q_Z(X(b)) = 2 ((n+1)q0 + q1)/((n+1)q0) tr b^* b, i.e. (8/3) |b|^2 here
  Embedding e = diagonal_embedding(2, 1, 2, 2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  WmSubspace w1 = extract_Wm(*find_comp(rep, LabelKind::sym_power, 1), e, cfg);
  AlgebraElement Z = diagonal_reference_Z(2, 1, 2, 2, 0.0, e.target, cfg);
  const RMatrix gram = gram_of_Q(Z.coords, w1, e.target);
  std::mt19937 rng(777);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    RVector c(w1.subspace.dim());
    for (int i = 0; i < c.size(); ++i) c(i) = gauss(rng);
    const CMatrix M = e.target->matrix_of(w1.subspace.basis * c);
    const CMatrix b = M.topRightCorner(3, 1);
    const double q = c.dot(gram * c);
    CHECK(q == doctest::Approx((8.0 / 3.0) * b.squaredNorm()).epsilon(1e-9));
  }
}

TEST_CASE("Q along -Z0 is 4 tr XX^* on the Satake W_2") {
  Embedding e = satake_embedding(2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  WmSubspace w2 = extract_Wm(*find_comp(rep, LabelKind::sym_power, 2), e, cfg);
  AlgebraElement z0 = satake_reference_Z0(e.target, cfg);
  const RMatrix gram_minus = gram_of_Q((-z0.coords).eval(), w2, e.target);
  const RMatrix gram_plus = gram_of_Q(z0.coords, w2, e.target);
  std::mt19937 rng(515151);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    RVector c(w2.subspace.dim());
    for (int i = 0; i < c.size(); ++i) c(i) = gauss(rng);
    const CMatrix X = conjugate_linear_part(
        e.target->matrix_of(w2.subspace.basis * c).real());
    const double ref = 4.0 * X.squaredNorm();
    CHECK(c.dot(gram_minus * c) == doctest::Approx(ref).epsilon(1e-9));
    CHECK(c.dot(gram_plus * c) == doctest::Approx(-ref).epsilon(1e-9));
  }
}

TEST_CASE("certificate search finds the Satake certificate along -Z0") {
  Embedding e = satake_embedding(2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  auto wms = extract_all_Wm(rep, e, cfg);
  SearchOutcome sr = certificate_search(e, rep, wms, cfg);
  REQUIRE(sr.feasible);
  REQUIRE(sr.certificate.has_value());
  CHECK(sr.certificate->margins.at(2) > 0.0);
  CHECK(sr.certificate->normalization == doctest::Approx(1.0));
  // the optimum is along -Z0 (up to normalization)
  AlgebraElement z0 = satake_reference_Z0(e.target, cfg);
  const RVector thz = e.target->cartan_theta() * z0.coords;
  const double nrm = std::sqrt(-e.target->trace_form(z0.coords, thz));
  CHECK((sr.certificate->Z + z0.coords / nrm).norm() < 1e-6);
}

TEST_CASE("certificate search dominates the reference point in the diagonal case") {
  Embedding e = diagonal_embedding(2, 1, 3, 2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  auto wms = extract_all_Wm(rep, e, cfg);
  AlgebraElement Z = diagonal_reference_Z(2, 1, 3, 2, 1.0, e.target, cfg);
  const RVector thz = e.target->cartan_theta() * Z.coords;
  const RVector zn = Z.coords / std::sqrt(-e.target->trace_form(Z.coords, thz));
  double ref_margin = 1e300;
  for (const auto& [m, v] : margins_of(zn, wms, e.target))
    ref_margin = std::min(ref_margin, v);
  CHECK(ref_margin > 0.0);
  SearchOutcome sr = certificate_search(e, rep, wms, cfg);
  REQUIRE(sr.feasible);
  CHECK(sr.achieved >= ref_margin - 1e-6);
  // scaling Z scales margins: argmax stability under positive scaling
  auto m1 = margins_of(zn, wms, e.target);
  auto m2 = margins_of((2.5 * zn).eval(), wms, e.target);
  for (const auto& [m, v] : m1)
    CHECK(m2.at(m) == doctest::Approx(2.5 * v).epsilon(1e-10));
}

TEST_CASE("infeasibility is a data outcome, not an error") {
  // feed the search a doctored W list containing W_2 twice with opposite
  // orientations of the complex structure: Q_Z on the second copy is the
  // negative of the first, so no Z can have positive margins on both
  Embedding e = satake_embedding(2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  WmSubspace w2 = extract_Wm(*find_comp(rep, LabelKind::sym_power, 2), e, cfg);
  WmSubspace flipped = w2;
  flipped.Jm = -w2.Jm;
  SearchOutcome sr = certificate_search(e, rep, {w2, flipped}, cfg);
  CHECK(!sr.feasible);
  CHECK(!sr.certificate.has_value());
  CHECK(sr.achieved <= 0.0);
}

TEST_CASE("schur cross residual vanishes between distinct isotypes") {
  Embedding e = diagonal_embedding(2, 1, 3, 2, cfg);
  DecompositionReport rep = decompose_adjoint(e, cfg);
  RealSubspace zk = centralizer_in_k(e, cfg);
  const auto* sym = find_comp(rep, LabelKind::sym_power, 1);
  const auto* adj = find_comp(rep, LabelKind::adjoint);
  REQUIRE((sym && adj));
  for (int k = 0; k < zk.dim(); ++k)
    CHECK(schur_cross_residual(zk.basis.col(k), *sym, *adj, e.target) < 1e-9);
  CHECK(schur_cross_residual(RVector::Zero(24), *sym, *adj, e.target) == 0.0);
}

TEST_CASE("verdicts for the three families") {
  {
    Embedding e = ihara_embedding(3, IharaTarget::so_2n2, cfg);
    DecompositionReport rep = decompose_adjoint(e, cfg);
    Verdict v = rigidity_verdict(e, rep, std::nullopt, 0.0, cfg);
    CHECK(v.outcome == VerdictOutcome::rigid_by_vanishing);
    CHECK(v.flags.empty());
  }
  {
    Embedding e = satake_embedding(2, cfg);
    DecompositionReport rep = decompose_adjoint(e, cfg);
    auto wms = extract_all_Wm(rep, e, cfg);
    SearchOutcome sr = certificate_search(e, rep, wms, cfg);
    Verdict v = rigidity_verdict(e, rep, sr.certificate, sr.achieved, cfg);
    CHECK(v.outcome == VerdictOutcome::rigid_by_certificate);
  }
  {
    // a missing certificate yields inconclusive, never a non-rigidity claim
    Embedding e = satake_embedding(2, cfg);
    DecompositionReport rep = decompose_adjoint(e, cfg);
    Verdict v = rigidity_verdict(e, rep, std::nullopt, -0.5, cfg);
    CHECK(v.outcome == VerdictOutcome::inconclusive);
  }
  {
    Embedding e = ihara_embedding(2, IharaTarget::so_2n2, cfg);
    DecompositionReport rep = decompose_adjoint(e, cfg);
    Verdict v = rigidity_verdict(e, rep, std::nullopt, 0.0, cfg);
    CHECK(!v.flags.empty());  // duality warning at n = 2
  }
}

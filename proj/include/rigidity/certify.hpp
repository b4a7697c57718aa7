#ifndef RIGIDITY_CERTIFY_HPP
#define RIGIDITY_CERTIFY_HPP

// Centralizer computation, the positivity form Q_Z(X) = -B(Z, [X, J_m X]),
// closed-form reference certificates for the diagonal and Satake cases, a
// feasibility search over the unit sphere of the compact centralizer, and
// the final rigidity verdict.  Infeasibility is a data outcome, not an
// error, and a missing certificate never claims non-rigidity.

#include "rigidity/isotype.hpp"

namespace rigidity {

struct PositivityCertificate {
  RVector Z;           // target-algebra coordinates
  RVector z_coords;    // coordinates in the centralizer basis
  std::map<int, double> margins;  // m -> smallest eigenvalue of the Q_Z Gram
  double normalization = 0.0;     // -B(Z, theta Z)
};

struct SearchOutcome {
  bool feasible = false;
  double achieved = 0.0;  // best min-margin over the unit sphere
  RVector best_coords;    // centralizer coordinates of the best point
  std::optional<PositivityCertificate> certificate;
};

enum class VerdictOutcome { rigid_by_vanishing, rigid_by_certificate, inconclusive };

struct Verdict {
  GroupCase gcase;
  VerdictOutcome outcome = VerdictOutcome::inconclusive;
  std::optional<PositivityCertificate> certificate;
  double achieved = 0.0;  // search optimum when inconclusive
  std::vector<std::string> flags;
};

std::string to_string(VerdictOutcome v);

/// Joint kernel of all ad(phi X_i): the full centralizer of the image.
RealSubspace centralizer_in_g(const Embedding& e, const ToleranceConfig& cfg);

/// Centralizer intersected with the theta-fixed part, basis orthonormal for
/// -B(x, theta y).
RealSubspace centralizer_in_k(const Embedding& e, const ToleranceConfig& cfg);

/// Gram matrix of the symmetrized form -1/2 B(Z, [x, J y] + [y, J x]) in the
/// stored basis of W; the norm of the discarded antisymmetric part is
/// reported through *antisym_norm when given.
RMatrix gram_of_Q(const RVector& Z, const WmSubspace& W, const AlgebraPtr& g,
                  double* antisym_norm = nullptr);

/// Smallest Q_Z eigenvalue per m, computed from fresh Grams.
std::map<int, double> margins_of(const RVector& Z,
                                 const std::vector<WmSubspace>& wms,
                                 const AlgebraPtr& g);

/// Admissible open interval for gamma in the diagonal case with p1 > 0.
std::pair<double, double> diagonal_gamma_window(int n, int q0, int p, int q);

/// The closed-form diagonal certificate element
///   Z = diag(i a I_{(n+1)q0}, i b I_{p1}, i c I_{q1}),  b = -1,
///   a = (p1 - c q1)/((n+1) q0), with c = gamma inside the admissible window;
/// for p1 = 0 it is diag(-i q1/((n+1)q0) I, i I) and gamma is ignored.
AlgebraElement diagonal_reference_Z(int n, int q0, int p, int q, double gamma,
                                    const AlgebraPtr& target,
                                    const ToleranceConfig& cfg);

/// Multiplication by i on R^{2n+2}, the generator of the centralizer in the
/// Satake case.
AlgebraElement satake_reference_Z0(const AlgebraPtr& target,
                                   const ToleranceConfig& cfg);

/// Maximizes min_m lambda_min(Gram Q_Z|W_m) over the unit sphere of the
/// compact centralizer: dense sampling (grid for dim <= 3) followed by
/// subgradient ascent.  Throws EmptyCentralizer when the sphere is empty.
SearchOutcome certificate_search(const Embedding& e,
                                 const DecompositionReport& rep,
                                 const std::vector<WmSubspace>& wms,
                                 const ToleranceConfig& cfg);

/// max over basis pairs of |B(Z, [u, v])| / |Z| for u, v in two components.
double schur_cross_residual(const RVector& Z, const IsotypicComponent& a,
                            const IsotypicComponent& b, const AlgebraPtr& g);

Verdict rigidity_verdict(const Embedding& e, const DecompositionReport& rep,
                         const std::optional<PositivityCertificate>& cert,
                         double achieved, const ToleranceConfig& cfg);

}  // namespace rigidity

#endif

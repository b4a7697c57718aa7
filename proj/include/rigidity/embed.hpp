#ifndef RIGIDITY_EMBED_HPP
#define RIGIDITY_EMBED_HPP

// The three embedding families of su(n,1) into the target realizations,
// stored as images of the fixed su_n1 basis and validated by residuals.

#include "rigidity/groups.hpp"

namespace rigidity {

struct Embedding {
  AlgebraPtr source;  // su(n,1) in the documented basis
  AlgebraPtr target;
  std::vector<RVector> images;  // target coordinates, one per source basis element
  GroupCase gcase;

  int n() const { return source->matrix_size() - 1; }
  /// Linear extension of the basis images.
  RVector map(const RVector& source_coords) const;
  /// dim(target) x dim(source) matrix whose columns are the images.
  RMatrix image_matrix() const;
};

/// su(n,1) -> su(p,q) through X -> X (x) I_{q0} into the upper-left block of
/// the form diag(J1, J2), J1 = diag(I_{n q0}, -I_{q0}), J2 = diag(I_{p1}, -I_{q1}).
Embedding diagonal_embedding(int n, int q0, int p, int q,
                             const ToleranceConfig& cfg);

/// su(n,1) -> sp(n+1,R) as the complex-linear trace-free part (realification).
Embedding satake_embedding(int n, const ToleranceConfig& cfg);

enum class IharaTarget { so_2n2, so_star };

/// su(n,1) -> so(2n,2) (realification) or -> so*(2n+2) (fixed part of the
/// commutant-type involution; see embed.cpp for the block formula).
Embedding ihara_embedding(int n, IharaTarget target, const ToleranceConfig& cfg);

/// Dispatch on a validated GroupCase.
Embedding build_case_embedding(const GroupCase& c, const ToleranceConfig& cfg);

/// max over source basis pairs of |phi([X,Y]) - [phi X, phi Y]| / scale.
double homomorphism_residual(const Embedding& e);

/// sigma_min / sigma_max of the image matrix (0 for a degenerate map).
double injectivity_margin(const Embedding& e);

}  // namespace rigidity

#endif

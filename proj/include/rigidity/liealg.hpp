#ifndef RIGIDITY_LIEALG_HPP
#define RIGIDITY_LIEALG_HPP

// Real matrix Lie algebras as first-class values.  An algebra carries an
// explicit basis over R (stored as complex matrices; realified algebras have
// zero imaginary part), the trace form B(X,Y) = Re tr XY, and optionally the
// Cartan involution of its realization.  Elements are coordinate vectors in
// the stored basis; all structural operations (brackets, ad, theta) act on
// coordinates.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/linops.hpp"

namespace rigidity {

enum class RealizationKind { su_pq, sp_real, so_star, so_2n2, generic };

struct Realization {
  RealizationKind kind = RealizationKind::generic;
  CMatrix form;  // J for su(p,q)/so*(2n+2); realified form/complex structure otherwise
  int n = 0;     // rank parameter of the family, when meaningful
};

class LieAlgebra {
 public:
  /// Builds the algebra and validates: real-linear independence of the basis,
  /// bracket closure, real-valuedness of the trace form, and (when a Cartan
  /// involution is supplied) that theta is an involutive automorphism with
  /// -B(X, theta X) positive definite.
  static std::shared_ptr<const LieAlgebra> make(
      std::string name, std::vector<CMatrix> basis, Realization realization,
      const ToleranceConfig& cfg,
      std::optional<std::function<CMatrix(const CMatrix&)>> cartan = {});

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return matrix_size_; }
  const Realization& realization() const { return realization_; }
  const ToleranceConfig& config() const { return cfg_; }
  const std::vector<CMatrix>& basis() const { return basis_; }

  /// Coordinates of M in the basis; the relative residual of the solve is
  /// written to *residual when given.
  RVector coordinates(const CMatrix& M, double* residual = nullptr) const;
  CMatrix matrix_of(const RVector& coords) const;

  /// Lie bracket in coordinates, through the structure tensor computed at
  /// construction (closure is validated there; see ClosureViolation).
  RVector bracket(const RVector& x, const RVector& y) const;

  /// True when every basis matrix is real (realified algebras).
  bool real_matrices() const { return real_matrices_; }

  double trace_form(const RVector& x, const RVector& y) const;
  const RMatrix& trace_gram() const { return trace_gram_; }

  /// ad(x) as a dim x dim matrix acting on coordinates.
  RMatrix ad(const RVector& x) const;
  const RMatrix& ad_basis(int i) const { return ad_basis_[i]; }

  bool has_cartan() const { return theta_.has_value(); }
  /// Cartan involution on coordinates; throws MissingInvolution if absent.
  const RMatrix& cartan_theta() const;
  /// Gram matrix of the positive definite inner product -B(x, theta y).
  const RMatrix& compact_inner() const;
  /// +1 eigenspace of the Cartan involution, orthonormal for compact_inner().
  RealSubspace cartan_fixed_part() const;

 private:
  LieAlgebra() = default;

  std::string name_;
  int matrix_size_ = 0;
  std::vector<CMatrix> basis_;
  Realization realization_;
  ToleranceConfig cfg_;

  bool real_matrices_ = false;
  RMatrix basis_flat_;  // 2*N^2 x dim
  Eigen::ColPivHouseholderQR<RMatrix> basis_qr_;
  RMatrix trace_gram_;
  std::vector<RMatrix> ad_basis_;
  std::optional<RMatrix> theta_;
  RMatrix compact_inner_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// An element of a Lie algebra, stored by its coordinate vector.
struct AlgebraElement {
  AlgebraPtr algebra;
  RVector coords;

  CMatrix matrix() const { return algebra->matrix_of(coords); }
};

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y);
double trace_form(const AlgebraElement& X, const AlgebraElement& Y);

/// Worst normalized failure of the Jacobi identity over basis triples,
/// evaluated through the coordinate bracket (a mis-built basis shows up as a
/// large residual even though matrix brackets always associate).
double jacobi_residual(const LieAlgebra& g);

/// Largest violation of the defining closure property over basis pairs.
double closure_residual(const LieAlgebra& g);

}  // namespace rigidity

#endif

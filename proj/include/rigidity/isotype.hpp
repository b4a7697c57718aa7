#ifndef RIGIDITY_ISOTYPE_HPP
#define RIGIDITY_ISOTYPE_HPP

// Decomposition of the target algebra under ad of the embedded su(n,1) into
// isotypic components, reference symmetric-power representations, numerical
// intertwiner (Schur) tests, and extraction of the W_m subspaces with their
// complex structures J_m.
//
// Separation strategy: Casimir eigenspaces first, the zero eigenspace split
// structurally into the center of the centralizer (trivial label) and its
// complement, the rest matched against reference representations through
// explicit intertwiners.  The intertwiner is the ground truth; spectra are
// recorded as diagnostics.

#include <map>

#include "rigidity/embed.hpp"

namespace rigidity {

enum class LabelKind { adjoint, trivial, sym_power, other };

struct ComponentLabel {
  LabelKind kind = LabelKind::other;
  int m = -1;        // sym_power only
  std::string tag;   // other only
  std::string str() const;
};

struct IsotypicComponent {
  RealSubspace subspace;  // basis orthonormal for -B(x, theta y)
  ComponentLabel label;
  int real_dim = 0;
  int multiplicity = 0;   // copies of the matched irreducible (0 when unknown)
  double casimir_scalar = 0.0;
  std::vector<double> t0_spectrum;    // imaginary parts of ad(phi(T0)), sorted
  double invariance_residual = 0.0;   // max ||(I-P) ad(phi X) P||
};

struct DecompositionReport {
  GroupCase gcase;
  int dim_g = 0;
  std::vector<IsotypicComponent> components;
  std::map<int, int> g1_dims;  // m -> real dim of the S^m isotype
  int g0_dim = 0;

  const IsotypicComponent* find_sym(int m) const;
};

/// Realified action of the fixed su(n,1) basis on S^m(C^{n+1}), in the lex
/// monomial basis, together with the realified span of the monomials free of
/// the last variable (the s^m = S^m(C^n) subspace).
struct ReferenceRep {
  int m = 0;
  int n = 0;
  int dim_c = 0;                  // C(n+m, m)
  std::vector<RMatrix> matrices;  // one per source basis element, size 2*dim_c
  RealSubspace sm_subspace;

  int dim() const { return 2 * dim_c; }
};

struct WmSubspace {
  int m = 0;
  RealSubspace subspace;  // ambient coordinates
  RMatrix Jm;             // complex structure in the stored basis
  int d_m = 0;
};

struct Intertwiner {
  std::vector<RMatrix> basis;  // solution space of T rho(X) = ad(phi X) T
  RMatrix sample;              // injective representative
};

/// Casimir sum ad(phi X_i) ad(phi X^i) over the B-dual basis of the image;
/// throws DegenerateForm when B degenerates on the image.
RMatrix casimir_operator(const Embedding& e, const ToleranceConfig& cfg);

ReferenceRep reference_symmetric_power(int n, int m, const AlgebraPtr& source);

/// Complex matrices of the derivation action of `gens` on degree-m monomials
/// in gens[0].rows() variables (lex order).
std::vector<CMatrix> sym_power_matrices(const std::vector<CMatrix>& gens, int m);

std::optional<Intertwiner> equivalence_test(const IsotypicComponent& component,
                                            const ReferenceRep& ref,
                                            const Embedding& e,
                                            const ToleranceConfig& cfg);

DecompositionReport decompose_adjoint(const Embedding& e,
                                      const ToleranceConfig& cfg);

/// W_m inside a sym_power(m) component: the +-i m/(n+1) frequency pair of
/// ad(phi T0), refined by the su(n) Casimir when another branch shares the
/// frequency; J_m = ((n+1)/m) ad(phi T0) restricted to it.
WmSubspace extract_Wm(const IsotypicComponent& component, const Embedding& e,
                      const ToleranceConfig& cfg);

/// All W_m for the sym_power components of a report, ascending in m.
std::vector<WmSubspace> extract_all_Wm(const DecompositionReport& rep,
                                       const Embedding& e,
                                       const ToleranceConfig& cfg);

long binomial(int a, int b);

}  // namespace rigidity

#endif

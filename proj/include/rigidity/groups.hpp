#ifndef RIGIDITY_GROUPS_HPP
#define RIGIDITY_GROUPS_HPP

// Constructors for the Lie algebra realizations in scope.  Bases are
// produced by solving the defining linear conditions with joint_kernel, so
// the conditions below are the single source of truth:
//
//   su(p, q)     complex (p+q) x (p+q):  X^* J + J X = 0, tr X = 0,
//                J the (possibly permuted) signature matrix.
//   sp(n+1, R)   real (2n+2) x (2n+2) acting on C^{n+1} = R^{2n+2} with the
//                symplectic form w(x, y) = Im(y^* J x):  X^t W + W X = 0.
//   so*(2n+2)    complex (2n+2) x (2n+2):  X^t = -X, X^* j + j X = 0 with
//                j = [[0, J], [-J, 0]].
//   so(2n, 2)    real (2n+2) x (2n+2) antisymmetric for Re(x, y)_J:
//                X^t S + S X = 0 with S = realify(J).
//
// Each constructor attaches the Cartan involution of its realization; the
// involution is validated (involutive automorphism, -B(x, theta x) > 0)
// rather than trusted.

#include <optional>

#include "rigidity/liealg.hpp"

namespace rigidity {

enum class CaseKind { diagonal, satake, ihara_so, ihara_sostar };

struct GroupCase {
  CaseKind kind = CaseKind::diagonal;
  int n = 0;
  int q0 = 0;  // diagonal only
  int p = 0;   // diagonal only
  int q = 0;   // diagonal only
  std::optional<double> gamma;

  void validate() const;
  std::string str() const;
};

/// Signature matrix diag(signs) with signs in {+1, -1}.
struct SignatureForm {
  RVector signs;

  int p() const;
  int q() const;
  CMatrix matrix() const;
  static SignatureForm standard(int p, int q);
};

/// su(p, q) with the standard form diag(I_p, -I_q).
AlgebraPtr build_su(int p, int q, const ToleranceConfig& cfg);
/// su(p, q) with an arbitrary signature-diagonal form.
AlgebraPtr build_su(const SignatureForm& form, const ToleranceConfig& cfg);

/// sp(n+1, R) realified on R^{2n+2}; u(n, 1) sits inside as the part
/// commuting with multiplication by i.
AlgebraPtr build_sp_real(int n, const ToleranceConfig& cfg);

AlgebraPtr build_so_star(int n, const ToleranceConfig& cfg);

AlgebraPtr build_so_2n2(int n, const ToleranceConfig& cfg);

// --- the fixed su(n,1) source realization ----------------------------------
//
// su(n, 1) on C^{n+1} with J = diag(I_n, -1), in the documented basis order
// (0-based indices, last index n):
//   D_k   = i(E_kk - E_nn)                        k = 0..n-1
//   A_kl  = E_kl - E_lk,  S_kl = i(E_kl + E_lk)   0 <= k < l <= n-1 (lex)
//   P_k   = E_kn + E_nk,  Q_k  = i(E_kn - E_nk)   k = 0..n-1
// The first n + n(n-1) elements span the maximal compact s(u(n) + u(1)).

AlgebraPtr su_n1(int n, const ToleranceConfig& cfg);

/// T_0 = (n+1)^{-1} i diag(1, ..., 1, -n) as an element of su_n1(n).
AlgebraElement central_element_T0(const AlgebraPtr& source);

/// Indices of the compact part (D, A, S elements) in the su_n1 basis.
std::vector<int> compact_indices_su_n1(int n);

/// Coordinate vectors of a basis of the su(n) block (trace-free u(n) part
/// with no u(1) component) inside su_n1(n).
std::vector<RVector> su_n_block_coords(int n);

/// Number of compact basis elements n + n(n-1), then P/Q pairs follow.
int compact_count_su_n1(int n);

}  // namespace rigidity

#endif

#include "rigidity/groups.hpp"

#include <sstream>

namespace rigidity {

namespace {

// Solve a set of real-linear matrix conditions for their common kernel.
// Unknowns range over all complex N x N matrices (complex_field) or all real
// ones; each condition maps a matrix to a matrix that must vanish.
std::vector<CMatrix> solve_matrix_conditions(
    int N, bool complex_field,
    const std::vector<std::function<CMatrix(const CMatrix&)>>& conditions,
    const ToleranceConfig& cfg) {
  const int units = complex_field ? 2 * N * N : N * N;
  auto unit = [&](int idx) {
    CMatrix U = CMatrix::Zero(N, N);
    const int entry = idx % (N * N);
    const int k = entry % N, l = entry / N;
    U(k, l) = (idx < N * N) ? cxd(1, 0) : cxd(0, 1);
    return U;
  };
  std::vector<RMatrix> ops;
  for (const auto& cond : conditions) {
    RMatrix op(2 * N * N, units);
    for (int u = 0; u < units; ++u) op.col(u) = flatten(cond(unit(u)));
    ops.push_back(std::move(op));
  }
  RealSubspace ker = joint_kernel(ops, units, cfg);
  std::vector<CMatrix> basis;
  basis.reserve(ker.dim());
  for (int i = 0; i < ker.dim(); ++i) {
    CMatrix M = CMatrix::Zero(N, N);
    for (int u = 0; u < units; ++u)
      if (ker.basis(u, i) != 0.0) M += ker.basis(u, i) * unit(u);
    basis.push_back(std::move(M));
  }
  return basis;
}

CMatrix so_star_j(int n) {
  const int m = n + 1;
  CMatrix J = CMatrix::Identity(m, m);
  J(m - 1, m - 1) = -1;
  CMatrix j = CMatrix::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m) = J;
  j.bottomLeftCorner(m, m) = -J;
  return j;
}

// Matrix of the symplectic form w(x, y) = Im(y^* J x) in interleaved real
// coordinates: blockdiag(J_k * [[0, -1], [1, 0]]).
RMatrix symplectic_form(int n) {
  const int m = n + 1;
  RMatrix W = RMatrix::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    const double s = (k == m - 1) ? -1.0 : 1.0;
    W(2 * k, 2 * k + 1) = -s;
    W(2 * k + 1, 2 * k) = s;
  }
  return W;
}

CMatrix jn1(int n) {
  CMatrix J = CMatrix::Identity(n + 1, n + 1);
  J(n, n) = -1;
  return J;
}

}  // namespace

void GroupCase::validate() const {
  if (n < 2) throw BadParameters("n must be at least 2");
  if (kind == CaseKind::diagonal) {
    if (q0 < 1) throw BadParameters("q0 must be at least 1");
    if (p < n * q0 || q < q0)
      throw BadParameters("diagonal case requires p >= n*q0 and q >= q0");
  }
}

std::string GroupCase::str() const {
  std::ostringstream out;
  switch (kind) {
    case CaseKind::diagonal:
      out << "diagonal(n=" << n << ",q0=" << q0 << ",p=" << p << ",q=" << q << ")";
      break;
    case CaseKind::satake:
      out << "satake(n=" << n << ")";
      break;
    case CaseKind::ihara_so:
      out << "ihara-so(n=" << n << ")";
      break;
    case CaseKind::ihara_sostar:
      out << "ihara-sostar(n=" << n << ")";
      break;
  }
  return out.str();
}

int SignatureForm::p() const {
  return static_cast<int>((signs.array() > 0).count());
}
int SignatureForm::q() const {
  return static_cast<int>((signs.array() < 0).count());
}

CMatrix SignatureForm::matrix() const {
  CMatrix J = CMatrix::Zero(signs.size(), signs.size());
  for (int i = 0; i < signs.size(); ++i) {
    if (signs(i) != 1.0 && signs(i) != -1.0)
      throw BadSignature("form diagonal entries must be +1 or -1");
    J(i, i) = signs(i);
  }
  return J;
}

SignatureForm SignatureForm::standard(int p, int q) {
  if (p < 0 || q < 0 || p + q == 0) throw BadSignature("bad signature");
  RVector s(p + q);
  s.head(p).setOnes();
  s.tail(q).setConstant(-1.0);
  return SignatureForm{s};
}

AlgebraPtr build_su(int p, int q, const ToleranceConfig& cfg) {
  return build_su(SignatureForm::standard(p, q), cfg);
}

AlgebraPtr build_su(const SignatureForm& form, const ToleranceConfig& cfg) {
  const int N = static_cast<int>(form.signs.size());
  const CMatrix J = form.matrix();
  std::vector<std::function<CMatrix(const CMatrix&)>> conds;
  conds.push_back([J](const CMatrix& X) { return X.adjoint() * J + J * X; });
  conds.push_back([N](const CMatrix& X) {
    CMatrix t = CMatrix::Zero(1, 1);
    t(0, 0) = X.trace();
    CMatrix out = CMatrix::Zero(N, N);
    out(0, 0) = t(0, 0);
    return out;
  });
  auto basis = solve_matrix_conditions(N, true, conds, cfg);
  std::ostringstream name;
  name << "su(" << form.p() << "," << form.q() << ")";
  Realization real{RealizationKind::su_pq, J, 0};
  return LieAlgebra::make(name.str(), std::move(basis), real, cfg,
                          [J](const CMatrix& X) -> CMatrix { return J * X * J; });
}

AlgebraPtr build_sp_real(int n, const ToleranceConfig& cfg) {
  if (n < 1) throw BadParameters("sp(n+1,R) needs n >= 1");
  const int N = 2 * (n + 1);
  const RMatrix W = symplectic_form(n);
  const CMatrix Wc = W.cast<cxd>();
  std::vector<std::function<CMatrix(const CMatrix&)>> conds;
  conds.push_back([Wc](const CMatrix& X) { return X.transpose() * Wc + Wc * X; });
  auto basis = solve_matrix_conditions(N, false, conds, cfg);
  Realization real{RealizationKind::sp_real, Wc, n};
  std::ostringstream name;
  name << "sp(" << (n + 1) << ",R)";
  return LieAlgebra::make(name.str(), std::move(basis), real, cfg,
                          [](const CMatrix& X) -> CMatrix { return -X.transpose(); });
}

AlgebraPtr build_so_star(int n, const ToleranceConfig& cfg) {
  if (n < 1) throw BadParameters("so*(2n+2) needs n >= 1");
  const int N = 2 * (n + 1);
  const CMatrix j = so_star_j(n);
  std::vector<std::function<CMatrix(const CMatrix&)>> conds;
  conds.push_back([](const CMatrix& X) { return (X.transpose() + X).eval(); });
  conds.push_back([j](const CMatrix& X) { return X.adjoint() * j + j * X; });
  auto basis = solve_matrix_conditions(N, true, conds, cfg);
  Realization real{RealizationKind::so_star, j, n};
  std::ostringstream name;
  name << "so*(" << N << ")";
  return LieAlgebra::make(name.str(), std::move(basis), real, cfg,
                          [](const CMatrix& X) -> CMatrix { return -X.adjoint(); });
}

AlgebraPtr build_so_2n2(int n, const ToleranceConfig& cfg) {
  if (n < 1) throw BadParameters("so(2n,2) needs n >= 1");
  const int N = 2 * (n + 1);
  const CMatrix S = realify(jn1(n)).cast<cxd>();
  std::vector<std::function<CMatrix(const CMatrix&)>> conds;
  conds.push_back([S](const CMatrix& X) { return X.transpose() * S + S * X; });
  auto basis = solve_matrix_conditions(N, false, conds, cfg);
  Realization real{RealizationKind::so_2n2, S, n};
  std::ostringstream name;
  name << "so(" << 2 * n << ",2)";
  return LieAlgebra::make(name.str(), std::move(basis), real, cfg,
                          [S](const CMatrix& X) -> CMatrix { return S * X * S; });
}

AlgebraPtr su_n1(int n, const ToleranceConfig& cfg) {
  if (n < 1) throw BadParameters("su(n,1) needs n >= 1");
  const int N = n + 1;
  const cxd I(0, 1);
  std::vector<CMatrix> basis;
  auto E = [N](int k, int l) {
    CMatrix M = CMatrix::Zero(N, N);
    M(k, l) = 1;
    return M;
  };
  for (int k = 0; k < n; ++k) basis.push_back(I * (E(k, k) - E(n, n)));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      basis.push_back(E(k, l) - E(l, k));
      basis.push_back(I * (E(k, l) + E(l, k)));
    }
  for (int k = 0; k < n; ++k) {
    basis.push_back(E(k, n) + E(n, k));
    basis.push_back(I * (E(k, n) - E(n, k)));
  }
  const CMatrix J = jn1(n);
  Realization real{RealizationKind::su_pq, J, n};
  std::ostringstream name;
  name << "su(" << n << ",1)";
  return LieAlgebra::make(name.str(), std::move(basis), real, cfg,
                          [J](const CMatrix& X) -> CMatrix { return J * X * J; });
}

AlgebraElement central_element_T0(const AlgebraPtr& source) {
  const int N = source->matrix_size();
  const int n = N - 1;
  RVector coords = RVector::Zero(source->dim());
  for (int k = 0; k < n; ++k) coords(k) = 1.0 / (n + 1);
  return AlgebraElement{source, coords};
}

std::vector<int> compact_indices_su_n1(int n) {
  std::vector<int> idx(compact_count_su_n1(n));
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return idx;
}

int compact_count_su_n1(int n) { return n + n * (n - 1); }

std::vector<RVector> su_n_block_coords(int n) {
  const int dim = (n + 1) * (n + 1) - 1;
  std::vector<RVector> out;
  for (int k = 0; k + 1 < n; ++k) {
    RVector v = RVector::Zero(dim);
    v(k) = 1.0;
    v(k + 1) = -1.0;  // i(E_kk - E_{k+1,k+1})
    out.push_back(v);
  }
  const int off = n;
  for (int i = 0; i < n * (n - 1); ++i) {
    RVector v = RVector::Zero(dim);
    v(off + i) = 1.0;
    out.push_back(v);
  }
  return out;
}

}  // namespace rigidity

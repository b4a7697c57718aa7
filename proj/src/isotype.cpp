#include "rigidity/isotype.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace rigidity {

namespace {

std::vector<std::vector<int>> multiindices(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(vars, 0);
  // lexicographic enumeration of all alpha with |alpha| = degree
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == vars - 1) {
      idx[pos] = left;
      out.push_back(idx);
      return;
    }
    for (int a = left; a >= 0; --a) {
      idx[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  if (vars > 0) rec(0, degree);
  return out;
}

// restriction of an ambient operator to a G-orthonormal subspace basis
RMatrix restrict_op(const RMatrix& V, const RMatrix& G, const RMatrix& A) {
  return V.transpose() * G * (A * V);
}

std::vector<double> spectrum_imag(const RMatrix& K) {
  Eigen::EigenSolver<RMatrix> es(K);
  std::vector<double> imag(K.rows());
  for (int i = 0; i < K.rows(); ++i) imag[i] = es.eigenvalues()(i).imag();
  std::sort(imag.begin(), imag.end());
  // snap tiny values so reports are stable
  for (double& v : imag)
    if (std::abs(v) < 1e-10) v = 0.0;
  return imag;
}

std::string spectrum_tag(const std::vector<double>& spec) {
  std::ostringstream out;
  out << "t0 spectrum {";
  bool first = true;
  for (size_t i = 0; i < spec.size();) {
    size_t j = i;
    while (j < spec.size() && std::abs(spec[j] - spec[i]) < 1e-8) ++j;
    if (!first) out << ", ";
    out << spec[i] << " x" << (j - i);
    first = false;
    i = j;
  }
  out << "}";
  return out.str();
}

struct Block {
  RMatrix basis;  // ambient coords, G-orthonormal columns
  double casimir = 0.0;
};

}  // namespace

long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

std::string ComponentLabel::str() const {
  switch (kind) {
    case LabelKind::adjoint:
      return "adjoint";
    case LabelKind::trivial:
      return "trivial";
    case LabelKind::sym_power:
      return "sym_power(" + std::to_string(m) + ")";
    case LabelKind::other:
      return "other(" + tag + ")";
  }
  return "?";
}

const IsotypicComponent* DecompositionReport::find_sym(int m) const {
  for (const auto& c : components)
    if (c.label.kind == LabelKind::sym_power && c.label.m == m) return &c;
  return nullptr;
}

RMatrix casimir_operator(const Embedding& e, const ToleranceConfig& cfg) {
  const int d = e.source->dim();
  const int D = e.target->dim();
  RMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      gram(i, j) = gram(j, i) = e.target->trace_form(e.images[i], e.images[j]);
  Eigen::JacobiSVD<RMatrix> svd(gram);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= cfg.residual_tol * sv(0))
    throw DegenerateForm("trace form degenerates on the embedded algebra");
  const RMatrix ginv = gram.inverse();
  std::vector<RMatrix> A;
  A.reserve(d);
  for (int i = 0; i < d; ++i) A.push_back(e.target->ad(e.images[i]));
  RMatrix C = RMatrix::Zero(D, D);
  for (int i = 0; i < d; ++i) {
    RMatrix dual = RMatrix::Zero(D, D);
    for (int k = 0; k < d; ++k)
      if (ginv(i, k) != 0.0) dual += ginv(i, k) * A[k];
    C += A[i] * dual;
  }
  return C;
}

std::vector<CMatrix> sym_power_matrices(const std::vector<CMatrix>& gens, int m) {
  const int vars = gens.empty() ? 0 : static_cast<int>(gens[0].rows());
  const auto mono = multiindices(vars, m);
  const int dim = static_cast<int>(mono.size());
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < dim; ++t) index[mono[t]] = t;

  std::vector<CMatrix> out;
  out.reserve(gens.size());
  for (const auto& X : gens) {
    CMatrix R = CMatrix::Zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
      for (int j = 0; j < vars; ++j) {
        if (mono[t][j] == 0) continue;
        for (int i = 0; i < vars; ++i) {
          if (X(i, j) == cxd(0, 0)) continue;
          std::vector<int> target = mono[t];
          target[j] -= 1;
          target[i] += 1;
          R(index.at(target), t) += double(mono[t][j]) * X(i, j);
        }
      }
    }
    out.push_back(std::move(R));
  }
  return out;
}

ReferenceRep reference_symmetric_power(int n, int m, const AlgebraPtr& source) {
  if (m < 0) throw BadParameters("m must be nonnegative");
  ReferenceRep ref;
  ref.m = m;
  ref.n = n;
  ref.dim_c = static_cast<int>(binomial(n + m, m));
  auto cm = sym_power_matrices(source->basis(), m);
  ref.matrices.reserve(cm.size());
  for (const auto& R : cm) ref.matrices.push_back(realify(R));

  // monomials free of the last variable span s^m = S^m(C^n)
  const auto mono = multiindices(n + 1, m);
  std::vector<int> keep;
  for (int t = 0; t < static_cast<int>(mono.size()); ++t)
    if (mono[t][n] == 0) keep.push_back(t);
  RMatrix basis = RMatrix::Zero(2 * ref.dim_c, 2 * static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a) {
    basis(2 * keep[a], 2 * a) = 1.0;
    basis(2 * keep[a] + 1, 2 * a + 1) = 1.0;
  }
  ref.sm_subspace = RealSubspace{2 * ref.dim_c, basis};
  return ref;
}

namespace {

// Solution space of  A_i T = T R_i  for T : R^r -> R^u, with an injectivity
// probe on random elements of the space.
std::optional<Intertwiner> solve_intertwiners(const std::vector<RMatrix>& A,
                                              const std::vector<RMatrix>& R,
                                              const ToleranceConfig& cfg) {
  const int u = static_cast<int>(A[0].rows());
  const int r = static_cast<int>(R[0].rows());
  const RMatrix Ir = RMatrix::Identity(r, r);
  const RMatrix Iu = RMatrix::Identity(u, u);
  std::vector<RMatrix> ops;
  ops.reserve(A.size());
  for (size_t i = 0; i < A.size(); ++i) {
    const RMatrix Rt = R[i].transpose();
    ops.push_back(kronecker(Ir, A[i]) - kronecker(Rt, Iu));
  }
  RealSubspace sol = joint_kernel(ops, u * r, cfg);
  if (sol.dim() == 0) return std::nullopt;

  Intertwiner tw;
  for (int a = 0; a < sol.dim(); ++a) {
    tw.basis.push_back(
        Eigen::Map<const RMatrix>(sol.basis.col(a).data(), u, r));
  }
  std::mt19937 rng(20240517);
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 4; ++attempt) {
    RMatrix T = RMatrix::Zero(u, r);
    for (auto& Ta : tw.basis) T += gauss(rng) * Ta;
    Eigen::JacobiSVD<RMatrix> svd(T);
    const auto& sv = svd.singularValues();
    if (r <= u && sv(sv.size() - 1) > 1e-6 * sv(0)) {
      tw.sample = T;
      return tw;
    }
  }
  return std::nullopt;  // solutions exist but none injective
}

}  // namespace

std::optional<Intertwiner> equivalence_test(const IsotypicComponent& component,
                                            const ReferenceRep& ref,
                                            const Embedding& e,
                                            const ToleranceConfig& cfg) {
  const int u = component.real_dim;
  if (u % ref.dim() != 0) return std::nullopt;
  const RMatrix& G = e.target->compact_inner();
  std::vector<RMatrix> A;
  A.reserve(e.images.size());
  for (const auto& img : e.images)
    A.push_back(restrict_op(component.subspace.basis, G, e.target->ad(img)));
  return solve_intertwiners(A, ref.matrices, cfg);
}

namespace {

struct EngineState {
  const Embedding* e;
  ToleranceConfig cfg;
  RMatrix G;
  Eigen::LLT<RMatrix> Gchol;
  std::vector<RMatrix> Aimg;      // ad(phi X_i)
  RMatrix K;                      // ad(phi T0)
  std::vector<ReferenceRep> sym_refs;
};

// label one G-orthonormal block, splitting off matched isotypes recursively
void classify_block(EngineState& st, const Block& blk,
                    std::vector<IsotypicComponent>& out) {
  const int u = static_cast<int>(blk.basis.cols());
  if (u == 0) return;
  std::vector<RMatrix> Ares;
  Ares.reserve(st.Aimg.size());
  for (const auto& A : st.Aimg) Ares.push_back(restrict_op(blk.basis, st.G, A));

  auto make_component = [&](const RMatrix& basis, ComponentLabel label,
                            int multiplicity) {
    IsotypicComponent c;
    c.subspace = RealSubspace{static_cast<int>(basis.rows()), basis};
    c.label = std::move(label);
    c.real_dim = static_cast<int>(basis.cols());
    c.multiplicity = multiplicity;
    c.casimir_scalar = blk.casimir;
    c.t0_spectrum = spectrum_imag(restrict_op(basis, st.G, st.K));
    out.push_back(std::move(c));
  };

  // adjoint reference first, then symmetric powers in ascending m
  const int dl = st.e->source->dim();
  if (u % dl == 0) {
    std::vector<RMatrix> rho;
    rho.reserve(dl);
    for (int i = 0; i < dl; ++i) rho.push_back(st.e->source->ad_basis(i));
    if (auto tw = solve_intertwiners(Ares, rho, st.cfg)) {
      RMatrix stacked(u, static_cast<long>(tw->basis.size()) * dl);
      for (size_t a = 0; a < tw->basis.size(); ++a)
        stacked.middleCols(static_cast<long>(a) * dl, dl) = tw->basis[a];
      RealSubspace span = column_span(stacked, st.cfg);
      const int mult = static_cast<int>(tw->basis.size());
      if (span.dim() == u) {
        make_component(blk.basis, ComponentLabel{LabelKind::adjoint, -1, ""}, mult);
        return;
      }
      if (span.dim() == mult * dl) {
        RMatrix matched = blk.basis * span.basis;
        make_component(matched, ComponentLabel{LabelKind::adjoint, -1, ""}, mult);
        // remaining part of the block, G-orthogonal to the matched isotype
        std::vector<RMatrix> cut{span.basis.transpose()};
        RealSubspace rest = joint_kernel(cut, u, st.cfg);
        classify_block(st, Block{blk.basis * rest.basis, blk.casimir}, out);
        return;
      }
      throw UnresolvedComponent("adjoint intertwiner images do not span a clean subspace");
    }
  }
  for (const auto& ref : st.sym_refs) {
    if (ref.m == 0 || u % ref.dim() != 0) continue;
    if (auto tw = solve_intertwiners(Ares, ref.matrices, st.cfg)) {
      RMatrix stacked(u, static_cast<long>(tw->basis.size()) * ref.dim());
      for (size_t a = 0; a < tw->basis.size(); ++a)
        stacked.middleCols(static_cast<long>(a) * ref.dim(), ref.dim()) = tw->basis[a];
      RealSubspace span = column_span(stacked, st.cfg);
      const int mult = static_cast<int>(tw->basis.size()) / 2;
      if (static_cast<int>(tw->basis.size()) != 2 * mult)
        throw UnresolvedComponent("odd intertwiner count for a realified complex type");
      if (span.dim() == u) {
        make_component(blk.basis, ComponentLabel{LabelKind::sym_power, ref.m, ""}, mult);
        return;
      }
      if (span.dim() == mult * ref.dim()) {
        RMatrix matched = blk.basis * span.basis;
        make_component(matched, ComponentLabel{LabelKind::sym_power, ref.m, ""}, mult);
        std::vector<RMatrix> cut{span.basis.transpose()};
        RealSubspace rest = joint_kernel(cut, u, st.cfg);
        classify_block(st, Block{blk.basis * rest.basis, blk.casimir}, out);
        return;
      }
      throw UnresolvedComponent("sym intertwiner images do not span a clean subspace");
    }
  }
  // no reference matches
  auto spec = spectrum_imag(restrict_op(blk.basis, st.G, st.K));
  std::ostringstream tag;
  tag << "dim " << u << ", " << spectrum_tag(spec);
  make_component(blk.basis, ComponentLabel{LabelKind::other, -1, tag.str()}, 0);
}

}  // namespace

DecompositionReport decompose_adjoint(const Embedding& e,
                                      const ToleranceConfig& cfg) {
  const double hres = homomorphism_residual(e);
  if (hres > cfg.residual_tol)
    throw ResidualTooHigh("homomorphism residual too high: " + fmt_residual(hres));

  const int D = e.target->dim();
  const int n = e.n();
  EngineState st;
  st.e = &e;
  st.cfg = cfg;
  st.G = e.target->compact_inner();
  st.Gchol.compute(st.G);
  for (const auto& img : e.images) st.Aimg.push_back(e.target->ad(img));
  st.K = e.target->ad(e.map(central_element_T0(e.source).coords));
  for (int m = 1; 2 * binomial(n + m, m) <= D; ++m)
    st.sym_refs.push_back(reference_symmetric_power(n, m, e.source));

  // Casimir eigenspaces in coordinates orthonormal for -B(x, theta y);
  // the Casimir is self-adjoint there.
  const RMatrix C = casimir_operator(e, cfg);
  const RMatrix L = st.Gchol.matrixL();
  RMatrix Ct = L.transpose() * C;
  Ct = L.transpose()
           .triangularView<Eigen::Upper>()
           .solve<Eigen::OnTheRight>(Ct);
  Ct = ((Ct + Ct.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<RMatrix> es(Ct);
  const RVector evals = es.eigenvalues();

  std::vector<IsotypicComponent> components;
  for (auto [b, eend] : cluster_eigenvalues(evals, cfg.eigen_gap_tol)) {
    RMatrix Y = es.eigenvectors().middleCols(b, eend - b);
    RMatrix V = L.transpose().triangularView<Eigen::Upper>().solve(Y);
    const double scalar = evals.segment(b, eend - b).mean();

    if (std::abs(scalar) < cfg.eigen_gap_tol) {
      // the zero eigenspace is the centralizer; split center from the rest
      const int z = static_cast<int>(V.cols());
      std::vector<RMatrix> zops;
      for (int bidx = 0; bidx < z; ++bidx) {
        RMatrix M(D, z);
        for (int a = 0; a < z; ++a)
          M.col(a) = e.target->bracket(V.col(a), V.col(bidx));
        zops.push_back(std::move(M));
      }
      RealSubspace center_z = joint_kernel(zops, z, cfg);
      if (center_z.dim() > 0) {
        IsotypicComponent c;
        RMatrix basis = V * center_z.basis;
        c.subspace = RealSubspace{D, basis};
        c.label = ComponentLabel{LabelKind::trivial, -1, ""};
        c.real_dim = center_z.dim();
        c.multiplicity = center_z.dim();
        c.casimir_scalar = 0.0;
        c.t0_spectrum.assign(center_z.dim(), 0.0);
        components.push_back(std::move(c));
      }
      if (center_z.dim() < z) {
        std::vector<RMatrix> cut{center_z.basis.transpose()};
        RealSubspace rest = joint_kernel(cut, z, cfg);
        IsotypicComponent c;
        RMatrix basis = V * rest.basis;
        c.subspace = RealSubspace{D, basis};
        std::ostringstream tag;
        tag << "centralizer derived part, dim " << rest.dim();
        c.label = ComponentLabel{LabelKind::other, -1, tag.str()};
        c.real_dim = rest.dim();
        c.multiplicity = 0;
        c.casimir_scalar = 0.0;
        c.t0_spectrum.assign(rest.dim(), 0.0);
        components.push_back(std::move(c));
      }
      continue;
    }
    classify_block(st, Block{V, scalar}, components);
  }

  // invariance diagnostics and completeness
  int total = 0;
  for (auto& c : components) {
    const RMatrix& V = c.subspace.basis;
    RMatrix P = V * V.transpose() * st.G;
    double worst = 0.0;
    for (const auto& A : st.Aimg) {
      RMatrix W = A * P - P * (A * P);
      worst = std::max(worst, W.norm());
    }
    c.invariance_residual = worst;
    if (worst > 1e-6)
      throw UnresolvedComponent("component is not ad-invariant: residual " +
                                fmt_residual(worst));
    total += c.real_dim;
  }
  if (total != D)
    throw UnresolvedComponent("component dimensions do not sum to dim g");

  DecompositionReport rep;
  rep.gcase = e.gcase;
  rep.dim_g = D;
  rep.components = std::move(components);
  for (const auto& c : rep.components) {
    if (c.label.kind == LabelKind::sym_power && c.label.m >= 1)
      rep.g1_dims[c.label.m] += c.real_dim;
    else
      rep.g0_dim += c.real_dim;
  }
  // stable order: trivial, adjoint, sym_power ascending, other; larger first
  std::stable_sort(rep.components.begin(), rep.components.end(),
                   [](const IsotypicComponent& a, const IsotypicComponent& b) {
                     auto key = [](const IsotypicComponent& c) {
                       int k = 0;
                       switch (c.label.kind) {
                         case LabelKind::adjoint: k = 0; break;
                         case LabelKind::trivial: k = 1; break;
                         case LabelKind::other: k = 2; break;
                         case LabelKind::sym_power: k = 3 + c.label.m; break;
                       }
                       return k;
                     };
                     return key(a) < key(b);
                   });
  return rep;
}

WmSubspace extract_Wm(const IsotypicComponent& component, const Embedding& e,
                      const ToleranceConfig& cfg) {
  if (component.label.kind != LabelKind::sym_power || component.label.m < 1)
    throw BadParameters("extract_Wm needs a sym_power(m>=1) component");
  const int m = component.label.m;
  const int n = e.n();
  const RMatrix& G = e.target->compact_inner();
  const RMatrix& VU = component.subspace.basis;
  const int u = component.real_dim;

  const RMatrix K = e.target->ad(e.map(central_element_T0(e.source).coords));
  const RMatrix KU = restrict_op(VU, G, K);
  RMatrix K2 = KU * KU;
  K2 = ((K2 + K2.transpose()) / 2.0).eval();
  const double freq = double(m) / double(n + 1);
  const double target = -freq * freq;

  Eigen::SelfAdjointEigenSolver<RMatrix> es(K2);
  std::vector<int> keep;
  for (int i = 0; i < u; ++i)
    if (std::abs(es.eigenvalues()(i) - target) <
        cfg.eigen_gap_tol * std::max(1.0, std::abs(target)))
      keep.push_back(i);
  if (keep.empty())
    throw EigenvalueAbsent("component has no +-i m/(n+1) frequency pair");
  RMatrix Wc(u, static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a) Wc.col(a) = es.eigenvectors().col(keep[a]);

  const int expected =
      component.multiplicity * 2 * static_cast<int>(binomial(n + m - 1, m));
  if (static_cast<int>(keep.size()) < expected)
    throw EigenvalueAbsent("frequency eigenspace is smaller than the s^m isotype");

  if (static_cast<int>(keep.size()) > expected) {
    // another branch shares the |m/(n+1)| frequency; separate with the
    // Casimir of the su(n) block, whose scalar on S^m(C^n) is computed from
    // an independent reference action with the same dual-basis normalization
    auto block = su_n_block_coords(n);
    if (block.empty())
      throw UnresolvedComponent("cannot refine W_m without an su(n) block");
    const int bcount = static_cast<int>(block.size());
    std::vector<RVector> img;
    std::vector<CMatrix> gens;
    for (const auto& yc : block) {
      img.push_back(e.map(yc));
      gens.push_back(e.source->matrix_of(yc).topLeftCorner(n, n));
    }
    RMatrix gram(bcount, bcount);
    for (int i = 0; i < bcount; ++i)
      for (int j = i; j < bcount; ++j)
        gram(i, j) = gram(j, i) = e.target->trace_form(img[i], img[j]);
    const RMatrix ginv = gram.inverse();

    auto rho = sym_power_matrices(gens, m);
    CMatrix Cref = CMatrix::Zero(rho[0].rows(), rho[0].cols());
    for (int i = 0; i < bcount; ++i)
      for (int j = 0; j < bcount; ++j)
        if (ginv(i, j) != 0.0) Cref += ginv(i, j) * (rho[i] * rho[j]);
    const double ref_scalar = Cref(0, 0).real();
    if ((Cref - ref_scalar * CMatrix::Identity(Cref.rows(), Cref.cols())).norm() >
        1e-8 * std::max(1.0, std::abs(ref_scalar)) * Cref.rows())
      throw UnresolvedComponent("reference su(n) Casimir is not scalar");

    RMatrix CM = RMatrix::Zero(e.target->dim(), e.target->dim());
    std::vector<RMatrix> adimg;
    for (const auto& ic : img) adimg.push_back(e.target->ad(ic));
    for (int i = 0; i < bcount; ++i) {
      RMatrix dual = RMatrix::Zero(CM.rows(), CM.cols());
      for (int j = 0; j < bcount; ++j)
        if (ginv(i, j) != 0.0) dual += ginv(i, j) * adimg[j];
      CM += adimg[i] * dual;
    }
    const RMatrix Vc = VU * Wc;
    RMatrix CMW = restrict_op(Vc, G, CM);
    CMW = ((CMW + CMW.transpose()) / 2.0).eval();
    Eigen::SelfAdjointEigenSolver<RMatrix> esm(CMW);
    std::vector<int> sel;
    for (int i = 0; i < CMW.rows(); ++i)
      if (std::abs(esm.eigenvalues()(i) - ref_scalar) <
          cfg.eigen_gap_tol * std::max(1.0, std::abs(ref_scalar)))
        sel.push_back(i);
    if (static_cast<int>(sel.size()) != expected)
      throw UnresolvedComponent("su(n) Casimir refinement has unexpected dimension");
    RMatrix Wsel(Wc.rows(), static_cast<int>(sel.size()));
    for (size_t a = 0; a < sel.size(); ++a)
      Wsel.col(a) = Wc * esm.eigenvectors().col(sel[a]);
    Wc = Wsel;
  }

  WmSubspace wm;
  wm.m = m;
  wm.d_m = component.multiplicity;
  wm.subspace = RealSubspace{e.target->dim(), VU * Wc};
  const RMatrix KW = restrict_op(wm.subspace.basis, G, K);
  wm.Jm = (double(n + 1) / double(m)) * KW;
  const int w = static_cast<int>(wm.Jm.rows());
  if ((wm.Jm * wm.Jm + RMatrix::Identity(w, w)).norm() >
      100 * cfg.residual_tol * w)
    throw UnresolvedComponent("J_m^2 != -Id on the extracted W_m");
  return wm;
}

std::vector<WmSubspace> extract_all_Wm(const DecompositionReport& rep,
                                       const Embedding& e,
                                       const ToleranceConfig& cfg) {
  std::vector<WmSubspace> out;
  for (const auto& c : rep.components)
    if (c.label.kind == LabelKind::sym_power && c.label.m >= 1)
      out.push_back(extract_Wm(c, e, cfg));
  std::sort(out.begin(), out.end(),
            [](const WmSubspace& a, const WmSubspace& b) { return a.m < b.m; });
  return out;
}

}  // namespace rigidity

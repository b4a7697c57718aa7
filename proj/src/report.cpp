#include "rigidity/report.hpp"

#include <cmath>

namespace rigidity {

namespace {

ordered_json json_case(const GroupCase& c) {
  ordered_json j;
  switch (c.kind) {
    case CaseKind::diagonal:
      j["kind"] = "diagonal";
      j["n"] = c.n;
      j["q0"] = c.q0;
      j["p"] = c.p;
      j["q"] = c.q;
      break;
    case CaseKind::satake:
      j["kind"] = "satake";
      j["n"] = c.n;
      break;
    case CaseKind::ihara_so:
      j["kind"] = "ihara-so";
      j["n"] = c.n;
      break;
    case CaseKind::ihara_sostar:
      j["kind"] = "ihara-sostar";
      j["n"] = c.n;
      break;
  }
  if (c.gamma) j["gamma"] = *c.gamma;
  return j;
}

ordered_json json_tolerances(const ToleranceConfig& t) {
  ordered_json j;
  j["residual_tol"] = t.residual_tol;
  j["eigen_gap_tol"] = t.eigen_gap_tol;
  j["certificate_margin_tol"] = t.certificate_margin_tol;
  return j;
}

ordered_json json_components(const DecompositionReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : rep.components) {
    ordered_json j;
    j["label"] = c.label.str();
    j["real_dim"] = c.real_dim;
    j["multiplicity"] = c.multiplicity;
    j["casimir_scalar"] = c.casimir_scalar;
    j["t0_spectrum"] = c.t0_spectrum;
    j["invariance_residual"] = c.invariance_residual;
    arr.push_back(std::move(j));
  }
  return arr;
}

ordered_json json_margins(const std::map<int, double>& margins) {
  ordered_json j;
  for (const auto& [m, v] : margins) j[std::to_string(m)] = v;
  return j;
}

ordered_json report_header(const CaseSpec& spec) {
  ordered_json j;
  j["tool"] = {{"name", "rigidity"}, {"version", kToolVersion}};
  j["case"] = json_case(spec.gcase);
  j["tolerances"] = json_tolerances(spec.tol);
  return j;
}

ordered_json json_algebra(const LieAlgebra& g) {
  ordered_json j;
  j["name"] = g.name();
  j["matrix_size"] = g.matrix_size();
  j["field_of_matrices"] = g.real_matrices() ? "real" : "complex";
  j["dim"] = g.dim();
  return j;
}

}  // namespace

ordered_json json_of_complex_matrix(const CMatrix& M) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < M.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < M.cols(); ++j)
      row.push_back({M(i, j).real(), M(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json decompose_report(const CaseSpec& spec) {
  spec.tol.validate();
  Embedding e = build_case_embedding(spec.gcase, spec.tol);
  DecompositionReport rep = decompose_adjoint(e, spec.tol);

  ordered_json j = report_header(spec);
  j["algebra"] = json_algebra(*e.target);
  j["dim_g"] = rep.dim_g;
  j["homomorphism_residual"] = homomorphism_residual(e);
  j["components"] = json_components(rep);
  ordered_json g1 = ordered_json::object();
  for (const auto& [m, d] : rep.g1_dims) g1[std::to_string(m)] = d;
  j["g1_dims"] = std::move(g1);
  j["g0_dim"] = rep.g0_dim;
  return j;
}

ordered_json certify_report(const CaseSpec& spec) {
  spec.tol.validate();
  Embedding e = build_case_embedding(spec.gcase, spec.tol);
  DecompositionReport rep = decompose_adjoint(e, spec.tol);

  ordered_json j = report_header(spec);
  j["algebra"] = json_algebra(*e.target);
  j["dim_g"] = rep.dim_g;
  j["components"] = json_components(rep);
  ordered_json g1 = ordered_json::object();
  for (const auto& [m, d] : rep.g1_dims) g1[std::to_string(m)] = d;
  j["g1_dims"] = std::move(g1);
  j["g0_dim"] = rep.g0_dim;

  RealSubspace zg = centralizer_in_g(e, spec.tol);
  RealSubspace zk = centralizer_in_k(e, spec.tol);
  j["centralizer"] = {{"dim_in_g", zg.dim()}, {"dim_in_k", zk.dim()}};

  std::vector<WmSubspace> wms = extract_all_Wm(rep, e, spec.tol);
  ordered_json wj = ordered_json::array();
  for (const auto& w : wms) {
    wj.push_back({{"m", w.m},
                  {"real_dim", w.subspace.dim()},
                  {"d_m", w.d_m}});
  }
  j["wm"] = std::move(wj);

  // closed-form reference certificates, evaluated on the extracted W_m
  if (spec.gcase.kind == CaseKind::diagonal && !rep.g1_dims.empty()) {
    const int p1 = spec.gcase.p - spec.gcase.n * spec.gcase.q0;
    double gamma = spec.gcase.gamma.value_or(0.0);
    if (!spec.gcase.gamma && p1 > 0) {
      const auto [lo, hi] = diagonal_gamma_window(spec.gcase.n, spec.gcase.q0,
                                                  spec.gcase.p, spec.gcase.q);
      gamma = std::isfinite(hi) ? (lo + hi) / 2.0 : lo + 1.0;
    }
    AlgebraElement Z = diagonal_reference_Z(spec.gcase.n, spec.gcase.q0,
                                            spec.gcase.p, spec.gcase.q, gamma,
                                            e.target, spec.tol);
    ordered_json rj;
    rj["family"] = "diagonal";
    if (p1 > 0) rj["gamma"] = gamma;
    rj["matrix"] = json_of_complex_matrix(Z.matrix());
    rj["margins"] = json_margins(margins_of(Z.coords, wms, e.target));
    j["reference_certificate"] = std::move(rj);
  } else if (spec.gcase.kind == CaseKind::satake) {
    AlgebraElement z0 = satake_reference_Z0(e.target, spec.tol);
    ordered_json rj;
    rj["family"] = "satake";
    rj["margins_plus_Z0"] = json_margins(margins_of(z0.coords, wms, e.target));
    rj["margins_minus_Z0"] =
        json_margins(margins_of((-z0.coords).eval(), wms, e.target));
    j["reference_certificate"] = std::move(rj);
  }

  std::optional<PositivityCertificate> cert;
  double achieved = 0.0;
  if (!rep.g1_dims.empty()) {
    SearchOutcome sr = certificate_search(e, rep, wms, spec.tol);
    achieved = sr.achieved;
    cert = sr.certificate;
    if (sr.certificate) {
      ordered_json cj;
      cj["z_coords"] = std::vector<double>(
          sr.certificate->z_coords.data(),
          sr.certificate->z_coords.data() + sr.certificate->z_coords.size());
      cj["margins"] = json_margins(sr.certificate->margins);
      cj["normalization"] = sr.certificate->normalization;
      j["certificate"] = std::move(cj);
    } else {
      j["infeasibility"] = {{"achieved_min_margin", sr.achieved}};
    }
  }

  Verdict v = rigidity_verdict(e, rep, cert, achieved, spec.tol);
  j["verdict"] = to_string(v.outcome);
  j["flags"] = v.flags;
  return j;
}

}  // namespace rigidity

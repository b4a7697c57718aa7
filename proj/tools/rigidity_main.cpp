// rigidity -- numerical isotypic decompositions and positivity certificates
// for the standard embeddings of su(n,1) into classical Hermitian Lie
// algebras.
//
// Verbs:
//   decompose    construct the target algebra, embed su(n,1), decompose the
//                adjoint representation into isotypic components
//   certify      full pipeline: decomposition, W_m extraction, closed-form
//                reference certificates, certificate search, verdict
//   verify-paper run the built-in verification matrix and print one
//                pass/fail line per criterion
//
// Exit codes: 0 success, 1 invalid spec, 2 unresolved decomposition,
// 3 inconclusive certification, 4 internal error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "rigidity/report.hpp"
#include "rigidity/verify.hpp"

namespace {

struct CommonArgs {
  std::string case_name;
  int n = 2;
  int q0 = 1;
  int p = 0;
  int q = 0;
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double tol = std::numeric_limits<double>::quiet_NaN();
  std::string out_file;
};

void add_case_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--case", args.case_name, "diagonal|satake|ihara-so|ihara-sostar")
      ->required();
  cmd->add_option("--n", args.n, "rank of the embedded su(n,1)");
  cmd->add_option("--q0", args.q0, "diagonal multiplicity parameter");
  cmd->add_option("--p", args.p, "target signature p (diagonal)");
  cmd->add_option("--q", args.q, "target signature q (diagonal)");
  cmd->add_option("--gamma", args.gamma, "diagonal certificate parameter");
  cmd->add_option("--tol", args.tol, "override residual tolerance");
  cmd->add_option("--out", args.out_file, "write the report to FILE");
}

rigidity::CaseSpec spec_of(const CommonArgs& args) {
  rigidity::CaseSpec spec;
  spec.tol = rigidity::ToleranceConfig::from_env();
  if (!std::isnan(args.tol)) spec.tol.residual_tol = args.tol;
  spec.tol.validate();

  rigidity::GroupCase& c = spec.gcase;
  if (args.case_name == "diagonal") {
    c.kind = rigidity::CaseKind::diagonal;
    c.q0 = args.q0;
    c.p = args.p;
    c.q = args.q;
  } else if (args.case_name == "satake") {
    c.kind = rigidity::CaseKind::satake;
  } else if (args.case_name == "ihara-so") {
    c.kind = rigidity::CaseKind::ihara_so;
  } else if (args.case_name == "ihara-sostar") {
    c.kind = rigidity::CaseKind::ihara_sostar;
  } else {
    throw rigidity::BadParameters("unknown case: " + args.case_name);
  }
  c.n = args.n;
  if (!std::isnan(args.gamma)) c.gamma = args.gamma;
  c.validate();
  return spec;
}

void emit(const rigidity::ordered_json& doc, const std::string& out_file) {
  const std::string text = doc.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw rigidity::Error("cannot open " + out_file);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isotypic decompositions and positivity certificates for "
               "su(n,1) embeddings"};
  app.require_subcommand(1);

  CommonArgs dargs, cargs;
  CLI::App* dec = app.add_subcommand("decompose", "decompose ad g under su(n,1)");
  add_case_options(dec, dargs);
  CLI::App* cert = app.add_subcommand("certify", "search and verify positivity certificates");
  add_case_options(cert, cargs);

  std::string only;
  double vtol = std::numeric_limits<double>::quiet_NaN();
  CLI::App* verify = app.add_subcommand("verify-paper", "run the verification matrix");
  verify->add_option("--only", only, "run only criteria whose name contains NAME");
  verify->add_option("--tol", vtol, "override residual tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dec->parsed()) {
      rigidity::CaseSpec spec = spec_of(dargs);
      emit(rigidity::decompose_report(spec), dargs.out_file);
      return 0;
    }
    if (cert->parsed()) {
      rigidity::CaseSpec spec = spec_of(cargs);
      rigidity::ordered_json doc = rigidity::certify_report(spec);
      emit(doc, cargs.out_file);
      return doc["verdict"] == "inconclusive" ? 3 : 0;
    }
    if (verify->parsed()) {
      rigidity::ToleranceConfig cfg = rigidity::ToleranceConfig::from_env();
      if (!std::isnan(vtol)) cfg.residual_tol = vtol;
      cfg.validate();
      auto results = rigidity::run_acceptance(cfg, only);
      const int failures = rigidity::print_acceptance(std::cout, results);
      return failures == 0 ? 0 : 1;
    }
  } catch (const rigidity::UnresolvedComponent& ex) {
    std::cerr << "unresolved decomposition: " << ex.what() << "\n";
    return 2;
  } catch (const rigidity::BadParameters& ex) {
    std::cerr << "invalid spec: " << ex.what() << "\n";
    return 1;
  } catch (const rigidity::BadSignature& ex) {
    std::cerr << "invalid spec: " << ex.what() << "\n";
    return 1;
  } catch (const rigidity::GammaOutOfWindow& ex) {
    std::cerr << "invalid spec: " << ex.what() << "\n";
    return 1;
  } catch (const rigidity::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  }
  return 1;
}

#ifndef RIGIDITY_REPORT_HPP
#define RIGIDITY_REPORT_HPP

// Machine-readable JSON reports for the CLI.  Key order is fixed, complex
// numbers are [re, im] pairs, matrices row-major nested arrays; identical
// inputs reproduce the document bit for bit (no timestamps).

#include <string>

#include "json.hpp"
#include "rigidity/certify.hpp"

namespace rigidity {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

struct CaseSpec {
  GroupCase gcase;
  ToleranceConfig tol;
};

ordered_json json_of_complex_matrix(const CMatrix& M);

/// construct -> embed -> decompose
ordered_json decompose_report(const CaseSpec& spec);

/// full pipeline: decompose, W_m extraction, reference certificates,
/// certificate search, verdict
ordered_json certify_report(const CaseSpec& spec);

}  // namespace rigidity

#endif

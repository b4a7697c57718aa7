#ifndef RIGIDITY_VERIFY_HPP
#define RIGIDITY_VERIFY_HPP

// The built-in verification matrix: each criterion exercises one slice of
// the pipeline on the fixed case list at pinned tolerances and reports one
// pass/fail line.  Shared by the `verify-paper` CLI verb and the acceptance
// test binary.

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidity/linops.hpp"

namespace rigidity {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::vector<std::string> notes;  // sub-check details; failures are prefixed FAIL
};

/// Runs every criterion whose name contains `only` (all when empty).
std::vector<CriterionResult> run_acceptance(const ToleranceConfig& cfg,
                                            const std::string& only = "");

/// Prints one line per criterion (details for failures) and returns the
/// number of failed criteria.
int print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace rigidity

#endif

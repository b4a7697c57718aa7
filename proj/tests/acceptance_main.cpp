// Acceptance suite: runs the full verification matrix at default tolerances
// and prints one pass/fail line per criterion.  Exit status is the number of
// failed criteria (0 = all green).

#include <iostream>

#include "rigidity/verify.hpp"

int main(int argc, char** argv) {
  std::string only;
  if (argc > 1) only = argv[1];
  rigidity::ToleranceConfig cfg = rigidity::ToleranceConfig::from_env();
  auto results = rigidity::run_acceptance(cfg, only);
  const int failures = rigidity::print_acceptance(std::cout, results);
  return failures;
}

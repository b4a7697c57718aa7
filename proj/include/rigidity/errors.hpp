#ifndef RIGIDITY_ERRORS_HPP
#define RIGIDITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidity {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonHermitianInput : Error { using Error::Error; };
struct DegenerateForm : Error { using Error::Error; };
struct ClosureViolation : Error { using Error::Error; };
struct MissingInvolution : Error { using Error::Error; };
struct BadSignature : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };
struct GammaOutOfWindow : Error { using Error::Error; };
struct EigenvalueAbsent : Error { using Error::Error; };
struct ResidualTooHigh : Error { using Error::Error; };
struct UnresolvedComponent : Error { using Error::Error; };
struct EmptyCentralizer : Error { using Error::Error; };

}  // namespace rigidity

#endif

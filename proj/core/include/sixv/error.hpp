#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sixv {

enum class ErrorCode {
  NonConvergence,
  SingularSystem,
  DegreeZero,
  PoleEncountered,
  SingularDenominator,
  DegenerateSpectrum,
  ReconstructionFailure,
  K0Undefined,
  GenericityExhausted,
  ConfigError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the toolkit carries one of the codes above so that
/// the suite runner can turn it into a failed report record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sixv

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aca {

enum class ErrorCode {
  InvalidArgument,
  OutOfDomain,
  DomainMismatch,
  OutOfRange,
  NotElementary,
  LatticeTooSmall,
  NeighborhoodMismatch,
  AlphabetMismatch,
  NotOneDimensional,
  CenterNotInNeighborhood,
  CenterAhead,
  CenterBehind,
  ResourceCapExceeded,
  MalformedRuleFile,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code lets callers (and the CLI exit-code mapping) branch without parsing
// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aca

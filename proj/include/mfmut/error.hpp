#pragma once

#include <stdexcept>
#include <string>

namespace mfmut {

enum class ErrorCode {
  InvalidParameters = 1,
  NotCoherent,
  DimensionMismatch,
  NonIntegral,
  LowerDimensional,
  NotAVertex,
  NotBinomial,
  ScaleExceeded,
  Precondition,
  VerificationFailed,
  Parse,
  Overflow,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mfmut

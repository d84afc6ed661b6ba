#pragma once

#include <stdexcept>
#include <string>

namespace subent {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  not_orthonormal,
  not_hermitian,
  not_projector,
  numerical_failure,
  not_converged,
};

// Every failure raised by the core carries a code so the C layer can map it
// onto a stable status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subent

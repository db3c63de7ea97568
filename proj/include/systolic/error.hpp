#pragma once

#include <stdexcept>
#include <string>

namespace systolic {

/// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
  invalid_argument,
  parse_error,
  invalid_complex,
  degenerate_triangle,
  not_a_cycle,
  trivial_class,
  no_witness,
  infeasible_metric,
  estimator_guard,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace systolic

#pragma once

#include <stdexcept>
#include <string>

namespace afm {

enum class ErrorCode {
  invalid_argument = 1,
  parse_error,
  domain_error,
  no_bracket,
  no_convergence,
  non_monotone,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace afm

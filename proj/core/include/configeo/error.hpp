#pragma once

#include <stdexcept>
#include <string>

namespace configeo {

enum class ErrorCode {
  invalid_argument,  // precondition or parameter validation failure
  capacity,          // point budget / enumeration budget exceeded
  coincident_points, // distance below the coincidence floor
  infeasible,        // an estimator had nothing to work with
  parse,             // malformed file or config text
  io,
};

const char* to_string(ErrorCode code) noexcept;

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

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::invalid_argument, what);
}

}  // namespace configeo

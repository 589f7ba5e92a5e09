#include "configeo/error.hpp"

namespace configeo {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::coincident_points: return "coincident_points";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace configeo

#include "movable/error.hpp"

namespace movable {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::unknown_id: return "unknown_id";
    case ErrorCode::wrong_state: return "wrong_state";
    case ErrorCode::invalid_value: return "invalid_value";
    case ErrorCode::version_mismatch: return "version_mismatch";
    case ErrorCode::malformed: return "malformed";
    case ErrorCode::parse: return "parse";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace movable

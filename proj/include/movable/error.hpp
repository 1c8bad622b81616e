#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace movable {

enum class ErrorCode {
  invalid_argument,  // geometry or builder precondition violated
  unknown_id,
  wrong_state,       // id exists but on the wrong side (visible vs parallel world)
  invalid_value,
  version_mismatch,
  malformed,
  parse,
  io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace movable

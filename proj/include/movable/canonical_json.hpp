#pragma once

// Canonical JSON text: object keys in bytewise order (nlohmann::json keeps
// them sorted), no whitespace, integers as integers, and every floating
// value printed in fixed notation with exactly six decimals. Negative zero
// prints as 0.000000 so that parse -> print is byte-stable.

#include <string>

#include <json.hpp>

namespace movable {

using Json = nlohmann::json;

std::string canonical_dump(const Json& value);

// Fixed six-decimal rendering used for every real in canonical output.
std::string format_real(double value);

}  // namespace movable

#include "movable/canonical_json.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "movable/error.hpp"

namespace movable {

std::string format_real(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::invalid_value, "non-finite real in canonical output");
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 6);
  if (ec != std::errc{}) throw Error(ErrorCode::invalid_value, "real out of printable range");
  std::string text(buf.data(), end);
  if (text == "-0.000000") text.erase(0, 1);
  return text;
}

namespace {

void dump_into(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(item, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ',';
        dump_into(value[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_real(value.get<double>());
      break;
    default:
      // Strings keep UTF-8 as is; only the mandatory escapes are applied.
      out += value.dump(-1, ' ', false, Json::error_handler_t::strict);
      break;
  }
}

}  // namespace

std::string canonical_dump(const Json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

}  // namespace movable

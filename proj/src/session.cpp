#include "movable/session.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "movable/canonical_json.hpp"
#include "movable/persistence.hpp"

namespace movable {

namespace {

constexpr std::string_view kSpaces = " \t\r";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kSpaces);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpaces);
  return s.substr(first, last - first + 1);
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  const auto end = rest.find_first_of(kSpaces);
  const std::string_view token = rest.substr(0, end);
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return token;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse, what); }

double coordinate(std::string_view token) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
    bad("invalid coordinate '" + std::string(token) + "'");
  }
  if (std::abs(v) > kMaxCoordinate) bad("coordinate out of range '" + std::string(token) + "'");
  return v;
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace

SessionMessage parse_message(std::string_view line) {
  std::string_view rest = line;
  const std::string_view verb = next_token(rest);
  if (verb.empty()) bad("empty message");

  auto arguments = [&](std::size_t count) {
    std::vector<std::string_view> args;
    for (std::size_t i = 0; i < count; ++i) {
      const auto token = next_token(rest);
      if (token.empty()) bad("'" + std::string(verb) + "' expects " + std::to_string(count) + " argument(s)");
      args.push_back(token);
    }
    if (!trim(rest).empty()) bad("unexpected trailing field '" + std::string(trim(rest)) + "'");
    return args;
  };

  if (verb == "press") {
    const auto args = arguments(3);
    Button button;
    if (args[2] == "left") {
      button = Button::left;
    } else if (args[2] == "right") {
      button = Button::right;
    } else {
      bad("button must be left or right");
    }
    return PointerEvent{PointerEvent::Kind::press, {coordinate(args[0]), coordinate(args[1])}, button};
  }
  if (verb == "move") {
    const auto args = arguments(2);
    return PointerEvent{PointerEvent::Kind::move, {coordinate(args[0]), coordinate(args[1])}, Button::left};
  }
  if (verb == "release") {
    arguments(0);
    return PointerEvent{PointerEvent::Kind::release, {}, Button::left};
  }

  Command command;
  if (verb == "restore_default") {
    command.kind = Command::Kind::restore_default;
    arguments(0);
  } else if (verb == "snapshot") {
    command.kind = Command::Kind::snapshot;
    arguments(0);
  } else if (verb == "render") {
    command.kind = Command::Kind::render;
    arguments(0);
  } else if (verb == "hide" || verb == "restore") {
    command.kind = verb == "hide" ? Command::Kind::hide : Command::Kind::restore;
    command.id = std::string(arguments(1)[0]);
  } else if (verb == "save" || verb == "load") {
    command.kind = verb == "save" ? Command::Kind::save : Command::Kind::load;
    command.path = std::string(arguments(1)[0]);
  } else if (verb == "set_style") {
    command.kind = Command::Kind::set_style;
    command.id = std::string(next_token(rest));
    command.key = std::string(next_token(rest));
    if (command.id.empty() || command.key.empty()) bad("'set_style' expects <id> <key> <value>");
    // The value is the rest of the line so that text may contain spaces.
    command.value = std::string(trim(rest));
    if (command.value.empty() && command.key != "text") bad("'set_style' expects a value");
  } else {
    bad("unknown message '" + std::string(verb) + "'");
  }
  return command;
}

std::string format_message(const SessionMessage& message) {
  if (const auto* ev = std::get_if<PointerEvent>(&message)) {
    const std::string xy = format_number(ev->position.x()) + " " + format_number(ev->position.y());
    switch (ev->kind) {
      case PointerEvent::Kind::press: return "press " + xy + (ev->button == Button::left ? " left" : " right");
      case PointerEvent::Kind::move: return "move " + xy;
      case PointerEvent::Kind::release: return "release";
    }
  }
  const auto& c = std::get<Command>(message);
  switch (c.kind) {
    case Command::Kind::restore_default: return "restore_default";
    case Command::Kind::hide: return "hide " + c.id;
    case Command::Kind::restore: return "restore " + c.id;
    case Command::Kind::set_style: return "set_style " + c.id + " " + c.key + " " + c.value;
    case Command::Kind::save: return "save " + c.path;
    case Command::Kind::load: return "load " + c.path;
    case Command::Kind::snapshot: return "snapshot";
    case Command::Kind::render: return "render";
  }
  return {};
}

SessionReply error_reply(ErrorCode code, std::string_view message) {
  return {SessionReply::Kind::error,
          canonical_dump({{"code", to_string(code)}, {"message", message}, {"type", "error"}})};
}

SessionReply Engine::render_reply() const {
  return {SessionReply::Kind::render, serialize_render_list(scene_.render_list())};
}

SessionReply Engine::handle_line(std::string_view line) {
  SessionMessage message;
  try {
    message = parse_message(line);
  } catch (const Error& e) {
    return error_reply(e.code(), e.what());
  }
  return handle(message);
}

SessionReply Engine::handle(const SessionMessage& message) {
  try {
    if (const auto* ev = std::get_if<PointerEvent>(&message)) {
      dispatch(scene_, grab_, *ev);
      return render_reply();
    }
    return handle_command(std::get<Command>(message));
  } catch (const Error& e) {
    return error_reply(e.code(), e.what());
  }
}

SessionReply Engine::handle_command(const Command& command) {
  switch (command.kind) {
    case Command::Kind::restore_default:
      persistence::restore_default(scene_);
      grab_.reset();
      break;
    case Command::Kind::hide:
      scene_.hide_object(command.id);
      if (grab_ && grab_->object == command.id) grab_.reset();
      break;
    case Command::Kind::restore:
      scene_.restore_object(command.id);
      break;
    case Command::Kind::set_style:
      scene_.set_style(command.id, command.key, command.value);
      break;
    case Command::Kind::save:
      persistence::save(scene_, command.path);
      break;
    case Command::Kind::load:
      persistence::load(scene_, command.path);
      grab_.reset();
      break;
    case Command::Kind::snapshot:
      return {SessionReply::Kind::snapshot,
              "{\"layout\":" + persistence::snapshot(scene_).text + ",\"type\":\"snapshot\"}"};
    case Command::Kind::render:
      break;
  }
  return render_reply();
}

bool is_ignorable_line(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

ReplayScript parse_script(std::string_view text) {
  ReplayScript script;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (is_ignorable_line(line)) continue;
    try {
      script.lines.push_back({number, parse_message(line)});
    } catch (const Error& e) {
      throw ScriptError(number, e.what());
    }
  }
  return script;
}

ReplayResult replay(const Scene& scene, const ReplayScript& script) {
  Engine engine(scene);
  ReplayResult result;
  for (const auto& [line, message] : script.lines) {
    SessionReply reply = engine.handle(message);
    if (reply.is_error()) result.errors.emplace_back(line, reply.text);
    result.replies.push_back(std::move(reply.text));
  }
  result.snapshot = persistence::snapshot(engine.scene());
  return result;
}

}  // namespace movable

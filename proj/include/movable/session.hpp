#pragma once

// Line protocol, script replay and the shipped demo scene.
//
// Inbound messages, one per line, whitespace separated:
//
//   press <x> <y> left|right     move <x> <y>     release
//   restore_default              hide <id>        restore <id>
//   set_style <id> <key> <value...>               snapshot
//   save <path>                  load <path>      render
//
// Every message gets exactly one reply line of canonical JSON: a render
// list ({"items":[...],"type":"render"}), a snapshot
// ({"layout":{...},"type":"snapshot"}) or an error
// ({"code":...,"message":...,"type":"error"}).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "movable/error.hpp"
#include "movable/interaction.hpp"
#include "movable/scene.hpp"

namespace movable {

struct Command {
  enum class Kind { restore_default, hide, restore, set_style, save, load, snapshot, render };

  Kind kind = Kind::render;
  std::string id;     // hide, restore, set_style
  std::string key;    // set_style
  std::string value;  // set_style
  std::string path;   // save, load

  friend bool operator==(const Command&, const Command&) = default;
};

using SessionMessage = std::variant<PointerEvent, Command>;

// Pointer coordinates beyond this magnitude are rejected.
inline constexpr double kMaxCoordinate = 1e9;

// Throws Error(parse) on malformed input.
SessionMessage parse_message(std::string_view line);
std::string format_message(const SessionMessage& message);

struct SessionReply {
  enum class Kind { render, snapshot, error };

  Kind kind = Kind::render;
  std::string text;  // one line, no trailing newline

  bool is_error() const noexcept { return kind == Kind::error; }
};

SessionReply error_reply(ErrorCode code, std::string_view message);

class Engine {
 public:
  explicit Engine(Scene scene) : scene_(std::move(scene)) {}

  // Parses and handles one line; malformed lines produce an error reply.
  SessionReply handle_line(std::string_view line);
  SessionReply handle(const SessionMessage& message);

  const Scene& scene() const noexcept { return scene_; }
  const std::optional<GrabState>& grab() const noexcept { return grab_; }
  SessionReply render_reply() const;

 private:
  SessionReply handle_command(const Command& command);

  Scene scene_;
  std::optional<GrabState> grab_;
};

// True for lines a script or stream skips: blank or starting with '#'.
bool is_ignorable_line(std::string_view line);

struct ScriptLine {
  std::size_t line = 0;  // 1-based position in the source text
  SessionMessage message;
};

struct ReplayScript {
  std::vector<ScriptLine> lines;
};

class ScriptError : public Error {
 public:
  ScriptError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Throws ScriptError naming the first bad line.
ReplayScript parse_script(std::string_view text);

struct ReplayResult {
  LayoutSnapshot snapshot;
  std::vector<std::string> replies;  // one per script message
  std::vector<std::pair<std::size_t, std::string>> errors;  // (line, error reply)
};

// Folds the script over a copy of `scene`. Error replies are recorded and
// replay continues.
ReplayResult replay(const Scene& scene, const ReplayScript& script);

// The form demo: a title and the five personal-data fields, each a
// labeled field whose related group hangs off the title.
Scene build_personal_data_scene();

// Scene registry used by the CLI; currently only "personal-data".
std::vector<std::string> scene_names();
// Throws Error(unknown_id) for an unregistered name.
Scene build_scene(std::string_view name);

}  // namespace movable

#pragma once

// Grab state machine: pointer press / move / release become forward
// movement, anchored resizing, rotation, and group movement. Every move
// event is applied to the scene immediately and literally; nothing is
// snapped, smoothed or animated.
//
// Left press on a move node moves, on a resize node resizes through that
// handle. Right press anywhere on an object rotates it about its centre.

#include <map>
#include <optional>

#include "movable/scene.hpp"

namespace movable {

enum class Button { left, right };

struct PointerEvent {
  enum class Kind { press, move, release };

  Kind kind = Kind::move;
  Point position;
  Button button = Button::left;  // press only
};

struct GrabMode {
  enum class Kind { move, resize, rotate };

  Kind kind = Kind::move;
  HandleId handle;  // resize only

  friend bool operator==(const GrabMode& a, const GrabMode& b) {
    return a.kind == b.kind && (a.kind != Kind::resize || a.handle == b.handle);
  }
};

// Exists only between press and release.
struct GrabState {
  ObjectId object;
  std::size_t node = 0;
  GrabMode mode;
  Point press_world;
  Point press_offset;  // object translation - press point
  double start_angle = 0.0;
  Transform start_transform;
  SizeParams start_size;
  // Visible synchronous-group peers with their translation - press point.
  std::map<ObjectId, Point> peer_offsets;
};

// Hit-tests and starts a grab; raises the object first when the scene says
// so. No hit means no grab.
std::optional<GrabState> on_press(Scene& scene, Point p, Button button);

void apply_move(Scene& scene, const GrabState& grab, Point p);
void apply_resize(Scene& scene, const GrabState& grab, Point p);
void apply_rotate(Scene& scene, const GrabState& grab, Point p);

// Repositions the visible dependents of every related group mastered by
// `master` at master translation + stored offset.
void apply_related(Scene& scene, const ObjectId& master);

// Routes one pointer event through the grab state. Moves without a grab
// and releases without a grab are no-ops.
void dispatch(Scene& scene, std::optional<GrabState>& grab, const PointerEvent& event);

}  // namespace movable

#include "movable/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace movable {

namespace {

// Placement for a resized object whose new local frame is the start frame
// shifted by `shift` and whose pivot is now `new_pivot`: every local point
// keeps its world position.
Transform rebase(const Transform& start, Point shift, Point new_pivot) {
  Transform t = start;
  t.pivot = new_pivot;
  if (start.angle == 0.0) {
    t.translation = start.translation + shift;
  } else {
    t.translation = start.translation + start.pivot - new_pivot + rotate(shift - start.pivot + new_pivot, start.angle);
  }
  return t;
}

// Related groups react to objects whose translation changed through the
// pointer: a moved master carries its dependents, a moved dependent is
// re-anchored to its master.
void settle_related(Scene& scene, const std::set<ObjectId>& moved) {
  const auto& groups = scene.groups();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto* related = std::get_if<RelatedGroup>(&groups[g]);
    if (!related) continue;
    const MovableObject* master = scene.find(related->master);
    const bool master_moved = moved.contains(related->master);
    const auto offsets = related->offsets;
    for (const auto& [dependent, offset] : offsets) {
      if (moved.contains(dependent)) {
        const Point at = scene.visible_object(dependent).transform().translation;
        scene.set_related_offset(g, dependent, at - master->transform().translation);
      } else if (master_moved && scene.is_visible(dependent)) {
        scene.visible_object(dependent).set_translation(master->transform().translation + offset);
      }
    }
  }
}

GrabMode mode_for(const NodeAction& action, Button button) {
  if (button == Button::right) return {GrabMode::Kind::rotate, {}};
  if (action.is_move()) return {GrabMode::Kind::move, {}};
  return {GrabMode::Kind::resize, action.handle};
}

SizeParams resized_rect(const RectSize& start, HandleId handle, Point local, Point& shift) {
  using K = HandleId::Kind;
  const bool moves_left = handle.kind == K::left || handle.kind == K::corner_nw || handle.kind == K::corner_sw;
  const bool moves_right = handle.kind == K::right || handle.kind == K::corner_ne || handle.kind == K::corner_se;
  const bool moves_top = handle.kind == K::top || handle.kind == K::corner_nw || handle.kind == K::corner_ne;
  const bool moves_bottom = handle.kind == K::bottom || handle.kind == K::corner_sw || handle.kind == K::corner_se;

  RectSize size = start;
  double left = 0.0;
  double top = 0.0;
  if (moves_left) {
    size.width = std::max(start.width - local.x(), kMinRectSide);
    left = start.width - size.width;
  } else if (moves_right) {
    size.width = std::max(local.x(), kMinRectSide);
  }
  if (moves_top) {
    size.height = std::max(start.height - local.y(), kMinRectSide);
    top = start.height - size.height;
  } else if (moves_bottom) {
    size.height = std::max(local.y(), kMinRectSide);
  }
  shift = Point(left, top);
  return size;
}

std::optional<PolygonSize> reshaped_polygon(const PolygonSize& start, HandleId handle, Point local, Point press_local) {
  PolygonSize size = start;
  auto& v = size.vertices;
  const std::size_t n = v.size();
  if (handle.kind == HandleId::Kind::vertex && handle.index < n) {
    v[handle.index] = local;
  } else if (handle.kind == HandleId::Kind::edge && handle.index < n) {
    // The edge slides along its outward normal, staying parallel.
    const Point a = v[handle.index];
    const Point b = v[(handle.index + 1) % n];
    const Point e = b - a;
    const Point outward = (1.0 / norm(e)) * Point(e.y(), -e.x());
    const Point step = dot(local - press_local, outward) * outward;
    v[handle.index] = a + step;
    v[(handle.index + 1) % n] = b + step;
  } else {
    return std::nullopt;
  }
  if (!size_is_valid(ObjectKind::polygon, size)) return std::nullopt;
  return size;
}

}  // namespace

std::optional<GrabState> on_press(Scene& scene, Point p, Button button) {
  const auto hit = scene.hit_test(p);
  if (!hit) return std::nullopt;
  if (scene.options().raise_on_grab) scene.bring_to_top(hit->object);
  const MovableObject& object = scene.visible_object(hit->object);

  GrabState grab;
  grab.object = hit->object;
  grab.node = hit->node;
  grab.mode = mode_for(object.cover().node(hit->node).action, button);
  grab.press_world = p;
  grab.press_offset = object.transform().translation - p;
  grab.start_angle = object.transform().angle;
  grab.start_transform = object.transform();
  grab.start_size = object.size();
  if (grab.mode.kind == GrabMode::Kind::move) {
    for (const auto& group : scene.groups()) {
      const auto* sync = std::get_if<SynchronousGroup>(&group);
      if (!sync || !sync->members.contains(grab.object)) continue;
      for (const auto& peer : sync->members) {
        if (peer != grab.object && scene.is_visible(peer)) {
          grab.peer_offsets[peer] = scene.visible_object(peer).transform().translation - p;
        }
      }
    }
  }
  return grab;
}

void apply_move(Scene& scene, const GrabState& grab, Point p) {
  std::set<ObjectId> moved{grab.object};
  scene.visible_object(grab.object).set_translation(p + grab.press_offset);
  for (const auto& [peer, offset] : grab.peer_offsets) {
    if (!scene.is_visible(peer)) continue;
    scene.visible_object(peer).set_translation(p + offset);
    moved.insert(peer);
  }
  settle_related(scene, moved);
}

void apply_resize(Scene& scene, const GrabState& grab, Point p) {
  MovableObject& object = scene.visible_object(grab.object);
  const Transform& start = grab.start_transform;
  const Point before = object.transform().translation;
  const Point local = to_local(start, p);
  const HandleId handle = grab.mode.handle;

  if (const auto* rect = std::get_if<RectSize>(&grab.start_size)) {
    Point shift;
    const SizeParams size = resized_rect(*rect, handle, local, shift);
    object.set_size(size);
    object.set_translation(rebase(start, shift, object.transform().pivot).translation);
  } else if (std::holds_alternative<CircleSize>(grab.start_size)) {
    // The centre is the local origin, so pivot and translation stay put.
    const double radius = std::max(distance(p, to_world(start, {})), kMinCircleRadius);
    object.set_size(CircleSize{radius});
  } else {
    const auto reshaped = reshaped_polygon(std::get<PolygonSize>(grab.start_size), handle, local,
                                           to_local(start, grab.press_world));
    // An invalid shape leaves the last valid one in place.
    if (!reshaped) return;
    object.set_size(*reshaped);
    object.set_translation(rebase(start, {}, object.transform().pivot).translation);
  }
  if (object.transform().translation != before) settle_related(scene, {grab.object});
}

void apply_rotate(Scene& scene, const GrabState& grab, Point p) {
  MovableObject& object = scene.visible_object(grab.object);
  const Point center = to_world(grab.start_transform, grab.start_transform.pivot);
  const Point now = p - center;
  if (now.x() == 0.0 && now.y() == 0.0) return;
  const Point then = grab.press_world - center;
  object.set_angle(grab.start_angle + std::atan2(now.y(), now.x()) - std::atan2(then.y(), then.x()));
}

void apply_related(Scene& scene, const ObjectId& master) {
  for (const auto& group : scene.groups()) {
    const auto* related = std::get_if<RelatedGroup>(&group);
    if (!related || related->master != master) continue;
    const Point at = scene.find(master)->transform().translation;
    for (const auto& [dependent, offset] : related->offsets) {
      if (scene.is_visible(dependent)) scene.visible_object(dependent).set_translation(at + offset);
    }
  }
}

void dispatch(Scene& scene, std::optional<GrabState>& grab, const PointerEvent& event) {
  switch (event.kind) {
    case PointerEvent::Kind::press:
      grab = on_press(scene, event.position, event.button);
      break;
    case PointerEvent::Kind::move:
      if (!grab) return;
      switch (grab->mode.kind) {
        case GrabMode::Kind::move: apply_move(scene, *grab, event.position); break;
        case GrabMode::Kind::resize: apply_resize(scene, *grab, event.position); break;
        case GrabMode::Kind::rotate: apply_rotate(scene, *grab, event.position); break;
      }
      break;
    case PointerEvent::Kind::release:
      grab.reset();
      break;
  }
}

}  // namespace movable

#pragma once

// Random scenes and random user sessions for property tests.

#include <string>
#include <vector>

#include "movable/error.hpp"
#include "movable/interaction.hpp"
#include "sampling.hpp"

namespace movable::fuzz {

inline Scene random_scene(sampling::Rng& rng, int count = 6) {
  std::vector<MovableObject> objects;
  for (int i = 0; i < count; ++i) {
    const std::string id = "o" + std::to_string(i);
    const Point at(sampling::uniform(rng, 0, 700), sampling::uniform(rng, 0, 500));
    const double angle = (rng() % 3 == 0) ? sampling::uniform(rng, 0, kTwoPi) : 0.0;
    switch (rng() % 4) {
      case 0:
        objects.emplace_back(id, ObjectKind::rect, at,
                             RectSize{sampling::uniform(rng, 20, 200), sampling::uniform(rng, 20, 200)}, StyleParams{},
                             angle);
        break;
      case 1:
        objects.emplace_back(id, ObjectKind::circle, at, CircleSize{sampling::uniform(rng, 10, 90)});
        break;
      case 2:
        objects.emplace_back(id, ObjectKind::polygon, at,
                             PolygonSize{sampling::random_convex_polygon(rng, 20, 80)}, StyleParams{},
                             angle);
        break;
      default: {
        StyleParams style;
        style.text = "field " + std::to_string(i);
        objects.emplace_back(id, ObjectKind::labeled_field, at,
                             RectSize{sampling::uniform(rng, 40, 300), sampling::uniform(rng, 20, 90)}, style);
      }
    }
  }
  std::vector<GroupSpec> groups;
  if (count >= 4) {
    groups.push_back(SynchronousGroup{{"o0", "o1"}});
    groups.push_back(RelatedGroup{"o2", {{"o3", {0, -20}}}});
  }
  return Scene(std::move(objects), std::move(groups));
}

inline Point random_point(sampling::Rng& rng) {
  return {sampling::uniform(rng, -100, 900), sampling::uniform(rng, -100, 700)};
}

// One random user action; rejected commands are ignored as a user would.
inline void random_action(Scene& s, sampling::Rng& rng) {
  const auto ids = s.all_ids();
  auto it = ids.begin();
  std::advance(it, rng() % ids.size());
  const std::string id = *it;
  try {
    switch (rng() % 6) {
      case 0:
        s.hide_object(id);
        break;
      case 1:
        s.restore_object(id);
        break;
      case 2:
        s.set_style(id, "font_size", std::to_string(4 + rng() % 40) + ".5");
        break;
      case 3:
        s.set_style(id, "fill_color", std::to_string(rng() % 256) + ",7," + std::to_string(rng() % 256));
        break;
      default: {
        std::optional<GrabState> grab;
        Point press = random_point(rng);
        if (s.is_visible(id) && rng() % 2) press = s.find(id)->world_center();
        dispatch(s, grab, {PointerEvent::Kind::press, press, rng() % 4 == 0 ? Button::right : Button::left});
        for (int k = 0; k < 3; ++k) dispatch(s, grab, {PointerEvent::Kind::move, random_point(rng)});
        dispatch(s, grab, {PointerEvent::Kind::release, {}});
      }
    }
  } catch (const Error&) {
  }
}

}  // namespace movable::fuzz

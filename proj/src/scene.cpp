#include "movable/scene.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <utility>

#include "movable/canonical_json.hpp"
#include "movable/error.hpp"
#include "movable/persistence.hpp"

namespace movable {

std::string_view to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::rect: return "rect";
    case ObjectKind::circle: return "circle";
    case ObjectKind::polygon: return "polygon";
    case ObjectKind::labeled_field: return "labeled-field";
  }
  return "unknown";
}

std::optional<ObjectKind> parse_object_kind(std::string_view text) {
  for (auto kind : {ObjectKind::rect, ObjectKind::circle, ObjectKind::polygon, ObjectKind::labeled_field}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

void validate(const StyleParams& style) {
  if (!std::isfinite(style.font_size) || style.font_size < kMinFontSize) {
    throw Error(ErrorCode::invalid_value, "font_size must be at least 4");
  }
}

double circumradius(std::span<const Point> vertices) {
  const Point c = area_centroid(vertices);
  double r = 0.0;
  for (const Point& v : vertices) r = std::max(r, distance(v, c));
  return r;
}

namespace {

bool is_rect_like(ObjectKind kind) { return kind == ObjectKind::rect || kind == ObjectKind::labeled_field; }

// Smallest distance from the centroid to an edge line.
double inradius(std::span<const Point> vertices) {
  const Point c = area_centroid(vertices);
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point e = vertices[(i + 1) % vertices.size()] - vertices[i];
    r = std::min(r, cross(e, c - vertices[i]) / norm(e));
  }
  return r;
}

// Strict convexity that survives six-decimal persistence: edges of at
// least a pixel and no turn flatter than kMinTurnSine.
bool well_conditioned(std::span<const Point> v) {
  if (!is_strictly_convex_ccw(v)) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point e0 = v[(i + 1) % v.size()] - v[i];
    const Point e1 = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
    if (norm(e0) < kMinPolygonEdge) return false;
    if (cross(e0, e1) < kMinTurnSine * norm(e0) * norm(e1)) return false;
  }
  return true;
}

}  // namespace

bool size_is_valid(ObjectKind kind, const SizeParams& size) {
  if (is_rect_like(kind)) {
    const auto* r = std::get_if<RectSize>(&size);
    return r && std::isfinite(r->width) && std::isfinite(r->height) && r->width >= kMinRectSide &&
           r->height >= kMinRectSide;
  }
  if (kind == ObjectKind::circle) {
    const auto* c = std::get_if<CircleSize>(&size);
    return c && std::isfinite(c->radius) && c->radius >= kMinCircleRadius;
  }
  const auto* p = std::get_if<PolygonSize>(&size);
  return p && well_conditioned(p->vertices) && circumradius(p->vertices) >= kMinPolygonCircumradius;
}

Point local_center(const SizeParams& size) {
  if (const auto* r = std::get_if<RectSize>(&size)) return {r->width / 2.0, r->height / 2.0};
  if (std::holds_alternative<CircleSize>(size)) return {};
  return area_centroid(std::get<PolygonSize>(size).vertices);
}

MovableObject::MovableObject(ObjectId id, ObjectKind kind, Point position, SizeParams size, StyleParams style,
                             double angle, double border)
    : id_(std::move(id)),
      kind_(kind),
      size_(std::move(size)),
      style_(std::move(style)),
      border_(border),
      cover_(checked_cover()) {
  transform_ = Transform(position, angle, local_center(size_));
}

Cover MovableObject::checked_cover() const {
  if (id_.empty()) throw Error(ErrorCode::invalid_value, "object id must not be empty");
  if (!size_is_valid(kind_, size_)) {
    throw Error(ErrorCode::invalid_value, "invalid or undersized geometry for object '" + id_ + "'");
  }
  if (!(border_ > 0.0) || !std::isfinite(border_)) throw Error(ErrorCode::invalid_value, "border must be positive");
  validate(style_);
  return build_cover();
}

double MovableObject::effective_border() const {
  if (const auto* r = std::get_if<RectSize>(&size_)) return std::min(border_, std::min(r->width, r->height) / 4.0);
  if (const auto* c = std::get_if<CircleSize>(&size_)) return std::min(border_, c->radius / 2.0);
  return std::min(border_, inradius(std::get<PolygonSize>(size_).vertices) / 2.0);
}

Cover MovableObject::build_cover() const {
  const double b = effective_border();
  if (const auto* r = std::get_if<RectSize>(&size_)) return rect_cover(r->width, r->height, b);
  if (const auto* c = std::get_if<CircleSize>(&size_)) return circle_cover(c->radius, b);
  return polygon_cover(std::get<PolygonSize>(size_).vertices, b);
}

void MovableObject::set_size(SizeParams size) {
  if (!size_is_valid(kind_, size)) {
    throw Error(ErrorCode::invalid_value, "invalid or undersized geometry for object '" + id_ + "'");
  }
  std::swap(size_, size);
  try {
    cover_ = build_cover();
  } catch (...) {
    std::swap(size_, size);
    throw;
  }
  transform_.pivot = local_center(size_);
}

void MovableObject::set_style(StyleParams style) {
  validate(style);
  style_ = std::move(style);
}

std::set<ObjectId> group_members(const GroupSpec& group) {
  if (const auto* sync = std::get_if<SynchronousGroup>(&group)) return sync->members;
  const auto& related = std::get<RelatedGroup>(group);
  std::set<ObjectId> members{related.master};
  for (const auto& [id, offset] : related.offsets) members.insert(id);
  return members;
}

Scene::Scene(std::vector<MovableObject> objects, std::vector<GroupSpec> groups, SceneOptions options)
    : options_(options) {
  validate_state(objects, {}, groups);
  visible_ = std::move(objects);
  groups_ = std::move(groups);
  default_layout_ = persistence::snapshot(*this);
}

void Scene::validate_state(const std::vector<MovableObject>& visible, const ParallelWorld& parallel,
                           const std::vector<GroupSpec>& groups) {
  std::set<ObjectId, std::less<>> ids;
  for (const auto& o : visible) {
    if (!ids.insert(o.id()).second) throw Error(ErrorCode::invalid_value, "duplicate object id '" + o.id() + "'");
  }
  for (const auto& [id, o] : parallel) {
    if (id != o.id()) throw Error(ErrorCode::malformed, "parallel-world key does not match object id");
    if (!ids.insert(id).second) throw Error(ErrorCode::invalid_value, "duplicate object id '" + id + "'");
  }
  for (const auto& group : groups) {
    if (const auto* sync = std::get_if<SynchronousGroup>(&group); sync && sync->members.size() < 2) {
      throw Error(ErrorCode::invalid_value, "a synchronous group needs at least two members");
    }
    if (const auto* related = std::get_if<RelatedGroup>(&group)) {
      if (related->offsets.empty()) throw Error(ErrorCode::invalid_value, "a related group needs a dependent");
      if (related->offsets.contains(related->master)) {
        throw Error(ErrorCode::invalid_value, "a related master cannot depend on itself");
      }
    }
    for (const auto& id : group_members(group)) {
      if (!ids.contains(id)) throw Error(ErrorCode::unknown_id, "group member '" + id + "' does not exist");
    }
  }
}

bool Scene::is_visible(std::string_view id) const {
  return std::any_of(visible_.begin(), visible_.end(), [&](const auto& o) { return o.id() == id; });
}

bool Scene::is_hidden(std::string_view id) const { return parallel_.find(id) != parallel_.end(); }

std::set<ObjectId> Scene::all_ids() const {
  std::set<ObjectId> ids;
  for (const auto& o : visible_) ids.insert(o.id());
  for (const auto& [id, o] : parallel_) ids.insert(id);
  return ids;
}

const MovableObject* Scene::find(std::string_view id) const {
  for (const auto& o : visible_) {
    if (o.id() == id) return &o;
  }
  if (auto it = parallel_.find(id); it != parallel_.end()) return &it->second;
  return nullptr;
}

MovableObject* Scene::find_mutable(std::string_view id) {
  return const_cast<MovableObject*>(std::as_const(*this).find(id));
}

std::size_t Scene::z_index(std::string_view id) const {
  for (std::size_t i = 0; i < visible_.size(); ++i) {
    if (visible_[i].id() == id) return i;
  }
  if (is_hidden(id)) throw Error(ErrorCode::wrong_state, "object '" + std::string(id) + "' is hidden");
  throw Error(ErrorCode::unknown_id, "unknown object '" + std::string(id) + "'");
}

const MovableObject& Scene::visible_object(std::string_view id) const { return visible_[z_index(id)]; }

MovableObject& Scene::visible_object(std::string_view id) { return visible_[z_index(id)]; }

std::optional<Hit> Scene::hit_test(Point world) const {
  for (auto it = visible_.rbegin(); it != visible_.rend(); ++it) {
    if (auto node = cover_hit(it->cover(), to_local(it->transform(), world))) return Hit{it->id(), *node};
  }
  return std::nullopt;
}

void Scene::bring_to_top(std::string_view id) {
  const auto i = static_cast<std::ptrdiff_t>(z_index(id));
  std::rotate(visible_.begin() + i, visible_.begin() + i + 1, visible_.end());
}

void Scene::hide_object(std::string_view id) {
  const auto i = static_cast<std::ptrdiff_t>(z_index(id));
  MovableObject object = std::move(visible_[static_cast<std::size_t>(i)]);
  visible_.erase(visible_.begin() + i);
  const ObjectId key = object.id();
  parallel_.emplace(key, std::move(object));
}

void Scene::restore_object(std::string_view id) {
  auto it = parallel_.find(id);
  if (it == parallel_.end()) {
    if (is_visible(id)) throw Error(ErrorCode::wrong_state, "object '" + std::string(id) + "' is not hidden");
    throw Error(ErrorCode::unknown_id, "unknown object '" + std::string(id) + "'");
  }
  visible_.push_back(std::move(it->second));
  parallel_.erase(it);
}

namespace {

Rgb parse_color(std::string_view value) {
  auto fail = [&] { return Error(ErrorCode::invalid_value, "invalid colour '" + std::string(value) + "'"); };
  if (value.size() == 7 && value[0] == '#') {
    std::uint8_t channels[3];
    for (int c = 0; c < 3; ++c) {
      const char* first = value.data() + 1 + 2 * c;
      unsigned parsed = 0;
      auto [ptr, ec] = std::from_chars(first, first + 2, parsed, 16);
      if (ec != std::errc{} || ptr != first + 2) throw fail();
      channels[c] = static_cast<std::uint8_t>(parsed);
    }
    return {channels[0], channels[1], channels[2]};
  }
  std::uint8_t channels[3];
  const char* p = value.data();
  const char* end = value.data() + value.size();
  for (int c = 0; c < 3; ++c) {
    unsigned parsed = 0;
    auto [ptr, ec] = std::from_chars(p, end, parsed);
    if (ec != std::errc{} || parsed > 255) throw fail();
    channels[c] = static_cast<std::uint8_t>(parsed);
    p = ptr;
    if (c < 2) {
      if (p == end || *p != ',') throw fail();
      ++p;
    }
  }
  if (p != end) throw fail();
  return {channels[0], channels[1], channels[2]};
}

double parse_font_size(std::string_view value) {
  double parsed = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::invalid_value, "invalid font size '" + std::string(value) + "'");
  }
  return parsed;
}

}  // namespace

void Scene::set_style(std::string_view id, std::string_view key, std::string_view value) {
  MovableObject* object = find_mutable(id);
  if (!object) throw Error(ErrorCode::unknown_id, "unknown object '" + std::string(id) + "'");
  StyleParams style = object->style();
  if (key == "fill_color") {
    style.fill_color = parse_color(value);
  } else if (key == "text_color") {
    style.text_color = parse_color(value);
  } else if (key == "font_size") {
    style.font_size = parse_font_size(value);
  } else if (key == "text") {
    style.text = std::string(value);
  } else {
    throw Error(ErrorCode::invalid_value, "unknown style key '" + std::string(key) + "'");
  }
  object->set_style(std::move(style));
}

std::vector<RenderItem> Scene::render_list() const {
  std::vector<RenderItem> items;
  items.reserve(visible_.size());
  for (std::size_t z = 0; z < visible_.size(); ++z) {
    const MovableObject& o = visible_[z];
    RenderItem item{o.id(), static_cast<std::int64_t>(z), o.kind(), {}, o.style()};
    const Transform& t = o.transform();
    if (const auto* r = std::get_if<RectSize>(&o.size())) {
      item.outline = std::vector<Point>{to_world(t, {0.0, 0.0}), to_world(t, {r->width, 0.0}),
                                        to_world(t, {r->width, r->height}), to_world(t, {0.0, r->height})};
    } else if (const auto* c = std::get_if<CircleSize>(&o.size())) {
      item.outline = CircleOutline{to_world(t, {}), c->radius};
    } else {
      std::vector<Point> points;
      for (const Point& v : std::get<PolygonSize>(o.size()).vertices) points.push_back(to_world(t, v));
      item.outline = std::move(points);
    }
    items.push_back(std::move(item));
  }
  return items;
}

namespace {

Json point_json(Point p) { return Json::array({p.x(), p.y()}); }

Json color_json(Rgb c) { return Json::array({c.r, c.g, c.b}); }

}  // namespace

std::string serialize_render_list(const std::vector<RenderItem>& items) {
  Json list = Json::array();
  for (const auto& item : items) {
    Json outline;
    if (const auto* points = std::get_if<std::vector<Point>>(&item.outline)) {
      outline["points"] = Json::array();
      for (const Point& p : *points) outline["points"].push_back(point_json(p));
    } else {
      const auto& circle = std::get<CircleOutline>(item.outline);
      outline["center"] = point_json(circle.center);
      outline["radius"] = circle.radius;
    }
    list.push_back({{"id", item.id},
                    {"kind", to_string(item.kind)},
                    {"outline", outline},
                    {"style",
                     {{"fill_color", color_json(item.style.fill_color)},
                      {"font_size", item.style.font_size},
                      {"text", item.style.text},
                      {"text_color", color_json(item.style.text_color)}}},
                    {"z", item.z}});
  }
  return canonical_dump({{"items", list}, {"type", "render"}});
}

void Scene::set_related_offset(std::size_t group_index, const ObjectId& dependent, Point offset) {
  auto* related = std::get_if<RelatedGroup>(&groups_.at(group_index));
  if (!related || !related->offsets.contains(dependent)) {
    throw Error(ErrorCode::invalid_argument, "not a dependent of that related group");
  }
  related->offsets[dependent] = offset;
}

void Scene::replace_state(std::vector<MovableObject> visible, ParallelWorld parallel, std::vector<GroupSpec> groups) {
  validate_state(visible, parallel, groups);
  visible_ = std::move(visible);
  parallel_ = std::move(parallel);
  groups_ = std::move(groups);
}

}  // namespace movable

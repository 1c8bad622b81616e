#pragma once

// The world model: z-ordered movable objects, the parallel world that keeps
// hidden objects with their full state, movement groups, and render lists.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "movable/cover.hpp"
#include "movable/geometry.hpp"

namespace movable {

using ObjectId = std::string;

enum class ObjectKind { rect, circle, polygon, labeled_field };

std::string_view to_string(ObjectKind kind);
std::optional<ObjectKind> parse_object_kind(std::string_view text);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr double kMinFontSize = 4.0;

struct StyleParams {
  Rgb fill_color{255, 255, 255};
  Rgb text_color{0, 0, 0};
  double font_size = 12.0;  // points
  std::string text;

  friend bool operator==(const StyleParams&, const StyleParams&) = default;
};

// Throws Error(invalid_value) when font_size is below kMinFontSize or not finite.
void validate(const StyleParams& style);

// Per-kind minimums; without them objects could shrink past grabbability.
inline constexpr double kMinRectSide = 10.0;
inline constexpr double kMinCircleRadius = 5.0;
inline constexpr double kMinPolygonCircumradius = 5.0;
inline constexpr double kMinPolygonEdge = 1.0;
inline constexpr double kMinTurnSine = 1e-3;

struct RectSize {
  double width = 0.0;
  double height = 0.0;
  friend bool operator==(const RectSize&, const RectSize&) = default;
};

struct CircleSize {
  double radius = 0.0;
  friend bool operator==(const CircleSize&, const CircleSize&) = default;
};

struct PolygonSize {
  std::vector<Point> vertices;  // local, strictly convex, counterclockwise
  friend bool operator==(const PolygonSize&, const PolygonSize&) = default;
};

using SizeParams = std::variant<RectSize, CircleSize, PolygonSize>;

// Largest distance from the area centroid to a vertex.
double circumradius(std::span<const Point> vertices);

// Whether `size` is a legal size for `kind`, minimums included.
bool size_is_valid(ObjectKind kind, const SizeParams& size);

// Local rotation centre of an object of this size: rectangle centre, circle
// centre (the local origin), or polygon area centroid.
Point local_center(const SizeParams& size);

class MovableObject {
 public:
  // `position` is the world location of the local origin (top-left corner
  // for rectangles, centre for circles). Throws on invalid size or style.
  MovableObject(ObjectId id, ObjectKind kind, Point position, SizeParams size,
                StyleParams style = {}, double angle = 0.0, double border = kDefaultBorder);

  const ObjectId& id() const noexcept { return id_; }
  ObjectKind kind() const noexcept { return kind_; }
  const Transform& transform() const noexcept { return transform_; }
  const SizeParams& size() const noexcept { return size_; }
  const StyleParams& style() const noexcept { return style_; }
  const Cover& cover() const noexcept { return cover_; }
  double border() const noexcept { return border_; }

  // Grab-band thickness actually used by the cover; shrinks with the object
  // so the interior move node never disappears.
  double effective_border() const;

  Point world_center() const { return to_world(transform_, transform_.pivot); }

  void set_translation(Point translation) { transform_.translation = translation; }
  void set_angle(double angle) { transform_.angle = normalize_angle(angle); }

  // Replaces size and rebuilds the cover. The pivot follows the new local
  // centre; the translation is left to the caller. Throws on invalid size.
  void set_size(SizeParams size);

  // Validates, then replaces the whole style.
  void set_style(StyleParams style);

  friend bool operator==(const MovableObject& a, const MovableObject& b) {
    return a.id_ == b.id_ && a.kind_ == b.kind_ && a.transform_ == b.transform_ && a.size_ == b.size_ &&
           a.style_ == b.style_ && a.border_ == b.border_;
  }

 private:
  Cover build_cover() const;
  Cover checked_cover() const;

  ObjectId id_;
  ObjectKind kind_;
  Transform transform_;
  SizeParams size_;
  StyleParams style_;
  double border_;
  Cover cover_;
};

struct SynchronousGroup {
  std::set<ObjectId> members;
  friend bool operator==(const SynchronousGroup&, const SynchronousGroup&) = default;
};

// Dependents sit at master translation + offset.
struct RelatedGroup {
  ObjectId master;
  std::map<ObjectId, Point> offsets;
  friend bool operator==(const RelatedGroup&, const RelatedGroup&) = default;
};

using GroupSpec = std::variant<SynchronousGroup, RelatedGroup>;

using ParallelWorld = std::map<ObjectId, MovableObject, std::less<>>;

std::set<ObjectId> group_members(const GroupSpec& group);

struct Hit {
  ObjectId object;
  std::size_t node = 0;
  friend bool operator==(const Hit&, const Hit&) = default;
};

struct CircleOutline {
  Point center;
  double radius = 0.0;
};

struct RenderItem {
  ObjectId id;
  std::int64_t z = 0;
  ObjectKind kind = ObjectKind::rect;
  // World-space polygon (rectangles, fields, polygons) or disc (circles).
  std::variant<std::vector<Point>, CircleOutline> outline;
  StyleParams style;
};

// One line of canonical JSON: {"items":[...],"type":"render"}.
std::string serialize_render_list(const std::vector<RenderItem>& items);

struct SceneOptions {
  // Pressing an object raises it to the top before dragging.
  bool raise_on_grab = true;
};

// A layout captured by persistence::snapshot; canonical JSON text.
struct LayoutSnapshot {
  std::string text;
  friend bool operator==(const LayoutSnapshot&, const LayoutSnapshot&) = default;
};

class Scene {
 public:
  Scene() : Scene(std::vector<MovableObject>{}) {}

  // `objects` become visible bottom to top. Ids must be unique and groups
  // must reference existing objects. The resulting layout is recorded as
  // the default view.
  explicit Scene(std::vector<MovableObject> objects, std::vector<GroupSpec> groups = {},
                 SceneOptions options = {});

  const std::vector<MovableObject>& visible() const noexcept { return visible_; }
  const ParallelWorld& parallel_world() const noexcept { return parallel_; }
  const std::vector<GroupSpec>& groups() const noexcept { return groups_; }
  const LayoutSnapshot& default_layout() const noexcept { return default_layout_; }
  const SceneOptions& options() const noexcept { return options_; }

  bool is_visible(std::string_view id) const;
  bool is_hidden(std::string_view id) const;
  bool contains(std::string_view id) const { return is_visible(id) || is_hidden(id); }
  std::set<ObjectId> all_ids() const;

  // Either side of the partition; nullptr when unknown.
  const MovableObject* find(std::string_view id) const;

  // Throws unknown_id / wrong_state unless `id` is visible.
  MovableObject& visible_object(std::string_view id);
  const MovableObject& visible_object(std::string_view id) const;
  std::size_t z_index(std::string_view id) const;

  // Topmost object whose cover contains p, with the node that was hit.
  std::optional<Hit> hit_test(Point world) const;

  void bring_to_top(std::string_view id);
  void hide_object(std::string_view id);
  void restore_object(std::string_view id);

  // key is fill_color | text_color | font_size | text. Colours accept
  // "r,g,b" or "#rrggbb". Throws and leaves the object untouched on error.
  void set_style(std::string_view id, std::string_view key, std::string_view value);

  std::vector<RenderItem> render_list() const;

  // Re-anchors one dependent of the related group at `group_index`.
  void set_related_offset(std::size_t group_index, const ObjectId& dependent, Point offset);

  // Wholesale replacement used by restore. Validates the partition and the
  // groups first; on error nothing changes.
  void replace_state(std::vector<MovableObject> visible, ParallelWorld parallel,
                     std::vector<GroupSpec> groups);

 private:
  MovableObject* find_mutable(std::string_view id);
  static void validate_state(const std::vector<MovableObject>& visible,
                             const ParallelWorld& parallel,
                             const std::vector<GroupSpec>& groups);

  std::vector<MovableObject> visible_;
  ParallelWorld parallel_;
  std::vector<GroupSpec> groups_;
  SceneOptions options_;
  LayoutSnapshot default_layout_;
};

}  // namespace movable

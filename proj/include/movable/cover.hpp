#pragma once

// Invisible covers: ordered lists of nodes that make an object sensitive to
// the pointer. Each node either moves the whole object or drives one resize
// handle. Nodes may overlap freely; the first node in list order that
// contains a point wins.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "movable/geometry.hpp"

namespace movable {

// Grab-band thickness around borders, in pixels.
inline constexpr double kDefaultBorder = 6.0;

struct HandleId {
  enum class Kind {
    left,
    right,
    top,
    bottom,
    corner_nw,
    corner_ne,
    corner_se,
    corner_sw,
    radial,
    vertex,
    edge,
  };

  Kind kind = Kind::left;
  std::size_t index = 0;  // meaningful for vertex and edge only

  friend bool operator==(const HandleId&, const HandleId&) = default;
};

std::string to_string(const HandleId& handle);

struct NodeAction {
  enum class Kind { move_whole, resize };

  Kind kind = Kind::move_whole;
  HandleId handle;  // meaningful for resize only

  static NodeAction move_whole() { return {}; }
  static NodeAction resize(HandleId h) { return {Kind::resize, h}; }

  bool is_move() const noexcept { return kind == Kind::move_whole; }
  bool is_resize() const noexcept { return kind == Kind::resize; }

  friend bool operator==(const NodeAction& a, const NodeAction& b) {
    return a.kind == b.kind && (a.kind == Kind::move_whole || a.handle == b.handle);
  }
};

std::string to_string(const NodeAction& action);

struct Node {
  Shape shape;  // local coordinates
  NodeAction action;
};

bool node_contains(const Node& node, Point local);

class Cover {
 public:
  // Throws unless `nodes` is non-empty and holds at least one move node.
  explicit Cover(std::vector<Node> nodes);

  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& node(std::size_t index) const { return nodes_.at(index); }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  std::vector<Node> nodes_;
};

// Index of the first node containing `local`, if any.
std::optional<std::size_t> cover_hit(const Cover& cover, Point local);

inline constexpr std::int32_t kNoHit = -1;

// cover_hit for many local points at once, built on the batch kernels.
// out[i] is the node index or kNoHit.
void cover_hit_batch(const Cover& cover, std::span<const double> xs, std::span<const double> ys,
                     std::span<std::int32_t> out);

// Rectangle [0,w] x [0,h] with the top-left corner at the local origin.
// Corner discs first, then edge strips (left, right, top, bottom), then the
// interior move node. Requires 0 < border <= min(w, h) / 2.
Cover rect_cover(double width, double height, double border = kDefaultBorder);

// Disc centred on the local origin: move disc of radius - border, then the
// full disc as the radial resize node. Requires radius > border > 0.
Cover circle_cover(double radius, double border = kDefaultBorder);

// Vertex discs, then edge strips, then the interior move node. Requires a
// strictly convex counterclockwise polygon and border > 0.
Cover polygon_cover(std::span<const Point> vertices, double border = kDefaultBorder);

}  // namespace movable

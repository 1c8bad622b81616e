#include "movable/cover.hpp"

#include <algorithm>
#include <utility>

#include "movable/error.hpp"
#include "movable/kernels.hpp"

namespace movable {

std::string to_string(const HandleId& handle) {
  switch (handle.kind) {
    case HandleId::Kind::left: return "left";
    case HandleId::Kind::right: return "right";
    case HandleId::Kind::top: return "top";
    case HandleId::Kind::bottom: return "bottom";
    case HandleId::Kind::corner_nw: return "corner-NW";
    case HandleId::Kind::corner_ne: return "corner-NE";
    case HandleId::Kind::corner_se: return "corner-SE";
    case HandleId::Kind::corner_sw: return "corner-SW";
    case HandleId::Kind::radial: return "radial";
    case HandleId::Kind::vertex: return "vertex(" + std::to_string(handle.index) + ")";
    case HandleId::Kind::edge: return "edge(" + std::to_string(handle.index) + ")";
  }
  return "unknown";
}

std::string to_string(const NodeAction& action) {
  return action.is_move() ? "move" : "resize:" + to_string(action.handle);
}

bool node_contains(const Node& node, Point local) { return contains(node.shape, local); }

Cover::Cover(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw Error(ErrorCode::invalid_argument, "cover needs at least one node");
  if (std::none_of(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.action.is_move(); })) {
    throw Error(ErrorCode::invalid_argument, "cover needs a move node");
  }
}

std::optional<std::size_t> cover_hit(const Cover& cover, Point local) {
  const auto nodes = cover.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (node_contains(nodes[i], local)) return i;
  }
  return std::nullopt;
}

void cover_hit_batch(const Cover& cover, std::span<const double> xs, std::span<const double> ys,
                     std::span<std::int32_t> out) {
  if (xs.size() != ys.size() || xs.size() != out.size()) {
    throw Error(ErrorCode::invalid_argument, "batch spans must have equal length");
  }
  std::fill(out.begin(), out.end(), kNoHit);
  std::vector<std::uint8_t> mask(xs.size());
  const auto nodes = cover.nodes();
  // Later nodes never overwrite an earlier hit, so the order matches cover_hit.
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    kernels::contains_batch(nodes[n].shape, xs, ys, mask);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == kNoHit && mask[i]) out[i] = static_cast<std::int32_t>(n);
    }
  }
}

namespace {

Node resize_node(Shape shape, HandleId::Kind kind, std::size_t index = 0) {
  return {std::move(shape), NodeAction::resize({kind, index})};
}

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

Cover rect_cover(double width, double height, double border) {
  if (!positive_finite(width) || !positive_finite(height)) {
    throw Error(ErrorCode::invalid_argument, "rectangle size must be positive");
  }
  if (!positive_finite(border) || border > std::min(width, height) / 2.0) {
    throw Error(ErrorCode::invalid_argument, "border must be in (0, min(width, height) / 2]");
  }
  using K = HandleId::Kind;
  const Point nw{0.0, 0.0};
  const Point ne{width, 0.0};
  const Point se{width, height};
  const Point sw{0.0, height};

  std::vector<Node> nodes;
  nodes.reserve(9);
  nodes.push_back(resize_node(CircleShape(nw, border), K::corner_nw));
  nodes.push_back(resize_node(CircleShape(ne, border), K::corner_ne));
  nodes.push_back(resize_node(CircleShape(se, border), K::corner_se));
  nodes.push_back(resize_node(CircleShape(sw, border), K::corner_sw));
  nodes.push_back(resize_node(StripShape(nw, sw, border), K::left));
  nodes.push_back(resize_node(StripShape(ne, se, border), K::right));
  nodes.push_back(resize_node(StripShape(nw, ne, border), K::top));
  nodes.push_back(resize_node(StripShape(sw, se, border), K::bottom));
  // With y down, nw -> ne -> se -> sw has positive shoelace area.
  nodes.push_back({ConvexPolygonShape({nw, ne, se, sw}), NodeAction::move_whole()});
  return Cover(std::move(nodes));
}

Cover circle_cover(double radius, double border) {
  if (!positive_finite(border) || !positive_finite(radius) || border >= radius) {
    throw Error(ErrorCode::invalid_argument, "circle cover needs radius > border > 0");
  }
  std::vector<Node> nodes;
  nodes.push_back({CircleShape({}, radius - border), NodeAction::move_whole()});
  nodes.push_back(resize_node(CircleShape({}, radius), HandleId::Kind::radial));
  return Cover(std::move(nodes));
}

Cover polygon_cover(std::span<const Point> vertices, double border) {
  if (!is_strictly_convex_ccw(vertices)) {
    throw Error(ErrorCode::invalid_argument, "polygon cover needs a strictly convex counterclockwise polygon");
  }
  if (!positive_finite(border)) throw Error(ErrorCode::invalid_argument, "border must be positive");
  const std::size_t n = vertices.size();
  std::vector<Node> nodes;
  nodes.reserve(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(resize_node(CircleShape(vertices[i], border), HandleId::Kind::vertex, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(
        resize_node(StripShape(vertices[i], vertices[(i + 1) % n], border), HandleId::Kind::edge, i));
  }
  nodes.push_back({ConvexPolygonShape({vertices.begin(), vertices.end()}), NodeAction::move_whole()});
  return Cover(std::move(nodes));
}

}  // namespace movable

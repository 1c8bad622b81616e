#include "movable/persistence.hpp"

#include <fstream>
#include <sstream>

#include "movable/canonical_json.hpp"
#include "movable/error.hpp"

namespace movable::persistence {

namespace {

Json point_json(Point p) { return Json::array({p.x(), p.y()}); }

Json color_json(Rgb c) { return Json::array({c.r, c.g, c.b}); }

Json size_json(const SizeParams& size) {
  if (const auto* r = std::get_if<RectSize>(&size)) return {{"height", r->height}, {"width", r->width}};
  if (const auto* c = std::get_if<CircleSize>(&size)) return {{"radius", c->radius}};
  Json vertices = Json::array();
  for (const Point& v : std::get<PolygonSize>(size).vertices) vertices.push_back(point_json(v));
  return {{"vertices", vertices}};
}

Json object_json(const MovableObject& o, bool visible, std::int64_t z) {
  const StyleParams& s = o.style();
  const Transform& t = o.transform();
  return {{"kind", to_string(o.kind())},
          {"size", size_json(o.size())},
          {"state", visible ? "visible" : "parallel"},
          {"style",
           {{"fill_color", color_json(s.fill_color)},
            {"font_size", s.font_size},
            {"text", s.text},
            {"text_color", color_json(s.text_color)}}},
          {"transform", {{"angle", t.angle}, {"x", t.translation.x()}, {"y", t.translation.y()}}},
          {"z", z}};
}

Json group_json(const GroupSpec& group) {
  if (const auto* sync = std::get_if<SynchronousGroup>(&group)) {
    return {{"members", sync->members}, {"mode", "synchronous"}};
  }
  const auto& related = std::get<RelatedGroup>(group);
  Json offsets = Json::object();
  for (const auto& [id, offset] : related.offsets) offsets[id] = point_json(offset);
  return {{"master", related.master}, {"mode", "related"}, {"offsets", offsets}};
}

// --- parsing -------------------------------------------------------------

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed, what); }

void expect_keys(const Json& j, std::initializer_list<std::string_view> keys, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
  if (j.size() != keys.size()) malformed(where + " has missing or unknown fields");
  for (auto key : keys) {
    if (!j.contains(key)) malformed(where + " lacks '" + std::string(key) + "'");
  }
}

double real(const Json& j, const std::string& where) {
  if (!j.is_number()) malformed(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) malformed(where + " must be finite");
  return v;
}

Point point(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) malformed(where + " must be [x, y]");
  return {real(j[0], where), real(j[1], where)};
}

Rgb color(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) malformed(where + " must be [r, g, b]");
  std::uint8_t c[3];
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0 || j[i].get<std::int64_t>() > 255) {
      malformed(where + " channels must be integers in [0, 255]");
    }
    c[i] = static_cast<std::uint8_t>(j[i].get<std::int64_t>());
  }
  return {c[0], c[1], c[2]};
}

std::string text_of(const Json& j, const std::string& where) {
  if (!j.is_string()) malformed(where + " must be a string");
  return j.get<std::string>();
}

SizeParams parse_size(ObjectKind kind, const Json& j, const std::string& where) {
  switch (kind) {
    case ObjectKind::rect:
    case ObjectKind::labeled_field:
      expect_keys(j, {"height", "width"}, where);
      return RectSize{real(j["width"], where + ".width"), real(j["height"], where + ".height")};
    case ObjectKind::circle:
      expect_keys(j, {"radius"}, where);
      return CircleSize{real(j["radius"], where + ".radius")};
    case ObjectKind::polygon: {
      expect_keys(j, {"vertices"}, where);
      if (!j["vertices"].is_array()) malformed(where + ".vertices must be an array");
      PolygonSize size;
      for (const auto& v : j["vertices"]) size.vertices.push_back(point(v, where + ".vertices"));
      return size;
    }
  }
  malformed(where + " has an unknown kind");
}

StyleParams parse_style(const Json& j, const std::string& where) {
  expect_keys(j, {"fill_color", "font_size", "text", "text_color"}, where);
  StyleParams style;
  style.fill_color = color(j["fill_color"], where + ".fill_color");
  style.text_color = color(j["text_color"], where + ".text_color");
  style.font_size = real(j["font_size"], where + ".font_size");
  style.text = text_of(j["text"], where + ".text");
  return style;
}

GroupSpec parse_group(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("mode")) malformed(where + " lacks a mode");
  const std::string mode = text_of(j["mode"], where + ".mode");
  if (mode == "synchronous") {
    expect_keys(j, {"members", "mode"}, where);
    if (!j["members"].is_array()) malformed(where + ".members must be an array");
    SynchronousGroup group;
    for (const auto& m : j["members"]) group.members.insert(text_of(m, where + ".members"));
    return group;
  }
  if (mode == "related") {
    expect_keys(j, {"master", "mode", "offsets"}, where);
    RelatedGroup group;
    group.master = text_of(j["master"], where + ".master");
    if (!j["offsets"].is_object()) malformed(where + ".offsets must be an object");
    for (const auto& [id, offset] : j["offsets"].items()) {
      group.offsets.emplace(id, point(offset, where + ".offsets." + id));
    }
    return group;
  }
  malformed(where + " has unknown mode '" + mode + "'");
}

}  // namespace

LayoutSnapshot snapshot(const Scene& scene) {
  Json objects = Json::object();
  const auto& visible = scene.visible();
  for (std::size_t z = 0; z < visible.size(); ++z) {
    objects[visible[z].id()] = object_json(visible[z], true, static_cast<std::int64_t>(z));
  }
  for (const auto& [id, o] : scene.parallel_world()) objects[id] = object_json(o, false, -1);
  Json groups = Json::array();
  for (const auto& g : scene.groups()) groups.push_back(group_json(g));
  return {canonical_dump({{"format_version", kFormatVersion}, {"groups", groups}, {"objects", objects}})};
}

void restore(Scene& scene, const LayoutSnapshot& snap) {
  Json root;
  try {
    root = Json::parse(snap.text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::malformed, std::string("snapshot is not valid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("format_version")) malformed("snapshot lacks format_version");
  const Json& version = root["format_version"];
  if (!version.is_number_integer() || version.get<std::int64_t>() != kFormatVersion) {
    throw Error(ErrorCode::version_mismatch, "unsupported format_version " + version.dump());
  }
  expect_keys(root, {"format_version", "groups", "objects"}, "snapshot");
  const Json& objects = root["objects"];
  if (!objects.is_object()) malformed("objects must be an object");

  const std::set<ObjectId> registered = scene.all_ids();
  for (const auto& [id, record] : objects.items()) {
    if (!registered.contains(id)) throw Error(ErrorCode::unknown_id, "snapshot names unknown object '" + id + "'");
  }
  for (const auto& id : registered) {
    if (!objects.contains(id)) malformed("snapshot lacks object '" + id + "'");
  }

  std::vector<std::optional<MovableObject>> by_z(objects.size());
  ParallelWorld parallel;
  for (const auto& [id, record] : objects.items()) {
    const std::string where = "objects." + id;
    expect_keys(record, {"kind", "size", "state", "style", "transform", "z"}, where);
    const MovableObject& current = *scene.find(id);
    const auto kind = parse_object_kind(text_of(record["kind"], where + ".kind"));
    if (!kind) malformed(where + ".kind is unknown");
    if (*kind != current.kind()) malformed(where + ".kind does not match the registered object");
    const Json& t = record["transform"];
    expect_keys(t, {"angle", "x", "y"}, where + ".transform");
    if (!record["z"].is_number_integer()) malformed(where + ".z must be an integer");
    const std::int64_t z = record["z"].get<std::int64_t>();
    const std::string state = text_of(record["state"], where + ".state");

    std::optional<MovableObject> object;
    try {
      object.emplace(id, *kind, Point(real(t["x"], where + ".x"), real(t["y"], where + ".y")),
                     parse_size(*kind, record["size"], where + ".size"), parse_style(record["style"], where + ".style"),
                     real(t["angle"], where + ".angle"), current.border());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::malformed) throw;
      malformed(where + ": " + e.what());
    }

    if (state == "visible") {
      if (z < 0 || static_cast<std::size_t>(z) >= by_z.size() || by_z[static_cast<std::size_t>(z)]) {
        malformed(where + ".z is out of range or repeated");
      }
      by_z[static_cast<std::size_t>(z)] = std::move(object);
    } else if (state == "parallel") {
      if (z != -1) malformed(where + ".z must be -1 for parallel-world objects");
      parallel.emplace(id, std::move(*object));
    } else {
      malformed(where + ".state must be visible or parallel");
    }
  }

  const std::size_t visible_count = objects.size() - parallel.size();
  std::vector<MovableObject> visible;
  for (std::size_t z = 0; z < visible_count; ++z) {
    if (!by_z[z]) malformed("visible z indices must be 0..n-1");
    visible.push_back(std::move(*by_z[z]));
  }

  const Json& groups_json = root["groups"];
  if (!groups_json.is_array()) malformed("groups must be an array");
  std::vector<GroupSpec> groups;
  for (std::size_t i = 0; i < groups_json.size(); ++i) {
    groups.push_back(parse_group(groups_json[i], "groups[" + std::to_string(i) + "]"));
  }

  try {
    scene.replace_state(std::move(visible), std::move(parallel), std::move(groups));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::unknown_id) throw;
    malformed(e.what());
  }
}

void restore_default(Scene& scene) { restore(scene, scene.default_layout()); }

void save(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path.string() + "' for writing");
  out << snapshot(scene).text << '\n';
  if (!out.flush()) throw Error(ErrorCode::io, "cannot write '" + path.string() + "'");
}

void load(Scene& scene, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "cannot read '" + path.string() + "'");
  restore(scene, {text.str()});
}

}  // namespace movable::persistence

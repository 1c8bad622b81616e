#include "reference_fold.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace movable::reference {

using nlohmann::json;

namespace {

std::string six(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

json normalize(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto& [k, v] : j.items()) out[k] = normalize(v);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (auto& v : j) out.push_back(normalize(v));
    return out;
  }
  return j.is_number_float() ? json(six(j.get<double>())) : j;
}

struct Obj {
  json record;  // kind and style, kept verbatim
  double x, y, w, h;
};

struct State {
  std::map<std::string, Obj> objs;
  std::vector<std::string> z;  // visible, bottom to top
  std::string master;
  std::map<std::string, std::pair<double, double>> offsets;
};

struct Grab {
  std::string id;
  std::string handle;  // "move" or a rectangle handle
  double px, py, x0, y0, w0, h0;
};

bool visible(const State& s, const std::string& id) { return std::find(s.z.begin(), s.z.end(), id) != s.z.end(); }

double seg(double px, double py, double ax, double ay, double bx, double by) {
  // Closest point by clamping the free coordinate of an axis-aligned segment.
  const double cx = std::clamp(px, std::min(ax, bx), std::max(ax, bx));
  const double cy = std::clamp(py, std::min(ay, by), std::max(ay, by));
  return std::sqrt((px - cx) * (px - cx) + (py - cy) * (py - cy));
}

std::optional<std::string> handle_at(const Obj& o, double lx, double ly) {
  const double b = std::min(6.0, std::min(o.w, o.h) / 4.0) + 1e-9;
  const double w = o.w, h = o.h;
  const std::pair<const char*, std::array<double, 4>> nodes[] = {
      {"corner-NW", {0, 0, 0, 0}}, {"corner-NE", {w, 0, w, 0}}, {"corner-SE", {w, h, w, h}},
      {"corner-SW", {0, h, 0, h}}, {"left", {0, 0, 0, h}},      {"right", {w, 0, w, h}},
      {"top", {0, 0, w, 0}},       {"bottom", {0, h, w, h}}};
  for (const auto& [name, s] : nodes) {
    if (seg(lx, ly, s[0], s[1], s[2], s[3]) <= b) return name;
  }
  if (lx >= 0 && ly >= 0 && lx <= w && ly <= h) return "move";
  return std::nullopt;
}

void settle(State& s, const std::vector<std::string>& moved) {
  if (s.master.empty()) return;
  auto in = [&](const std::string& id) { return std::find(moved.begin(), moved.end(), id) != moved.end(); };
  const Obj& m = s.objs.at(s.master);
  for (auto& [dep, off] : s.offsets) {
    Obj& d = s.objs.at(dep);
    if (in(dep)) {
      off = {d.x - m.x, d.y - m.y};
    } else if (in(s.master) && visible(s, dep)) {
      d.x = m.x + off.first;
      d.y = m.y + off.second;
    }
  }
}

bool parse_color(const std::string& v, json& out) {
  int r, g, b;
  char tail;
  if (v.size() == 7 && v[0] == '#' && std::sscanf(v.c_str() + 1, "%2x%2x%2x%c", &r, &g, &b, &tail) == 3) {
  } else if (std::sscanf(v.c_str(), "%d,%d,%d%c", &r, &g, &b, &tail) != 3 || v.find_first_of(" +-") != std::string::npos) {
    return false;
  }
  if (r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255) return false;
  out = json::array({r, g, b});
  return true;
}

void set_style(State& s, const std::string& id, const std::string& key, const std::string& value) {
  auto it = s.objs.find(id);
  if (it == s.objs.end()) return;
  json& style = it->second.record["style"];
  if (key == "fill_color" || key == "text_color") {
    json c;
    if (parse_color(value, c)) style[key] = c;
  } else if (key == "font_size") {
    char* end = nullptr;
    const double f = std::strtod(value.c_str(), &end);
    if (end == value.c_str() + value.size() && !value.empty() && std::isfinite(f) && f >= 4) style[key] = f;
  } else if (key == "text") {
    style[key] = value;
  }
}

State load(std::string_view layout) {
  const json root = json::parse(layout);
  State s;
  std::vector<std::pair<int, std::string>> order;
  for (auto& [id, rec] : root["objects"].items()) {
    if (rec["size"].contains("vertices") || rec["size"].contains("radius") || rec["transform"]["angle"] != 0.0) {
      throw std::invalid_argument("reference model covers unrotated rectangles only");
    }
    s.objs[id] = {rec, rec["transform"]["x"], rec["transform"]["y"], rec["size"]["width"], rec["size"]["height"]};
    if (rec["state"] == "visible") order.emplace_back(rec["z"].get<int>(), id);
  }
  std::sort(order.begin(), order.end());
  for (auto& [z, id] : order) s.z.push_back(id);
  for (auto& g : root["groups"]) {
    if (g["mode"] != "related" || !s.master.empty()) throw std::invalid_argument("one related group only");
    s.master = g["master"];
    for (auto& [id, off] : g["offsets"].items()) s.offsets[id] = {off[0].get<double>(), off[1].get<double>()};
  }
  return s;
}

json dump(const State& s) {
  json objects = json::object();
  for (auto& [id, o] : s.objs) {
    json rec = o.record;
    const auto zi = std::find(s.z.begin(), s.z.end(), id);
    rec["state"] = zi == s.z.end() ? "parallel" : "visible";
    rec["z"] = zi == s.z.end() ? -1 : static_cast<int>(zi - s.z.begin());
    rec["transform"] = {{"angle", 0.0}, {"x", o.x}, {"y", o.y}};
    rec["size"] = {{"height", o.h}, {"width", o.w}};
    objects[id] = rec;
  }
  json groups = json::array();
  if (!s.master.empty()) {
    json offs = json::object();
    for (auto& [id, off] : s.offsets) offs[id] = json::array({off.first, off.second});
    groups.push_back({{"master", s.master}, {"mode", "related"}, {"offsets", offs}});
  }
  return normalize({{"format_version", 1}, {"groups", groups}, {"objects", objects}});
}

}  // namespace

json normalize_snapshot(std::string_view snapshot_text) { return normalize(json::parse(snapshot_text)); }

json fold(std::string_view initial_layout, std::string_view script) {
  const State initial = load(initial_layout);
  State s = initial;
  std::optional<Grab> grab;
  std::istringstream lines{std::string(script)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::string verb;
    if (!(in >> verb) || verb[0] == '#') continue;
    if (verb == "press") {
      double x, y;
      std::string button;
      in >> x >> y >> button;
      if (button != "left") throw std::invalid_argument("right-button rotation is outside the model");
      grab.reset();
      for (auto it = s.z.rbegin(); it != s.z.rend(); ++it) {
        const Obj& o = s.objs.at(*it);
        if (auto h = handle_at(o, x - o.x, y - o.y)) {
          const std::string id = *it;
          s.z.erase(std::next(it).base());
          s.z.push_back(id);
          grab = Grab{id, *h, x, y, o.x, o.y, o.w, o.h};
          break;
        }
      }
    } else if (verb == "move") {
      double x, y;
      in >> x >> y;
      if (!grab) continue;
      Obj& o = s.objs.at(grab->id);
      const double before_x = o.x, before_y = o.y;
      if (grab->handle == "move") {
        o.x = x + (grab->x0 - grab->px);
        o.y = y + (grab->y0 - grab->py);
        settle(s, {grab->id});
        continue;
      }
      const std::string& h = grab->handle;
      const double lx = x - grab->x0, ly = y - grab->y0;
      if (h == "left" || h == "corner-NW" || h == "corner-SW") {
        o.w = std::max(grab->w0 - lx, 10.0);
        o.x = grab->x0 + (grab->w0 - o.w);
      } else if (h == "right" || h == "corner-NE" || h == "corner-SE") {
        o.w = std::max(lx, 10.0);
      }
      if (h == "top" || h == "corner-NW" || h == "corner-NE") {
        o.h = std::max(grab->h0 - ly, 10.0);
        o.y = grab->y0 + (grab->h0 - o.h);
      } else if (h == "bottom" || h == "corner-SW" || h == "corner-SE") {
        o.h = std::max(ly, 10.0);
      }
      if (o.x != before_x || o.y != before_y) settle(s, {grab->id});
    } else if (verb == "release") {
      grab.reset();
    } else if (verb == "hide") {
      std::string id;
      in >> id;
      if (!visible(s, id)) continue;
      s.z.erase(std::find(s.z.begin(), s.z.end(), id));
      if (grab && grab->id == id) grab.reset();
    } else if (verb == "restore") {
      std::string id;
      in >> id;
      if (s.objs.contains(id) && !visible(s, id)) s.z.push_back(id);
    } else if (verb == "restore_default") {
      s = initial;
      grab.reset();
    } else if (verb == "set_style") {
      std::string id, key, value;
      in >> id >> key;
      std::getline(in >> std::ws, value);
      while (!value.empty() && (value.back() == ' ' || value.back() == '\r' || value.back() == '\t')) value.pop_back();
      set_style(s, id, key, value);
    } else if (verb == "snapshot" || verb == "render") {
    } else {
      throw std::invalid_argument("message outside the model: " + verb);
    }
  }
  return dump(s);
}

}  // namespace movable::reference

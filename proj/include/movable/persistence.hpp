#pragma once

// Saving and restoring every user-changeable parameter of a scene.
//
// A snapshot is canonical JSON (see canonical_json.hpp):
//
//   {"format_version":1,
//    "groups":[{"members":[ids],"mode":"synchronous"} |
//              {"master":id,"mode":"related","offsets":{id:[dx,dy]}}],
//    "objects":{id:{"kind":..., "size":{...}, "state":"visible"|"parallel",
//                   "style":{...}, "transform":{"angle":a,"x":x,"y":y}, "z":n}}}
//
// Parallel-world objects carry z = -1. Equal scenes give equal bytes.

#include <filesystem>

#include "movable/scene.hpp"

namespace movable::persistence {

inline constexpr int kFormatVersion = 1;

LayoutSnapshot snapshot(const Scene& scene);

// Replaces the scene state with `snap`. The snapshot must name exactly the
// scene's objects with matching kinds. Atomic: on any error (version,
// unknown id, malformed record) the scene is untouched.
void restore(Scene& scene, const LayoutSnapshot& snap);

void restore_default(Scene& scene);

// Writes the snapshot followed by a newline. Throws Error(io).
void save(const Scene& scene, const std::filesystem::path& path);

// Reads a .layout.json file and restores it. Throws Error(io) when the file
// cannot be read; restore errors otherwise.
void load(Scene& scene, const std::filesystem::path& path);

}  // namespace movable::persistence

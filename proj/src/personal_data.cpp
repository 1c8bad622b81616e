#include <array>

#include "movable/session.hpp"

namespace movable {

namespace {

struct FieldSpec {
  const char* id;
  double x, y, width, height;
  const char* text;
};

// Laid out for an 800x600 canvas. Values stand in for a database record.
constexpr std::array<FieldSpec, 5> kFields{{
    {"name", 40, 100, 340, 50, "Name: Anna Keller"},
    {"birth_date", 420, 100, 340, 50, "Date of birth: 1984-03-12"},
    {"address", 40, 180, 720, 90, "Address: 12 Elm Street, Springfield"},
    {"contact", 40, 300, 340, 90, "Contact: +1 555 0100, anna@example.org"},
    {"profession", 420, 300, 340, 90, "Profession: structural engineer"},
}};

}  // namespace

Scene build_personal_data_scene() {
  const Point title_at(40, 20);
  std::vector<MovableObject> objects;
  objects.emplace_back("title", ObjectKind::labeled_field, title_at, RectSize{720, 50},
                       StyleParams{{214, 226, 240}, {20, 30, 60}, 20.0, "Personal data"});
  RelatedGroup form{"title", {}};
  for (const auto& f : kFields) {
    const Point at(f.x, f.y);
    objects.emplace_back(f.id, ObjectKind::labeled_field, at, RectSize{f.width, f.height},
                         StyleParams{{255, 255, 255}, {0, 0, 0}, 12.0, f.text});
    form.offsets.emplace(f.id, at - title_at);
  }
  return Scene(std::move(objects), {std::move(form)});
}

std::vector<std::string> scene_names() { return {"personal-data"}; }

Scene build_scene(std::string_view name) {
  if (name == "personal-data") return build_personal_data_scene();
  throw Error(ErrorCode::unknown_id, "unknown scene '" + std::string(name) + "'");
}

}  // namespace movable

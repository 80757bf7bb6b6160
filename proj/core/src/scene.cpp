/**
 * @file scene.cpp
 */

#include "fmp/scene.hpp"

#include <set>

#include "fmp/error.hpp"

namespace fmp {

ObjectId ObjectId::number(std::int64_t value) { return ObjectId(value); }

ObjectId ObjectId::label(std::string value) { return ObjectId(std::move(value)); }

std::string ObjectId::to_string() const { return is_number() ? std::to_string(as_number()) : as_label(); }

std::strong_ordering operator<=>(const ObjectId &a, const ObjectId &b) {
  if (a.is_number() != b.is_number()) {
    return a.is_number() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_number()) {
    return a.as_number() <=> b.as_number();
  }
  return a.as_label().compare(b.as_label()) <=> 0;
}

Scene::Scene(std::vector<SceneObject> objects, std::string image)
    : _objects(std::move(objects)), _image(std::move(image)) {
  if (_objects.empty()) {
    throw EmptyScene("scene" + (_image.empty() ? std::string() : " '" + _image + "'") + " has no objects");
  }
  std::set<ObjectId> seen;
  for (const auto &object : _objects) {
    require_valid(object.box, "object " + object.id.to_string());
    if (not seen.insert(object.id).second) {
      throw DuplicateId("object id " + object.id.to_string() + " occurs more than once");
    }
  }
}

}  // namespace fmp

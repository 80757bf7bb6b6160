/**
 * @file scene_io.cpp
 */

#include "fmp/scene_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fmp/error.hpp"

namespace fmp {

namespace {

using json = nlohmann::json;

std::size_t lineOfByte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void fieldError(const std::string &source, const std::string &field, const std::string &message) {
  throw ParseError(source + ": " + field + ": " + message);
}

double coordinate(const json &value, const std::string &source, const std::string &field) {
  if (not value.is_number()) {
    fieldError(source, field, "expected a number");
  }
  return value.get<double>();
}

}  // namespace

Scene parse_scene(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (not in) {
    throw ParseError(path.string() + ": no such file or not readable");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scene_text(buffer.str(), path.string());
}

Scene parse_scene_text(std::string_view json_text, const std::string &source) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(source + ": line " + std::to_string(lineOfByte(json_text, e.byte)) + ": malformed JSON (" +
                     e.what() + ")");
  }
  if (not doc.is_object()) {
    fieldError(source, "<root>", "expected an object");
  }

  std::string image;
  if (auto it = doc.find("image"); it != doc.end() and not it->is_null()) {
    if (not it->is_string()) {
      fieldError(source, "image", "expected a string");
    }
    image = it->get<std::string>();
  }

  const auto objectsIt = doc.find("objects");
  if (objectsIt == doc.end() or not objectsIt->is_array()) {
    fieldError(source, "objects", "expected an array");
  }

  std::vector<SceneObject> objects;
  std::set<std::string> unidentifiedLabels;
  for (std::size_t i = 0; i < objectsIt->size(); ++i) {
    const json &entry = (*objectsIt)[i];
    const std::string field = "objects[" + std::to_string(i) + "]";
    if (not entry.is_object()) {
      fieldError(source, field, "expected an object");
    }

    const auto labelIt = entry.find("label");
    if (labelIt == entry.end() or not labelIt->is_string()) {
      fieldError(source, field + ".label", "expected a string");
    }
    std::string label = labelIt->get<std::string>();

    const auto bboxIt = entry.find("bbox");
    if (bboxIt == entry.end() or not bboxIt->is_array() or bboxIt->size() != 4) {
      fieldError(source, field + ".bbox", "expected [x_min, y_min, x_max, y_max]");
    }
    BoundingBox box{coordinate((*bboxIt)[0], source, field + ".bbox[0]"),
                    coordinate((*bboxIt)[1], source, field + ".bbox[1]"),
                    coordinate((*bboxIt)[2], source, field + ".bbox[2]"),
                    coordinate((*bboxIt)[3], source, field + ".bbox[3]")};

    std::optional<ObjectId> id;
    if (auto idIt = entry.find("id"); idIt != entry.end() and not idIt->is_null()) {
      if (not idIt->is_number_integer() or idIt->get<std::int64_t>() <= 0) {
        fieldError(source, field + ".id", "expected a positive integer");
      }
      id = ObjectId::number(idIt->get<std::int64_t>());
    } else {
      if (not unidentifiedLabels.insert(label).second) {
        throw AmbiguousLabel(source + ": label '" + label +
                             "' occurs more than once among objects without an id; add ids");
      }
      id = ObjectId::label(label);
    }
    require_valid(box, source + ": object " + id->to_string() + " (" + field + ")");
    objects.push_back({*id, std::move(label), box});
  }

  try {
    return Scene(std::move(objects), std::move(image));
  } catch (const DuplicateId &e) {
    throw DuplicateId(source + ": " + e.what());
  } catch (const EmptyScene &e) {
    throw EmptyScene(source + ": " + e.what());
  }
}

std::string serialize_scene(const Scene &scene) {
  json doc;
  if (not scene.image().empty()) {
    doc["image"] = scene.image();
  }
  json objects = json::array();
  for (const auto &object : scene.objects()) {
    json entry;
    if (object.id.is_number()) {
      entry["id"] = object.id.as_number();
    }
    entry["label"] = object.label;
    entry["bbox"] = {object.box.x_min, object.box.y_min, object.box.x_max, object.box.y_max};
    objects.push_back(std::move(entry));
  }
  doc["objects"] = std::move(objects);
  return doc.dump(2) + "\n";
}

MatchedPair match_objects(const Scene &first, const Scene &second) {
  std::map<ObjectId, const SceneObject *> secondById;
  for (const auto &object : second.objects()) {
    secondById.emplace(object.id, &object);
  }
  std::vector<const SceneObject *> shared;
  for (const auto &object : first.objects()) {
    if (secondById.contains(object.id)) {
      shared.push_back(&object);
    }
  }
  std::sort(shared.begin(), shared.end(), [](const auto *a, const auto *b) { return a->id < b->id; });

  MatchedPair out;
  out.n1 = first.size();
  out.n2 = second.size();
  out.n0 = shared.size();
  out.n = out.n1 + out.n2 - out.n0;
  for (const auto *object : shared) {
    out.first.push_back(*object);
    out.second.push_back(*secondById.at(object->id));
  }
  return out;
}

}  // namespace fmp

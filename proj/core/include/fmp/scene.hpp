/**
 * @file scene.hpp
 *
 * A scene is the set of labelled bounding boxes annotated on one image.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fmp/error.hpp"
#include "fmp/membership.hpp"

namespace fmp {

/// Identity used to pair objects across scenes: an explicit positive integer, or the object's
/// label when the annotation carries no id. Numeric ids order before labels.
class ObjectId {
 public:
  static ObjectId number(std::int64_t value);
  static ObjectId label(std::string value);

  bool is_number() const { return std::holds_alternative<std::int64_t>(_value); }
  std::int64_t as_number() const { return std::get<std::int64_t>(_value); }
  const std::string &as_label() const { return std::get<std::string>(_value); }
  std::string to_string() const;

  friend bool operator==(const ObjectId &, const ObjectId &) = default;
  friend std::strong_ordering operator<=>(const ObjectId &a, const ObjectId &b);

 private:
  explicit ObjectId(std::variant<std::int64_t, std::string> value) : _value(std::move(value)) {}
  std::variant<std::int64_t, std::string> _value;
};

struct SceneObject {
  ObjectId id;
  std::string label;
  BoundingBox box;

  friend bool operator==(const SceneObject &, const SceneObject &) = default;
};

/// Non-empty list of objects with unique ids and valid boxes. The constructor enforces this
/// (EmptyScene, DuplicateId, DegenerateBox).
class Scene {
 public:
  explicit Scene(std::vector<SceneObject> objects, std::string image = {});

  const std::vector<SceneObject> &objects() const { return _objects; }
  std::size_t size() const { return _objects.size(); }
  const std::string &image() const { return _image; }

  friend bool operator==(const Scene &, const Scene &) = default;

 private:
  std::vector<SceneObject> _objects;
  std::string _image;
};

class EmptyScene : public Error {
 public:
  using Error::Error;
};

}  // namespace fmp

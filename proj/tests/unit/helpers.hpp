/**
 * @file helpers.hpp
 *
 * Small conveniences shared by the unit tests.
 */

#pragma once

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

#include "fmp/descriptors.hpp"
#include "fmp/scene.hpp"

namespace fmp::test {

inline PointLabel pt(const std::string &name, Axis axis = Axis::x) {
  const auto p = parse_point_label(name, axis);
  if (not p) throw std::invalid_argument("bad point label " + name);
  return *p;
}

inline EdgeDescriptor edge(const std::string &name, Axis axis = Axis::x) {
  const auto e = EdgeDescriptor::parse(name, axis);
  if (not e) throw std::invalid_argument("bad edge descriptor " + name);
  return *e;
}

inline PositionDescriptor pos(const std::string &name) {
  const auto d = PositionDescriptor::parse(name);
  if (not d) throw std::invalid_argument("bad position descriptor " + name);
  return *d;
}

inline SceneObject object(std::int64_t id, BoundingBox box, std::string label = "") {
  if (label.empty()) label = "obj" + std::to_string(id);
  return {ObjectId::number(id), std::move(label), box};
}

}  // namespace fmp::test

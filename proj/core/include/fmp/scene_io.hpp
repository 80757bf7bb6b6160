/**
 * @file scene_io.hpp
 *
 * Annotation files and object matching.
 *
 * Annotation format (UTF-8 JSON):
 *
 *   {
 *     "image": "kitchen.jpg",                       // optional
 *     "objects": [
 *       {"id": 1, "label": "cup", "bbox": [x_min, y_min, x_max, y_max]},
 *       ...
 *     ]
 *   }
 *
 * "id" is an optional positive integer. Objects without one are identified by their label,
 * which must then be unique among such objects.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fmp/scene.hpp"

namespace fmp {

/// Throws ParseError (with line or field), DegenerateBox, DuplicateId, AmbiguousLabel, EmptyScene.
Scene parse_scene(const std::filesystem::path &path);
Scene parse_scene_text(std::string_view json_text, const std::string &source = "<memory>");

/// Inverse of parse_scene_text up to whitespace: ids are written only for numeric ids.
std::string serialize_scene(const Scene &scene);

/// Objects present in both scenes, sorted by ascending id and index-aligned.
struct MatchedPair {
  std::vector<SceneObject> first;
  std::vector<SceneObject> second;
  std::size_t n1 = 0;  ///< objects in the first scene
  std::size_t n2 = 0;  ///< objects in the second scene
  std::size_t n0 = 0;  ///< matched objects
  std::size_t n = 0;   ///< distinct objects over both scenes, n1 + n2 - n0
};

/// Never throws on small overlap; n0 may be 0.
MatchedPair match_objects(const Scene &first, const Scene &second);

}  // namespace fmp

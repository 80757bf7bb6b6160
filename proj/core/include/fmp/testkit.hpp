/**
 * @file testkit.hpp
 *
 * Scene generators, exact geometric transforms and a reference implementation of the measure.
 *
 * oracle_measure() evaluates the comparison with dense membership vectors over the whole
 * descriptor vocabulary and full nested loops. It shares the FAM and matching-matrix tables and
 * the partition knots with the library, but none of the evaluation code.
 */

#pragma once

#include <cstdint>
#include <random>

#include "fmp/comparison.hpp"
#include "fmp/fam.hpp"
#include "fmp/scene.hpp"

namespace fmp::testkit {

struct Canvas {
  double width = 1000.0;
  double height = 1000.0;
};

/// (x, y) -> (sx * x + tx, sy * y + ty).
struct AxisAlignedTransform {
  double sx = 1.0;
  double sy = 1.0;
  double tx = 0.0;
  double ty = 0.0;

  /// Throws ValidationError unless sx > 0 and sy > 0.
  void validate() const;
};

struct MirrorAxis {
  enum class Kind { vertical, horizontal, point };
  Kind kind = Kind::vertical;
  double x0 = 0.0;
  double y0 = 0.0;

  /// Reflection x -> 2 x0 - x.
  static MirrorAxis vertical(double x0) { return {Kind::vertical, x0, 0.0}; }
  /// Reflection y -> 2 y0 - y.
  static MirrorAxis horizontal(double y0) { return {Kind::horizontal, 0.0, y0}; }
  /// Both reflections.
  static MirrorAxis point(double x0, double y0) { return {Kind::point, x0, y0}; }
};

/// Deterministic for a given seed (the generator does not depend on the standard library's
/// distribution implementations). Ids 1..count, labels "obj<id>", corners on a 0.5 grid; a
/// mix of free, overlapping and nested boxes.
Scene random_scene(std::uint64_t seed, std::size_t count, Canvas canvas = {});

Scene transform_scene(const Scene &scene, const AxisAlignedTransform &transform);

/// Corners are re-ordered so every box stays (min, max).
Scene mirror_scene(const Scene &scene, const MirrorAxis &axis);

/// Exchanges the boxes of two objects, keeping ids and labels in place.
Scene swap_boxes(const Scene &scene, const ObjectId &a, const ObjectId &b);

/// Same scene plus `count` random objects whose numeric ids exceed every id already present.
Scene add_unmatched(const Scene &scene, std::size_t count, std::uint64_t seed, Canvas canvas = {});

/// Seeded draws on top of std::mt19937_64, whose output sequence is fixed by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : _engine(seed) {}
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(uniform() * static_cast<double>(bound)); }

 private:
  std::mt19937_64 _engine;
};

struct OracleResult {
  double measure = 0.0;
  double s_acc = 0.0;
  std::size_t n = 0;
  std::size_t n0 = 0;
};

/// Straight transcription of the accumulated pairwise similarity with dense vectors.
/// Throws InsufficientOverlap when fewer than two objects match.
OracleResult oracle_measure(const Scene &first, const Scene &second, const PartitionPair &partitions,
                            const FamTables &tables, const MatchingMatrices &mm, const CompareConfig &config);

}  // namespace fmp::testkit

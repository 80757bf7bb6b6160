/**
 * @file membership.hpp
 *
 * Reference-relative coordinates and trapezoidal fuzzification of a single relative coordinate
 * into the 10 point labels of one axis.
 *
 * A relative coordinate is -1 at the reference box's low edge, +1 at its high edge and 0 at its
 * centre, so every quantity downstream is invariant to translation and positive scaling.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "fmp/descriptors.hpp"
#include "fmp/fuzzy_values.hpp"

namespace fmp {

/// Axis-aligned box, (x_min, y_min) is the upper-left corner.
struct BoundingBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  /// Finite corners with strictly positive width and height.
  bool valid() const;
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }

  friend bool operator==(const BoundingBox &, const BoundingBox &) = default;
};

/// Throws DegenerateBox (naming `what`) unless box.valid().
void require_valid(const BoundingBox &box, const std::string &what);

/// 2 * (p - lo) / (hi - lo) - 1. Throws DegenerateReference if hi <= lo.
double relative_coordinate(double p, double lo, double hi);

/// Corners of a box expressed in the frame of a reference box.
struct RelativeBox {
  double u_min = 0.0;
  double u_max = 0.0;
  double v_min = 0.0;
  double v_max = 0.0;

  friend bool operator==(const RelativeBox &, const RelativeBox &) = default;
};

/// Throws DegenerateBox for an invalid box, DegenerateReference for an invalid reference.
RelativeBox relativize_box(const BoundingBox &box, const BoundingBox &reference);

/// Trapezoid with knots a <= b <= c <= d; a = b = -inf or c = d = +inf give open shoulders.
struct Trapezoid {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double operator()(double u) const;
  /// Reflection u -> -u.
  Trapezoid mirrored() const { return {-d, -c, -b, -a}; }

  friend bool operator==(const Trapezoid &, const Trapezoid &) = default;
};

/// One trapezoid per point label, indexed by index_of(PointLabel).
class FuzzyPartition {
 public:
  FuzzyPartition() = default;
  explicit FuzzyPartition(const std::array<Trapezoid, kPointLabelCount> &sets) : _sets(sets) {}

  /// Knots used when nothing is configured (see README for the layout).
  static FuzzyPartition standard();

  /// Builds the high side by mirroring the five low-side sets (far, near, close, edge, inside).
  static FuzzyPartition from_low_side(const std::array<Trapezoid, 5> &low);

  const Trapezoid &operator[](PointLabel p) const { return _sets[index_of(p)]; }
  Trapezoid &operator[](PointLabel p) { return _sets[index_of(p)]; }
  const std::array<Trapezoid, kPointLabelCount> &sets() const { return _sets; }

  friend bool operator==(const FuzzyPartition &, const FuzzyPartition &) = default;

 private:
  std::array<Trapezoid, kPointLabelCount> _sets{};
};

/// Per-axis partitions; both default to FuzzyPartition::standard().
struct PartitionPair {
  FuzzyPartition x = FuzzyPartition::standard();
  FuzzyPartition y = FuzzyPartition::standard();

  const FuzzyPartition &operator[](Axis axis) const { return axis == Axis::x ? x : y; }
  friend bool operator==(const PartitionPair &, const PartitionPair &) = default;
};

/// Memberships of u in every set of the partition; zero memberships are omitted.
PointMemberships fuzzify_scalar(double u, const FuzzyPartition &partition);

struct PartitionViolation {
  /// Short machine-readable kind: "knot order", "open shoulder", "coverage gap", "excess overlap",
  /// "too many active", "mirror asymmetry", "non-finite knot".
  std::string kind;
  std::string detail;
};

/// Empty result means the partition is sound. Sum-to-one is checked at every knot, at knot
/// midpoints and on a dense grid spanning the finite knots.
std::vector<PartitionViolation> validate_partition(const FuzzyPartition &partition, Axis axis = Axis::x);

}  // namespace fmp

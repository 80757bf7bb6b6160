/**
 * @file membership.cpp
 */

#include "fmp/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "fmp/error.hpp"

namespace fmp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSumTolerance = 1e-9;
constexpr int kGridSamples = 10000;

std::string describeBox(const BoundingBox &box) {
  std::ostringstream os;
  os << "[" << box.x_min << ", " << box.y_min << ", " << box.x_max << ", " << box.y_max << "]";
  return os.str();
}

}  // namespace

bool BoundingBox::valid() const {
  return std::isfinite(x_min) and std::isfinite(y_min) and std::isfinite(x_max) and std::isfinite(y_max) and
         x_min < x_max and y_min < y_max;
}

void require_valid(const BoundingBox &box, const std::string &what) {
  if (not box.valid()) {
    throw DegenerateBox(what + " has a degenerate bounding box " + describeBox(box));
  }
}

double relative_coordinate(double p, double lo, double hi) {
  if (not(hi > lo) or not std::isfinite(hi - lo)) {
    throw DegenerateReference("reference span [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] is empty");
  }
  return 2.0 * (p - lo) / (hi - lo) - 1.0;
}

RelativeBox relativize_box(const BoundingBox &box, const BoundingBox &reference) {
  if (not reference.valid()) {
    throw DegenerateReference("reference box " + describeBox(reference) + " is degenerate");
  }
  require_valid(box, "box");
  return {relative_coordinate(box.x_min, reference.x_min, reference.x_max),
          relative_coordinate(box.x_max, reference.x_min, reference.x_max),
          relative_coordinate(box.y_min, reference.y_min, reference.y_max),
          relative_coordinate(box.y_max, reference.y_min, reference.y_max)};
}

double Trapezoid::operator()(double u) const {
  if (u < a or u > d) {
    return 0.0;
  }
  if (u < b) {
    return (u - a) / (b - a);
  }
  if (u <= c) {
    return 1.0;
  }
  return (d - u) / (d - c);
}

FuzzyPartition FuzzyPartition::standard() {
  return from_low_side({{
      {-kInf, -kInf, -5.0, -4.0},     // far
      {-5.0, -4.0, -3.0, -2.0},       // near
      {-3.0, -2.0, -1.25, -1.05},     // close
      {-1.25, -1.05, -0.95, -0.75},   // edge: plateau straddles -1
      {-0.95, -0.75, -0.1, 0.1},      // inside
  }});
}

FuzzyPartition FuzzyPartition::from_low_side(const std::array<Trapezoid, 5> &low) {
  std::array<Trapezoid, kPointLabelCount> sets{};
  for (std::size_t i = 0; i < 5; ++i) {
    sets[i] = low[i];
    sets[9 - i] = low[i].mirrored();
  }
  return FuzzyPartition(sets);
}

PointMemberships fuzzify_scalar(double u, const FuzzyPartition &partition) {
  PointMemberships out;
  for (std::size_t i = 0; i < kPointLabelCount; ++i) {
    out.include(point_label(i), partition.sets()[i](u));
  }
  return out;
}

std::vector<PartitionViolation> validate_partition(const FuzzyPartition &partition, Axis axis) {
  std::vector<PartitionViolation> violations;
  std::set<std::string> seenKinds;
  auto report = [&](const std::string &kind, const std::string &detail) {
    if (seenKinds.insert(kind).second) {
      violations.push_back({kind, detail});
    }
  };
  auto name = [axis](std::size_t i) { return std::string(to_string(point_label(i), axis)); };

  const auto &sets = partition.sets();
  for (std::size_t i = 0; i < kPointLabelCount; ++i) {
    const auto &t = sets[i];
    if (std::isnan(t.a) or std::isnan(t.b) or std::isnan(t.c) or std::isnan(t.d)) {
      report("non-finite knot", name(i) + " has a NaN knot");
      continue;
    }
    if (not(t.a <= t.b and t.b <= t.c and t.c <= t.d)) {
      report("knot order", name(i) + " knots are not ordered a <= b <= c <= d");
    }
    const bool lowShoulder = i == 0;
    const bool highShoulder = i == kPointLabelCount - 1;
    if (lowShoulder and not(t.a == -kInf and t.b == -kInf)) {
      report("open shoulder", name(i) + " must start with -inf, -inf");
    }
    if (highShoulder and not(t.c == kInf and t.d == kInf)) {
      report("open shoulder", name(i) + " must end with inf, inf");
    }
    const bool innerFinite = (lowShoulder or (std::isfinite(t.a) and std::isfinite(t.b))) and
                             (highShoulder or (std::isfinite(t.c) and std::isfinite(t.d)));
    if (not innerFinite) {
      report("non-finite knot", name(i) + " has an infinite knot outside the open shoulder");
    }
  }

  for (std::size_t i = 0; i < 5; ++i) {
    if (not(sets[9 - i] == sets[i].mirrored())) {
      report("mirror asymmetry", name(9 - i) + " is not the reflection of " + name(i));
    }
  }

  if (seenKinds.contains("non-finite knot") or seenKinds.contains("knot order")) {
    return violations;
  }

  std::vector<double> knots;
  for (const auto &t : sets) {
    for (double k : {t.a, t.b, t.c, t.d}) {
      if (std::isfinite(k)) {
        knots.push_back(k);
      }
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  if (knots.empty()) {
    knots.push_back(0.0);
  }

  std::vector<double> samples = knots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    samples.push_back(0.5 * (knots[i] + knots[i + 1]));
  }
  const double lo = knots.front() - 1.0;
  const double hi = knots.back() + 1.0;
  for (int k = 0; k <= kGridSamples; ++k) {
    samples.push_back(lo + (hi - lo) * k / kGridSamples);
  }

  for (double u : samples) {
    double total = 0.0;
    int active = 0;
    for (const auto &t : sets) {
      const double mu = t(u);
      total += mu;
      active += mu > 0.0 ? 1 : 0;
    }
    std::ostringstream at;
    at << "memberships sum to " << total << " at u=" << u;
    if (total < 1.0 - kSumTolerance) {
      report("coverage gap", at.str());
    } else if (total > 1.0 + kSumTolerance) {
      report("excess overlap", at.str());
    }
    if (active > 2) {
      report("too many active", std::to_string(active) + " sets are active at u=" + std::to_string(u));
    }
  }
  return violations;
}

}  // namespace fmp

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fmp/error.hpp"
#include "fmp/membership.hpp"
#include "fmp/testkit.hpp"
#include "helpers.hpp"

namespace fmp {
namespace {

using test::pt;

TEST(RelativeCoordinate, MapsReferenceSpanOntoUnitInterval) {
  EXPECT_EQ(relative_coordinate(20, 10, 30), 0.0);
  EXPECT_EQ(relative_coordinate(30, 10, 30), 1.0);
  EXPECT_EQ(relative_coordinate(10, 10, 30), -1.0);
  EXPECT_EQ(relative_coordinate(50, 10, 30), 3.0);
}

TEST(RelativeCoordinate, RejectsDegenerateReference) {
  EXPECT_THROW(relative_coordinate(1, 5, 5), DegenerateReference);
  EXPECT_THROW(relative_coordinate(1, 6, 5), DegenerateReference);
}

TEST(RelativeCoordinate, InvariantUnderDyadicScaleAndTranslation) {
  testkit::Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    const double lo = std::round(rng.uniform(-500, 500));
    const double hi = lo + 1 + std::round(rng.uniform(0, 300));
    const double p = std::round(rng.uniform(-2000, 2000));
    const double a = std::ldexp(1.0, static_cast<int>(rng.below(9)) - 4);
    const double t = std::round(rng.uniform(-1000, 1000));
    EXPECT_EQ(relative_coordinate(a * p + t, a * lo + t, a * hi + t), relative_coordinate(p, lo, hi));
  }
}

TEST(RelativizeBox, Examples) {
  const BoundingBox ref{0, 0, 10, 10};
  auto r = relativize_box(ref, ref);
  EXPECT_EQ(r.u_min, -1.0);
  EXPECT_EQ(r.u_max, 1.0);
  EXPECT_EQ(r.v_min, -1.0);
  EXPECT_EQ(r.v_max, 1.0);

  r = relativize_box({40, 0, 50, 10}, ref);
  EXPECT_EQ(r.u_min, 7.0);
  EXPECT_EQ(r.u_max, 9.0);
  EXPECT_EQ(r.v_min, -1.0);
  EXPECT_EQ(r.v_max, 1.0);

  r = relativize_box({2.5, 2.5, 7.5, 7.5}, ref);
  EXPECT_EQ(r.u_min, -0.5);
  EXPECT_EQ(r.u_max, 0.5);
  EXPECT_EQ(r.v_min, -0.5);
  EXPECT_EQ(r.v_max, 0.5);
}

TEST(RelativizeBox, RejectsDegenerateBoxes) {
  EXPECT_THROW(relativize_box({10, 0, 10, 10}, {0, 0, 10, 10}), DegenerateBox);
  EXPECT_THROW(relativize_box({0, 0, 10, 10}, {0, 5, 10, 5}), DegenerateReference);
  EXPECT_THROW(require_valid({0, 0, std::numeric_limits<double>::quiet_NaN(), 1}, "box"), DegenerateBox);
}

TEST(FuzzifyScalar, DefaultKnotExamples) {
  const auto partition = FuzzyPartition::standard();

  auto m = fuzzify_scalar(0.0, partition);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[pt("il")], 0.5);
  EXPECT_EQ(m[pt("ir")], 0.5);

  m = fuzzify_scalar(-1.0, partition);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[pt("el")], 1.0);

  m = fuzzify_scalar(-2.5, partition);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_DOUBLE_EQ(m[pt("nl")], 0.5);
  EXPECT_DOUBLE_EQ(m[pt("cl")], 0.5);

  m = fuzzify_scalar(1e6, partition);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[pt("fr")], 1.0);
}

TEST(FuzzifyScalar, RuspiniPropertiesOnRandomInputs) {
  const auto partition = FuzzyPartition::standard();
  testkit::Rng rng(3);
  for (int k = 0; k < 20000; ++k) {
    const double u = rng.uniform(-8, 8);
    const auto m = fuzzify_scalar(u, partition);
    ASSERT_GE(m.size(), 1u);
    ASSERT_LE(m.size(), 2u);
    EXPECT_NEAR(m.sum(), 1.0, 1e-9) << "u=" << u;
    for (const auto &e : m) {
      EXPECT_GT(e.mu, 0.0);
      EXPECT_LE(e.mu, 1.0);
    }
  }
}

TEST(FuzzifyScalar, MirrorPropertyIsExact) {
  const auto partition = FuzzyPartition::standard();
  testkit::Rng rng(4);
  for (int k = 0; k < 20000; ++k) {
    const double u = rng.uniform(-8, 8);
    const auto direct = fuzzify_scalar(u, partition);
    const auto reflected = fuzzify_scalar(-u, partition);
    ASSERT_EQ(direct.size(), reflected.size());
    for (const auto &e : direct) {
      EXPECT_EQ(reflected[mirror(e.label)], e.mu) << "u=" << u;
    }
  }
}

TEST(ValidatePartition, DefaultIsSound) {
  EXPECT_TRUE(validate_partition(FuzzyPartition::standard(), Axis::x).empty());
  EXPECT_TRUE(validate_partition(FuzzyPartition::standard(), Axis::y).empty());
}

bool hasKind(const std::vector<PartitionViolation> &violations, const std::string &kind) {
  for (const auto &v : violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

TEST(ValidatePartition, ReportsCoverageGap) {
  auto partition = FuzzyPartition::standard();
  partition[pt("el")] = {-1.0, -0.9, -0.85, -0.75};  // cl ends at -1.05
  partition[pt("er")] = partition[pt("el")].mirrored();
  EXPECT_TRUE(hasKind(validate_partition(partition), "coverage gap"));
}

TEST(ValidatePartition, ReportsMirrorAsymmetry) {
  auto partition = FuzzyPartition::standard();
  partition[pt("er")] = {0.75, 0.95, 1.05, 1.3};
  EXPECT_TRUE(hasKind(validate_partition(partition), "mirror asymmetry"));
}

TEST(ValidatePartition, ReportsKnotOrderAndOpenShoulder) {
  auto partition = FuzzyPartition::standard();
  partition[pt("nl")] = {-4, -5, -3, -2};
  EXPECT_TRUE(hasKind(validate_partition(partition), "knot order"));

  partition = FuzzyPartition::standard();
  partition[pt("fl")] = {-10, -9, -5, -4};
  partition[pt("fr")] = partition[pt("fl")].mirrored();
  EXPECT_TRUE(hasKind(validate_partition(partition), "open shoulder"));
}

TEST(ValidatePartition, ReportsExcessOverlap) {
  auto partition = FuzzyPartition::standard();
  partition[pt("cl")] = {-3.5, -2, -1.25, -1.05};
  partition[pt("cr")] = partition[pt("cl")].mirrored();
  const auto violations = validate_partition(partition);
  EXPECT_TRUE(hasKind(violations, "excess overlap") or hasKind(violations, "too many active"));
}

TEST(FuzzyPartition, FromLowSideMirrorsHighSide) {
  const auto standard = FuzzyPartition::standard();
  std::array<Trapezoid, 5> low{};
  for (std::size_t k = 0; k < 5; ++k) low[k] = standard.sets()[k];
  EXPECT_EQ(FuzzyPartition::from_low_side(low), standard);
  EXPECT_EQ(standard[pt("er")], standard[pt("el")].mirrored());
}

}  // namespace
}  // namespace fmp

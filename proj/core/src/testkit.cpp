/**
 * @file testkit.cpp
 */

#include "fmp/testkit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "fmp/error.hpp"

namespace fmp::testkit {

double Rng::uniform() { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }

void AxisAlignedTransform::validate() const {
  if (not(sx > 0.0 and sy > 0.0)) {
    throw ValidationError("transform scales must be positive");
  }
}

namespace {

double snap(double v) { return std::round(v * 2.0) / 2.0; }

BoundingBox snapped(double x0, double y0, double x1, double y1) {
  BoundingBox box{snap(x0), snap(y0), snap(x1), snap(y1)};
  if (box.x_max <= box.x_min) box.x_max = box.x_min + 0.5;
  if (box.y_max <= box.y_min) box.y_max = box.y_min + 0.5;
  return box;
}

BoundingBox freeBox(Rng &rng, const Canvas &canvas) {
  const double w = rng.uniform(0.04, 0.35) * canvas.width;
  const double h = rng.uniform(0.04, 0.35) * canvas.height;
  const double x = rng.uniform(0.0, canvas.width - w);
  const double y = rng.uniform(0.0, canvas.height - h);
  return snapped(x, y, x + w, y + h);
}

BoundingBox nestedBox(Rng &rng, const BoundingBox &outer) {
  const double w = rng.uniform(0.2, 0.8) * outer.width();
  const double h = rng.uniform(0.2, 0.8) * outer.height();
  const double x = outer.x_min + rng.uniform(0.0, outer.width() - w);
  const double y = outer.y_min + rng.uniform(0.0, outer.height() - h);
  return snapped(x, y, x + w, y + h);
}

BoundingBox overlappingBox(Rng &rng, const BoundingBox &other) {
  const double w = rng.uniform(0.3, 1.5) * other.width();
  const double h = rng.uniform(0.3, 1.5) * other.height();
  const double cx = rng.uniform(other.x_min, other.x_max);
  const double cy = rng.uniform(other.y_min, other.y_max);
  return snapped(cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h);
}

}  // namespace

Scene random_scene(std::uint64_t seed, std::size_t count, Canvas canvas) {
  if (count == 0) {
    throw EmptyScene("random_scene needs at least one object");
  }
  Rng rng(seed);
  std::vector<SceneObject> objects;
  objects.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto id = static_cast<std::int64_t>(k + 1);
    const double kind = rng.uniform();
    BoundingBox box;
    if (k > 0 and kind < 0.25) {
      box = nestedBox(rng, objects[rng.below(k)].box);
    } else if (k > 0 and kind < 0.5) {
      box = overlappingBox(rng, objects[rng.below(k)].box);
    } else {
      box = freeBox(rng, canvas);
    }
    objects.push_back({ObjectId::number(id), "obj" + std::to_string(id), box});
  }
  return Scene(std::move(objects), "random-" + std::to_string(seed));
}

Scene transform_scene(const Scene &scene, const AxisAlignedTransform &t) {
  t.validate();
  std::vector<SceneObject> objects = scene.objects();
  for (auto &object : objects) {
    auto &b = object.box;
    b = {t.sx * b.x_min + t.tx, t.sy * b.y_min + t.ty, t.sx * b.x_max + t.tx, t.sy * b.y_max + t.ty};
  }
  return Scene(std::move(objects), scene.image());
}

Scene mirror_scene(const Scene &scene, const MirrorAxis &axis) {
  const bool flipX = axis.kind != MirrorAxis::Kind::horizontal;
  const bool flipY = axis.kind != MirrorAxis::Kind::vertical;
  std::vector<SceneObject> objects = scene.objects();
  for (auto &object : objects) {
    auto &b = object.box;
    if (flipX) {
      b = {2.0 * axis.x0 - b.x_max, b.y_min, 2.0 * axis.x0 - b.x_min, b.y_max};
    }
    if (flipY) {
      b = {b.x_min, 2.0 * axis.y0 - b.y_max, b.x_max, 2.0 * axis.y0 - b.y_min};
    }
  }
  return Scene(std::move(objects), scene.image());
}

Scene swap_boxes(const Scene &scene, const ObjectId &a, const ObjectId &b) {
  std::vector<SceneObject> objects = scene.objects();
  auto find = [&objects](const ObjectId &id) {
    auto it = std::find_if(objects.begin(), objects.end(), [&](const SceneObject &o) { return o.id == id; });
    if (it == objects.end()) {
      throw Error("no object with id " + id.to_string());
    }
    return it;
  };
  std::swap(find(a)->box, find(b)->box);
  return Scene(std::move(objects), scene.image());
}

Scene add_unmatched(const Scene &scene, std::size_t count, std::uint64_t seed, Canvas canvas) {
  std::vector<SceneObject> objects = scene.objects();
  std::int64_t next = 0;
  for (const auto &object : objects) {
    if (object.id.is_number()) {
      next = std::max(next, object.id.as_number());
    }
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    ++next;
    objects.push_back({ObjectId::number(next), "extra" + std::to_string(next), freeBox(rng, canvas)});
  }
  return Scene(std::move(objects), scene.image());
}

// ---------------------------------------------------------------------------------------------
// Reference implementation
// ---------------------------------------------------------------------------------------------

namespace {

constexpr std::size_t kPoints = kPointLabelCount;
constexpr std::size_t kEdges = EdgeDescriptor::kCount;
constexpr std::size_t kPositions = PositionDescriptor::kCount;

using PointVector = std::array<double, kPoints>;
using EdgeVector = std::array<double, kEdges>;
using PositionVector = std::array<double, kPositions>;

double trapezoidValue(const Trapezoid &t, double u) {
  if (u < t.a or u > t.d) return 0.0;
  if (u < t.b) return (u - t.a) / (t.b - t.a);
  if (u <= t.c) return 1.0;
  return (t.d - u) / (t.d - t.c);
}

PointVector densePoint(double p, double lo, double hi, const FuzzyPartition &partition) {
  const double u = 2.0 * (p - lo) / (hi - lo) - 1.0;
  PointVector out{};
  for (std::size_t k = 0; k < kPoints; ++k) {
    out[k] = trapezoidValue(partition.sets()[k], u);
  }
  return out;
}

EdgeVector denseEdge(const PointVector &first, const PointVector &second, const Fam1Table &fam) {
  EdgeVector out{};
  for (std::size_t d1 = 0; d1 < kPoints; ++d1) {
    for (std::size_t d2 = d1; d2 < kPoints; ++d2) {
      const auto cell = fam.cell(point_label(d1), point_label(d2));
      const std::size_t e = cell->index();
      out[e] = std::max(out[e], std::min(first[d1], second[d2]));
    }
  }
  return out;
}

PositionVector densePosition(const BoundingBox &box, const BoundingBox &ref, const PartitionPair &partitions,
                             const FamTables &tables) {
  const auto x = denseEdge(densePoint(box.x_min, ref.x_min, ref.x_max, partitions.x),
                           densePoint(box.x_max, ref.x_min, ref.x_max, partitions.x), tables.x);
  const auto y = denseEdge(densePoint(box.y_min, ref.y_min, ref.y_max, partitions.y),
                           densePoint(box.y_max, ref.y_min, ref.y_max, partitions.y), tables.y);
  PositionVector out{};
  for (std::size_t ey = 0; ey < kEdges; ++ey) {
    for (std::size_t ex = 0; ex < kEdges; ++ex) {
      const auto cell = tables.two.cell(EdgeDescriptor::from_index(ey), EdgeDescriptor::from_index(ex));
      const std::size_t d = cell->index();
      out[d] = std::max(out[d], std::min(x[ex], y[ey]));
    }
  }
  return out;
}

}  // namespace

OracleResult oracle_measure(const Scene &first, const Scene &second, const PartitionPair &partitions,
                            const FamTables &tables, const MatchingMatrices &mm, const CompareConfig &config) {
  // Line 1: C, C', n, n0.
  std::map<ObjectId, BoundingBox> boxesA;
  std::map<ObjectId, BoundingBox> boxesB;
  for (const auto &o : first.objects()) boxesA.emplace(o.id, o.box);
  for (const auto &o : second.objects()) boxesB.emplace(o.id, o.box);
  std::vector<BoundingBox> c;
  std::vector<BoundingBox> cPrime;
  for (const auto &[id, box] : boxesA) {
    if (auto it = boxesB.find(id); it != boxesB.end()) {
      c.push_back(box);
      cPrime.push_back(it->second);
    }
  }
  OracleResult result;
  result.n0 = c.size();
  result.n = first.size() + second.size() - result.n0;
  if (result.n0 < 2) {
    throw InsufficientOverlap("oracle: fewer than two matched objects");
  }

  // Line 2: FMP(C), FMP(C').
  const std::size_t n0 = result.n0;
  std::vector<PositionVector> fmpA(n0 * n0);
  std::vector<PositionVector> fmpB(n0 * n0);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      fmpA[i * n0 + j] = densePosition(c[i], c[j], partitions, tables);
      fmpB[i * n0 + j] = densePosition(cPrime[i], cPrime[j], partitions, tables);
    }
  }

  const auto &rows = permutation_vector(config.mode);
  const double t = config.threshold;
  double sAcc = 0.0;
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      double s = 0.0;
      for (std::size_t d = 0; d < kPositions; ++d) {
        for (std::size_t dp = 0; dp < kPositions; ++dp) {
          if (fmpA[i * n0 + j][d] > t and fmpB[i * n0 + j][dp] > t) {
            const auto pd = PositionDescriptor::from_index(d);
            const auto pdp = PositionDescriptor::from_index(dp);
            const double sLoc = mm.locus[static_cast<std::size_t>(pd.locus())][static_cast<std::size_t>(pdp.locus())];
            const double sOr = mm.orientation[rows[static_cast<std::size_t>(pd.orientation())] - 1]
                                             [static_cast<std::size_t>(pdp.orientation())];
            s = std::max(s, sLoc * sOr);
          }
        }
      }
      sAcc += s;
    }
  }
  result.s_acc = sAcc;
  result.measure = sAcc / static_cast<double>(result.n * n0);
  return result;
}

}  // namespace fmp::testkit

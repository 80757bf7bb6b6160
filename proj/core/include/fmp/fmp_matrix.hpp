/**
 * @file fmp_matrix.hpp
 *
 * Fuzzy mutual position matrix: cell (c, r) holds the descriptor vector of object c relative
 * to reference object r. The matrix is generally not symmetric.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "fmp/fam.hpp"
#include "fmp/fuzzy_values.hpp"
#include "fmp/scene.hpp"

namespace fmp {

class FmpMatrix {
 public:
  FmpMatrix() = default;
  explicit FmpMatrix(std::size_t n) : _n(n), _cells(n * n) {}

  std::size_t size() const { return _n; }

  /// 0-based current / reference indices.
  const FuzzyDescriptorVector &at(std::size_t current, std::size_t reference) const {
    return _cells[current * _n + reference];
  }
  FuzzyDescriptorVector &at(std::size_t current, std::size_t reference) { return _cells[current * _n + reference]; }

  /// Dense membership row over the full vocabulary.
  std::vector<double> dense(std::size_t current, std::size_t reference) const;

  friend bool operator==(const FmpMatrix &, const FmpMatrix &) = default;

 private:
  std::size_t _n = 0;
  std::vector<FuzzyDescriptorVector> _cells;
};

/// Every cell including the diagonal is computed with reasoner.describe(). Boxes are checked
/// up front; DegenerateBox names the offending object id.
FmpMatrix build_fmp(std::span<const SceneObject> objects, const Reasoner &reasoner);
FmpMatrix build_fmp(const Scene &scene, const Reasoner &reasoner);

/// One "c,r,LOCUS/ORIENT,mu" row per descriptor, c and r being object ids, descriptors of a
/// cell in decreasing membership (ties by vocabulary order), mu with `precision` decimals.
/// top_k = 0 writes every nonzero descriptor.
void write_fmp_csv(std::ostream &os, const FmpMatrix &fmp, std::span<const SceneObject> objects,
                   std::size_t top_k = 0, int precision = 3);

/// Descriptors of one cell sorted by decreasing membership, ties by vocabulary order.
std::vector<FuzzyDescriptorVector::Entry> ranked(const FuzzyDescriptorVector &v);

}  // namespace fmp

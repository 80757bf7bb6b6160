/**
 * @file fuzzy_values.hpp
 *
 * Sparse label -> membership map used at every stage of the pipeline. Entries are kept sorted
 * by the label's vocabulary index and only strictly positive memberships are stored.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "fmp/descriptors.hpp"

namespace fmp {

inline std::size_t label_index(PointLabel p) { return index_of(p); }
inline std::size_t label_index(EdgeDescriptor d) { return d.index(); }
inline std::size_t label_index(PositionDescriptor d) { return d.index(); }

template <class Label>
class FuzzyValues {
 public:
  struct Entry {
    Label label;
    double mu;

    friend bool operator==(const Entry &, const Entry &) = default;
  };

  FuzzyValues() = default;
  FuzzyValues(std::initializer_list<Entry> entries) {
    for (const auto &e : entries) {
      include(e.label, e.mu);
    }
  }

  /// Fuzzy union of a single label: keeps max(existing, mu). Non-positive mu is ignored.
  void include(Label label, double mu) {
    if (not(mu > 0.0)) {
      return;
    }
    auto it = std::lower_bound(_entries.begin(), _entries.end(), label_index(label),
                               [](const Entry &e, std::size_t index) { return label_index(e.label) < index; });
    if (it != _entries.end() and label_index(it->label) == label_index(label)) {
      it->mu = std::max(it->mu, mu);
    } else {
      _entries.insert(it, Entry{label, mu});
    }
  }

  /// Membership of label, 0 when absent.
  double operator[](Label label) const {
    auto it = std::lower_bound(_entries.begin(), _entries.end(), label_index(label),
                               [](const Entry &e, std::size_t index) { return label_index(e.label) < index; });
    return (it != _entries.end() and label_index(it->label) == label_index(label)) ? it->mu : 0.0;
  }

  std::span<const Entry> entries() const { return _entries; }
  auto begin() const { return _entries.begin(); }
  auto end() const { return _entries.end(); }
  std::size_t size() const { return _entries.size(); }
  bool empty() const { return _entries.empty(); }

  double max_membership() const {
    double best = 0.0;
    for (const auto &e : _entries) {
      best = std::max(best, e.mu);
    }
    return best;
  }

  double sum() const {
    double total = 0.0;
    for (const auto &e : _entries) {
      total += e.mu;
    }
    return total;
  }

  friend bool operator==(const FuzzyValues &, const FuzzyValues &) = default;

 private:
  std::vector<Entry> _entries;
};

using PointMemberships = FuzzyValues<PointLabel>;
using EdgeMemberships = FuzzyValues<EdgeDescriptor>;
using FuzzyDescriptorVector = FuzzyValues<PositionDescriptor>;

}  // namespace fmp

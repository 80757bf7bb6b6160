/**
 * @file fmp_matrix.cpp
 */

#include "fmp/fmp_matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace fmp {

std::vector<double> FmpMatrix::dense(std::size_t current, std::size_t reference) const {
  std::vector<double> out(PositionDescriptor::kCount, 0.0);
  for (const auto &e : at(current, reference)) {
    out[e.label.index()] = e.mu;
  }
  return out;
}

FmpMatrix build_fmp(std::span<const SceneObject> objects, const Reasoner &reasoner) {
  for (const auto &object : objects) {
    require_valid(object.box, "object " + object.id.to_string());
  }
  const std::size_t n = objects.size();
  FmpMatrix fmp(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      fmp.at(c, r) = reasoner.describe(objects[c].box, objects[r].box);
    }
  }
  return fmp;
}

FmpMatrix build_fmp(const Scene &scene, const Reasoner &reasoner) { return build_fmp(scene.objects(), reasoner); }

std::vector<FuzzyDescriptorVector::Entry> ranked(const FuzzyDescriptorVector &v) {
  std::vector<FuzzyDescriptorVector::Entry> out(v.begin(), v.end());
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.mu > b.mu; });
  return out;
}

void write_fmp_csv(std::ostream &os, const FmpMatrix &fmp, std::span<const SceneObject> objects, std::size_t top_k,
                   int precision) {
  const auto flags = os.flags();
  const auto oldPrecision = os.precision();
  os << std::fixed << std::setprecision(precision);
  for (std::size_t c = 0; c < fmp.size(); ++c) {
    for (std::size_t r = 0; r < fmp.size(); ++r) {
      const auto entries = ranked(fmp.at(c, r));
      const std::size_t count = top_k == 0 ? entries.size() : std::min(top_k, entries.size());
      for (std::size_t k = 0; k < count; ++k) {
        os << objects[c].id.to_string() << ',' << objects[r].id.to_string() << ',' << entries[k].label.to_string()
           << ',' << entries[k].mu << '\n';
      }
    }
  }
  os.flags(flags);
  os.precision(oldPrecision);
}

}  // namespace fmp

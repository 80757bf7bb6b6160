/**
 * @file comparison.cpp
 */

#include "fmp/comparison.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "fmp/error.hpp"

namespace fmp {

namespace {

// Token grids of the published matching matrices. "h" and "hi" are read as vh.
constexpr std::array<std::array<std::string_view, kLocusCount>, kLocusCount> kLocusTokens{{
    //  FA    NE    CL    TO    CR    IN    LG    SP    SA
    {"1", "vh", "vl", "0", "0", "0", "0", "0", "0"},    // FA
    {"vh", "1", "vh", "vl", "0", "0", "0", "0", "0"},   // NE
    {"vl", "vh", "1", "vh", "vl", "0", "0", "0", "0"},  // CL
    {"0", "vl", "vh", "1", "vh", "vl", "0", "0", "0"},  // TO
    {"0", "0", "vl", "vh", "1", "vh", "0", "0", "0"},   // CR
    {"0", "0", "0", "vl", "vh", "1", "0", "vl", "vl"},  // IN
    {"0", "0", "0", "0", "0", "0", "1", "vl", "vl"},    // LG
    {"0", "0", "0", "0", "0", "vl", "vl", "1", "vl"},   // SP
    {"0", "0", "0", "0", "0", "vl", "vl", "vl", "1"},   // SA
}};

constexpr std::array<std::array<std::string_view, kOrientationCount>, kOrientationCount> kOrientationTokens{{
    //  LE    LA    AB    RA    RI    RB    BE    LB    CE    HO    VE
    {"1", "vh", "0", "0", "0", "0", "0", "h", "0", "vl", "0"},      // LE
    {"hi", "1", "vh", "0", "0", "0", "0", "0", "0", "vl", "vl"},    // LA
    {"0", "vh", "1", "vh", "0", "0", "0", "0", "0", "0", "vl"},     // AB
    {"0", "0", "vh", "1", "vh", "0", "0", "0", "0", "vl", "vl"},    // RA
    {"0", "0", "0", "vh", "1", "vh", "0", "0", "0", "vl", "0"},     // RI
    {"0", "0", "0", "0", "vh", "1", "vh", "0", "0", "vl", "vl"},    // RB
    {"0", "0", "0", "0", "0", "vh", "1", "vh", "0", "0", "vl"},     // BE
    {"hi", "0", "0", "0", "0", "0", "vl", "1", "0", "vl", "vl"},    // LB
    {"0", "0", "0", "0", "0", "0", "0", "0", "1", "vl", "vl"},      // CE
    {"vl", "vl", "0", "vl", "vl", "vl", "0", "vl", "vl", "1", "0"}, // HO
    {"0", "vl", "vl", "vl", "0", "vl", "vl", "vl", "vl", "0", "1"}, // VE
}};

double tokenValue(std::string_view token, double high, double low) {
  if (token == "1") return 1.0;
  if (token == "0") return 0.0;
  if (token == "vl") return low;
  return high;  // vh, h, hi
}

constexpr std::array<std::size_t, kOrientationCount> kIdentity{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
constexpr std::array<std::size_t, kOrientationCount> kSymX{5, 4, 3, 2, 1, 8, 7, 6, 9, 10, 11};
constexpr std::array<std::size_t, kOrientationCount> kSymY{1, 8, 7, 6, 5, 4, 3, 2, 9, 10, 11};
constexpr std::array<std::size_t, kOrientationCount> kSymXY{5, 6, 7, 8, 1, 2, 3, 4, 9, 11, 10};

constexpr std::array<std::string_view, 4> kModeNames{"sim", "symx", "symy", "symxy"};
constexpr std::array<std::string_view, 2> kPolicyNames{"as_printed", "symmetrized"};

FmpMatrix subMatrix(const FmpMatrix &full, const std::vector<std::size_t> &indices) {
  FmpMatrix out(indices.size());
  for (std::size_t c = 0; c < indices.size(); ++c) {
    for (std::size_t r = 0; r < indices.size(); ++r) {
      out.at(c, r) = full.at(indices[c], indices[r]);
    }
  }
  return out;
}

SimilarityReport finish(const MatchedPair &matched, const FmpMatrix &first, const FmpMatrix &second,
                        const MatchingMatrices &mm, const CompareConfig &config) {
  SimilarityReport report;
  report.n = matched.n;
  report.n0 = matched.n0;
  report.n1 = matched.n1;
  report.n2 = matched.n2;
  report.config = config;
  for (const auto &object : matched.first) {
    report.matched_ids.push_back(object.id);
  }
  auto acc = accumulated_similarity(first, second, mm, config);
  report.s_acc = acc.s_acc;
  report.pairs = std::move(acc.pairs);
  report.measure = report.s_acc / static_cast<double>(report.n * report.n0);
  return report;
}

void requireOverlap(const MatchedPair &matched) {
  if (matched.n0 < 2) {
    throw InsufficientOverlap("scenes share " + std::to_string(matched.n0) +
                              " object id(s); at least two matched objects are needed");
  }
}

}  // namespace

std::string_view to_string(CompareMode mode) { return kModeNames[static_cast<std::size_t>(mode)]; }

std::optional<CompareMode> parse_compare_mode(std::string_view text) {
  for (std::size_t i = 0; i < kModeNames.size(); ++i) {
    if (kModeNames[i] == text) {
      return static_cast<CompareMode>(i);
    }
  }
  if (text == "similarity") return CompareMode::similarity;
  if (text == "sym_x") return CompareMode::sym_x;
  if (text == "sym_y") return CompareMode::sym_y;
  if (text == "sym_xy") return CompareMode::sym_xy;
  return std::nullopt;
}

std::string_view to_string(OrientationPolicy policy) { return kPolicyNames[static_cast<std::size_t>(policy)]; }

std::optional<OrientationPolicy> parse_orientation_policy(std::string_view text) {
  for (std::size_t i = 0; i < kPolicyNames.size(); ++i) {
    if (kPolicyNames[i] == text) {
      return static_cast<OrientationPolicy>(i);
    }
  }
  return std::nullopt;
}

void CompareConfig::validate() const {
  if (not(threshold >= 0.0 and threshold < 1.0)) {
    throw ValidationError("threshold must lie in [0, 1), got " + std::to_string(threshold));
  }
}

MatchingMatrices MatchingMatrices::build(OrientationPolicy policy, double high, double low) {
  MatchingMatrices mm;
  for (std::size_t r = 0; r < kLocusCount; ++r) {
    for (std::size_t c = 0; c < kLocusCount; ++c) {
      mm.locus[r][c] = tokenValue(kLocusTokens[r][c], high, low);
    }
  }
  for (std::size_t r = 0; r < kOrientationCount; ++r) {
    for (std::size_t c = 0; c < kOrientationCount; ++c) {
      mm.orientation[r][c] = tokenValue(kOrientationTokens[r][c], high, low);
    }
  }
  if (policy == OrientationPolicy::symmetrized) {
    const auto printed = mm.orientation;
    for (std::size_t r = 0; r < kOrientationCount; ++r) {
      for (std::size_t c = 0; c < kOrientationCount; ++c) {
        mm.orientation[r][c] = std::max(printed[r][c], printed[c][r]);
      }
    }
  }
  return mm;
}

std::vector<std::string> validate_matching_matrices(const MatchingMatrices &mm) {
  std::vector<std::string> problems;
  auto check = [&problems](const auto &matrix, auto name, const std::string &which) {
    const std::size_t n = matrix.size();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const double v = matrix[r][c];
        const std::string where = which + "(" + std::string(name(r)) + ", " + std::string(name(c)) + ")";
        if (not(v >= 0.0 and v <= 1.0)) {
          problems.push_back(where + " = " + std::to_string(v) + ": entries must lie in [0, 1]");
        }
        if (r == c and v != 1.0) {
          problems.push_back(where + " = " + std::to_string(v) + ": diagonal must be 1");
        }
      }
    }
  };
  check(mm.locus, [](std::size_t i) { return to_string(static_cast<Locus>(i)); }, "MM_loc");
  check(mm.orientation, [](std::size_t i) { return to_string(static_cast<Orientation>(i)); }, "MM_or");
  for (std::size_t r = 0; r < kLocusCount; ++r) {
    for (std::size_t c = r + 1; c < kLocusCount; ++c) {
      if (mm.locus[r][c] != mm.locus[c][r]) {
        problems.push_back("MM_loc(" + std::string(to_string(static_cast<Locus>(r))) + ", " +
                           std::string(to_string(static_cast<Locus>(c))) + ") differs from its transpose: MM_loc must be symmetric");
      }
    }
  }
  return problems;
}

const std::array<std::size_t, kOrientationCount> &permutation_vector(CompareMode mode) {
  switch (mode) {
    case CompareMode::sym_x: return kSymX;
    case CompareMode::sym_y: return kSymY;
    case CompareMode::sym_xy: return kSymXY;
    case CompareMode::similarity: break;
  }
  return kIdentity;
}

OrientationMatrix permute_orientation(const OrientationMatrix &orientation, CompareMode mode) {
  const auto &order = permutation_vector(mode);
  OrientationMatrix out{};
  for (std::size_t r = 0; r < kOrientationCount; ++r) {
    out[r] = orientation[order[r] - 1];
  }
  return out;
}

PairScore score_pair(const FuzzyDescriptorVector &first, const FuzzyDescriptorVector &second,
                     const LocusMatrix &locus, const OrientationMatrix &orientation, double threshold) {
  PairScore best;
  for (const auto &a : first) {
    if (not(a.mu > threshold)) {
      continue;
    }
    const auto la = static_cast<std::size_t>(a.label.locus());
    const auto oa = static_cast<std::size_t>(a.label.orientation());
    for (const auto &b : second) {
      if (not(b.mu > threshold)) {
        continue;
      }
      const double sLoc = locus[la][static_cast<std::size_t>(b.label.locus())];
      const double sOr = orientation[oa][static_cast<std::size_t>(b.label.orientation())];
      const double s = sLoc * sOr;
      if (s > best.s) {
        best = {s, sLoc, sOr, a.label, b.label};
      }
    }
  }
  return best;
}

PairScore pairwise_similarity(const FuzzyDescriptorVector &first, const FuzzyDescriptorVector &second,
                              const MatchingMatrices &mm, const CompareConfig &config) {
  return score_pair(first, second, mm.locus, permute_orientation(mm.orientation, config.mode), config.threshold);
}

Accumulated accumulated_similarity(const FmpMatrix &first, const FmpMatrix &second, const MatchingMatrices &mm,
                                   const CompareConfig &config) {
  if (first.size() != second.size()) {
    throw Error("FMP matrices of matched scenes must have equal size");
  }
  const auto orientation = permute_orientation(mm.orientation, config.mode);
  Accumulated out;
  const std::size_t n0 = first.size();
  out.pairs.reserve(n0 * n0);
  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      PairRecord record{i, j, score_pair(first.at(i, j), second.at(i, j), mm.locus, orientation, config.threshold)};
      out.s_acc += record.score.s;
      out.pairs.push_back(std::move(record));
    }
  }
  return out;
}

SimilarityReport measure(const Scene &first, const Scene &second, const Reasoner &reasoner,
                         const MatchingMatrices &mm, const CompareConfig &config) {
  config.validate();
  const MatchedPair matched = match_objects(first, second);
  requireOverlap(matched);
  return finish(matched, build_fmp(matched.first, reasoner), build_fmp(matched.second, reasoner), mm, config);
}

PreparedScene::PreparedScene(Scene s, const Reasoner &reasoner) : scene(std::move(s)), fmp(build_fmp(scene, reasoner)) {}

SimilarityReport measure(const PreparedScene &first, const PreparedScene &second, const MatchingMatrices &mm,
                         const CompareConfig &config) {
  config.validate();
  const MatchedPair matched = match_objects(first.scene, second.scene);
  requireOverlap(matched);
  auto indicesOf = [](const Scene &scene, const std::vector<SceneObject> &objects) {
    std::vector<std::size_t> indices;
    for (const auto &object : objects) {
      const auto &all = scene.objects();
      const auto it = std::find_if(all.begin(), all.end(), [&](const SceneObject &o) { return o.id == object.id; });
      indices.push_back(static_cast<std::size_t>(it - all.begin()));
    }
    return indices;
  };
  return finish(matched, subMatrix(first.fmp, indicesOf(first.scene, matched.first)),
                subMatrix(second.fmp, indicesOf(second.scene, matched.second)), mm, config);
}

std::string report_to_json(const SimilarityReport &report, int indent) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["measure"] = report.measure;
  doc["s_acc"] = report.s_acc;
  doc["n"] = report.n;
  doc["n0"] = report.n0;
  doc["n1"] = report.n1;
  doc["n2"] = report.n2;
  doc["mode"] = std::string(to_string(report.config.mode));
  doc["threshold"] = report.config.threshold;
  doc["policy"] = std::string(to_string(report.config.policy));
  json pairs = json::array();
  auto idJson = [](const ObjectId &id) { return id.is_number() ? json(id.as_number()) : json(id.as_label()); };
  for (const auto &p : report.pairs) {
    json entry;
    entry["i"] = idJson(report.matched_ids[p.i]);
    entry["j"] = idJson(report.matched_ids[p.j]);
    entry["d"] = p.score.best_first ? json(p.score.best_first->to_string()) : json(nullptr);
    entry["d_prime"] = p.score.best_second ? json(p.score.best_second->to_string()) : json(nullptr);
    entry["s_loc"] = p.score.s_loc;
    entry["s_or"] = p.score.s_or;
    entry["s"] = p.score.s;
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  return doc.dump(indent);
}

}  // namespace fmp

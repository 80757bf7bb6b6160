/**
 * @file comparison.hpp
 *
 * Similarity and reflectional-symmetry measure between two scenes.
 *
 * Each matched object pair (i, j) contributes the best product
 *   MM_loc(locus d, locus d') * MM_or(orientation d, orientation d')
 * over descriptors d of FMP_ij(first) and d' of FMP_ij(second) whose memberships exceed the
 * threshold. The sum s_acc over all n0 x n0 ordered pairs (self-pairs included) is normalized
 * as s_acc / (n * n0), n being the number of distinct objects over both scenes.
 *
 * Symmetry modes replace MM_or by a row permutation that pairs each orientation with its
 * reflection (left/right, above/below, or both).
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmp/fam.hpp"
#include "fmp/fmp_matrix.hpp"
#include "fmp/scene.hpp"
#include "fmp/scene_io.hpp"

namespace fmp {

enum class CompareMode : std::uint8_t { similarity, sym_x, sym_y, sym_xy };

/// How the single asymmetric cell pair (LB, BE) / (BE, LB) of MM_or is treated.
enum class OrientationPolicy : std::uint8_t { as_printed, symmetrized };

/// "sim", "symx", "symy", "symxy".
std::string_view to_string(CompareMode mode);
std::optional<CompareMode> parse_compare_mode(std::string_view text);
/// "as_printed", "symmetrized".
std::string_view to_string(OrientationPolicy policy);
std::optional<OrientationPolicy> parse_orientation_policy(std::string_view text);

struct CompareConfig {
  static constexpr double kDefaultThreshold = 0.1;

  double threshold = kDefaultThreshold;  ///< memberships must be strictly greater
  CompareMode mode = CompareMode::similarity;
  OrientationPolicy policy = OrientationPolicy::as_printed;

  /// Throws ValidationError unless 0 <= threshold < 1.
  void validate() const;
};

using LocusMatrix = std::array<std::array<double, kLocusCount>, kLocusCount>;
using OrientationMatrix = std::array<std::array<double, kOrientationCount>, kOrientationCount>;

struct MatchingMatrices {
  static constexpr double kHigh = 0.5;  ///< vh; the "h" and "hi" entries of MM_or read as vh too
  static constexpr double kLow = 0.25;  ///< vl

  LocusMatrix locus{};
  OrientationMatrix orientation{};

  /// Published tables. symmetrized replaces MM_or by max(MM_or, MM_or^T).
  static MatchingMatrices build(OrientationPolicy policy = OrientationPolicy::as_printed, double high = kHigh,
                                double low = kLow);

  double loc(Locus a, Locus b) const { return locus[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  double orient(Orientation a, Orientation b) const {
    return orientation[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  friend bool operator==(const MatchingMatrices &, const MatchingMatrices &) = default;
};

/// Entries in [0, 1], unit diagonals, symmetric locus matrix. Empty when sound.
std::vector<std::string> validate_matching_matrices(const MatchingMatrices &mm);

/// 1-based row order of the permuted orientation matrix, as published; identity for similarity.
const std::array<std::size_t, kOrientationCount> &permutation_vector(CompareMode mode);

/// Row i of the result is row permutation_vector(mode)[i] - 1 of `orientation`.
OrientationMatrix permute_orientation(const OrientationMatrix &orientation, CompareMode mode);

struct PairScore {
  double s = 0.0;
  double s_loc = 0.0;
  double s_or = 0.0;
  /// Descriptor pair achieving s; empty when no product is positive.
  std::optional<PositionDescriptor> best_first;
  std::optional<PositionDescriptor> best_second;
};

/// Orientation matrix already permuted for the mode. Ties keep the first pair in vocabulary order.
PairScore score_pair(const FuzzyDescriptorVector &first, const FuzzyDescriptorVector &second,
                     const LocusMatrix &locus, const OrientationMatrix &orientation, double threshold);

PairScore pairwise_similarity(const FuzzyDescriptorVector &first, const FuzzyDescriptorVector &second,
                              const MatchingMatrices &mm, const CompareConfig &config);

struct PairRecord {
  std::size_t i = 0;  ///< 0-based index into the matched lists
  std::size_t j = 0;
  PairScore score;
};

struct Accumulated {
  double s_acc = 0.0;
  std::vector<PairRecord> pairs;  ///< ordered by i, then j
};

/// Both matrices must have the same size n0 and be index-aligned.
Accumulated accumulated_similarity(const FmpMatrix &first, const FmpMatrix &second, const MatchingMatrices &mm,
                                   const CompareConfig &config);

struct SimilarityReport {
  double measure = 0.0;
  double s_acc = 0.0;
  std::size_t n = 0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  CompareConfig config;
  std::vector<ObjectId> matched_ids;  ///< index -> id for the pair records
  std::vector<PairRecord> pairs;
};

/// Throws InsufficientOverlap when fewer than two objects are matched.
SimilarityReport measure(const Scene &first, const Scene &second, const Reasoner &reasoner,
                         const MatchingMatrices &mm, const CompareConfig &config);

/// Scene with the FMP matrix of all its objects, for repeated comparisons. The FMP of any
/// subset is the corresponding sub-matrix, so comparisons reuse it.
struct PreparedScene {
  Scene scene;
  FmpMatrix fmp;

  PreparedScene(Scene s, const Reasoner &reasoner);
};

SimilarityReport measure(const PreparedScene &first, const PreparedScene &second, const MatchingMatrices &mm,
                         const CompareConfig &config);

/// {"measure", "s_acc", "n", "n0", "n1", "n2", "mode", "threshold", "policy", "pairs": [...]}
std::string report_to_json(const SimilarityReport &report, int indent = 2);

}  // namespace fmp

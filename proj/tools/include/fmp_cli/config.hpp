/**
 * @file config.hpp
 *
 * Run configuration of the command line tool: one JSON document, every key optional.
 *
 * {
 *   "threshold": 0.1,
 *   "mode": "sim",                      // sim | symx | symy | symxy
 *   "policy": "as_printed",             // as_printed | symmetrized
 *   "partition": {
 *     "x": {"fl": ["-inf", "-inf", -5, -4], "nl": [-5, -4, -3, -2], ...},
 *     "y": {"fa": [...], ...}
 *   },
 *   "matching": {"vh": 0.5, "vl": 0.25, "locus": [[...] x 9], "orientation": [[...] x 11]},
 *   "tables": {"fam1x": "x.grid", "fam1y": "y.grid", "fam2": "two.grid"}
 * }
 *
 * Partition entries replace single sets; unnamed sets keep their defaults. Table paths are
 * resolved against the directory of the config file.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmp/comparison.hpp"
#include "fmp/fam.hpp"
#include "fmp/membership.hpp"

namespace fmp::cli {

struct RunConfig {
  PartitionPair partitions;
  FamTables tables = FamTables::standard();
  double high = MatchingMatrices::kHigh;
  double low = MatchingMatrices::kLow;
  std::optional<LocusMatrix> locus;
  std::optional<OrientationMatrix> orientation;
  CompareConfig compare;

  /// Published matrices with the configured values and overrides; the policy applies last.
  MatchingMatrices matching() const;
};

/// Throws ParseError naming the offending key.
RunConfig parse_run_config(std::string_view json_text, const std::string &source,
                           const std::filesystem::path &base_dir = {});
RunConfig load_run_config(const std::filesystem::path &path);

struct Violation {
  std::string check;  ///< "partition.x", "partition.y", "fam", "matching", "threshold"
  std::string kind;
  std::string detail;
};

std::vector<Violation> validate_run_config(const RunConfig &config);

/// {"ok": bool, "violations": [{"check", "kind", "detail"}, ...]}
std::string violations_to_json(const std::vector<Violation> &violations);

}  // namespace fmp::cli

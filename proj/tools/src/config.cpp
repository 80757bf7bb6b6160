/**
 * @file config.cpp
 */

#include "fmp_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "fmp/error.hpp"

namespace fmp::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string &source, const std::string &key, const std::string &message) {
  throw ParseError(source + ": " + key + ": " + message);
}

double knot(const json &value, const std::string &source, const std::string &key) {
  if (value.is_number()) {
    return value.get<double>();
  }
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "inf" or text == "+inf") return std::numeric_limits<double>::infinity();
  }
  fail(source, key, "expected a number, \"-inf\" or \"inf\"");
}

double number(const json &value, const std::string &source, const std::string &key) {
  if (not value.is_number()) {
    fail(source, key, "expected a number");
  }
  return value.get<double>();
}

void readPartition(const json &node, FuzzyPartition &partition, Axis axis, const std::string &source,
                   const std::string &key) {
  if (not node.is_object()) {
    fail(source, key, "expected an object of named sets");
  }
  for (const auto &[name, tuple] : node.items()) {
    const std::string where = key + "." + name;
    const auto label = parse_point_label(name, axis);
    if (not label) {
      fail(source, where, "unknown set name");
    }
    if (not tuple.is_array() or tuple.size() != 4) {
      fail(source, where, "expected [a, b, c, d]");
    }
    partition[*label] = {knot(tuple[0], source, where + "[0]"), knot(tuple[1], source, where + "[1]"),
                         knot(tuple[2], source, where + "[2]"), knot(tuple[3], source, where + "[3]")};
  }
}

template <std::size_t N>
std::array<std::array<double, N>, N> readMatrix(const json &node, const std::string &source, const std::string &key) {
  if (not node.is_array() or node.size() != N) {
    fail(source, key, "expected " + std::to_string(N) + " rows");
  }
  std::array<std::array<double, N>, N> out{};
  for (std::size_t r = 0; r < N; ++r) {
    const std::string row = key + "[" + std::to_string(r) + "]";
    if (not node[r].is_array() or node[r].size() != N) {
      fail(source, row, "expected " + std::to_string(N) + " entries");
    }
    for (std::size_t c = 0; c < N; ++c) {
      out[r][c] = number(node[r][c], source, row + "[" + std::to_string(c) + "]");
    }
  }
  return out;
}

std::string readFile(const std::filesystem::path &path, const std::string &what) {
  std::ifstream in(path, std::ios::binary);
  if (not in) {
    throw ParseError(what + ": " + path.string() + ": no such file or not readable");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string tablePath(const json &tables, const char *name, const std::string &source) {
  const auto &value = tables.at(name);
  if (not value.is_string()) {
    fail(source, std::string("tables.") + name, "expected a path");
  }
  return value.get<std::string>();
}

}  // namespace

MatchingMatrices RunConfig::matching() const {
  auto mm = MatchingMatrices::build(OrientationPolicy::as_printed, high, low);
  if (locus) {
    mm.locus = *locus;
  }
  if (orientation) {
    mm.orientation = *orientation;
  }
  if (compare.policy == OrientationPolicy::symmetrized) {
    const auto printed = mm.orientation;
    for (std::size_t r = 0; r < kOrientationCount; ++r) {
      for (std::size_t c = 0; c < kOrientationCount; ++c) {
        mm.orientation[r][c] = std::max(printed[r][c], printed[c][r]);
      }
    }
  }
  return mm;
}

RunConfig parse_run_config(std::string_view json_text, const std::string &source,
                           const std::filesystem::path &base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(source + ": malformed JSON (" + e.what() + ")");
  }
  if (not doc.is_object()) {
    fail(source, "<root>", "expected an object");
  }

  RunConfig config;
  for (const auto &[key, value] : doc.items()) {
    if (key == "threshold") {
      config.compare.threshold = number(value, source, key);
    } else if (key == "mode") {
      const auto mode = value.is_string() ? parse_compare_mode(value.get<std::string>()) : std::nullopt;
      if (not mode) {
        fail(source, key, "expected one of sim, symx, symy, symxy");
      }
      config.compare.mode = *mode;
    } else if (key == "policy") {
      const auto policy = value.is_string() ? parse_orientation_policy(value.get<std::string>()) : std::nullopt;
      if (not policy) {
        fail(source, key, "expected as_printed or symmetrized");
      }
      config.compare.policy = *policy;
    } else if (key == "partition") {
      if (not value.is_object()) {
        fail(source, key, "expected an object with x and/or y");
      }
      for (const auto &[axisName, sets] : value.items()) {
        if (axisName == "x") {
          readPartition(sets, config.partitions.x, Axis::x, source, "partition.x");
        } else if (axisName == "y") {
          readPartition(sets, config.partitions.y, Axis::y, source, "partition.y");
        } else {
          fail(source, "partition." + axisName, "unknown axis");
        }
      }
    } else if (key == "matching") {
      if (not value.is_object()) {
        fail(source, key, "expected an object");
      }
      for (const auto &[name, entry] : value.items()) {
        if (name == "vh") {
          config.high = number(entry, source, "matching.vh");
        } else if (name == "vl") {
          config.low = number(entry, source, "matching.vl");
        } else if (name == "locus") {
          config.locus = readMatrix<kLocusCount>(entry, source, "matching.locus");
        } else if (name == "orientation") {
          config.orientation = readMatrix<kOrientationCount>(entry, source, "matching.orientation");
        } else {
          fail(source, "matching." + name, "unknown key");
        }
      }
    } else if (key == "tables") {
      if (not value.is_object()) {
        fail(source, key, "expected an object");
      }
      for (const auto &[name, entry] : value.items()) {
        if (name != "fam1x" and name != "fam1y" and name != "fam2") {
          fail(source, "tables." + name, "unknown table");
        }
      }
      auto load = [&](const char *name) {
        const auto path = base_dir / tablePath(value, name, source);
        return std::pair{path.string(), readFile(path, source + ": tables." + name)};
      };
      try {
        if (value.contains("fam1x")) {
          const auto [path, text] = load("fam1x");
          config.tables.x = load_fam1_grid(text, Axis::x);
        }
        if (value.contains("fam1y")) {
          const auto [path, text] = load("fam1y");
          config.tables.y = load_fam1_grid(text, Axis::y);
        }
        if (value.contains("fam2")) {
          const auto [path, text] = load("fam2");
          config.tables.two = load_fam2_grid(text);
        }
      } catch (const ParseError &e) {
        throw ParseError(source + ": tables: " + e.what());
      }
    } else {
      fail(source, key, "unknown key");
    }
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path &path) {
  return parse_run_config(readFile(path, "config"), path.string(), path.parent_path());
}

std::vector<Violation> validate_run_config(const RunConfig &config) {
  std::vector<Violation> out;
  for (const auto axis : {Axis::x, Axis::y}) {
    const std::string check = axis == Axis::x ? "partition.x" : "partition.y";
    for (const auto &v : validate_partition(config.partitions[axis], axis)) {
      out.push_back({check, v.kind, v.detail});
    }
  }
  for (const auto &message : check_fam_tables(config.tables)) {
    std::string kind = "fragment mismatch";
    if (message.find("missing") != std::string::npos) {
      kind = "missing cell";
    } else if (message.find("reflection") != std::string::npos) {
      kind = "mirror contradiction";
    }
    out.push_back({"fam", kind, message});
  }
  for (const auto &message : validate_matching_matrices(config.matching())) {
    const auto colon = message.rfind(": ");
    out.push_back({"matching", colon == std::string::npos ? message : message.substr(colon + 2), message});
  }
  try {
    config.compare.validate();
  } catch (const ValidationError &e) {
    out.push_back({"threshold", "out of range", e.what()});
  }
  return out;
}

std::string violations_to_json(const std::vector<Violation> &violations) {
  nlohmann::ordered_json doc;
  doc["ok"] = violations.empty();
  doc["violations"] = nlohmann::ordered_json::array();
  for (const auto &v : violations) {
    doc["violations"].push_back({{"check", v.check}, {"kind", v.kind}, {"detail", v.detail}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace fmp::cli

/**
 * @file cli.cpp
 */

#include "fmp_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "fmp/comparison.hpp"
#include "fmp/error.hpp"
#include "fmp/fmp_matrix.hpp"
#include "fmp/scene_io.hpp"
#include "fmp/testkit.hpp"
#include "fmp_cli/config.hpp"

namespace fmp::cli {

namespace fs = std::filesystem;

std::string format_measure(double value) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << value;
  return os.str();
}

namespace {

/// Flags shared by every subcommand that evaluates scenes.
struct CommonFlags {
  std::string config;
  std::optional<std::string> mode;
  std::optional<double> threshold;
  std::optional<std::string> policy;

  void attach(CLI::App &app) {
    app.add_option("--config", config, "JSON run configuration (default: $FMP_CONFIG)");
    app.add_option("--mode", mode, "sim | symx | symy | symxy");
    app.add_option("--threshold", threshold, "membership threshold t in [0, 1)");
    app.add_option("--policy", policy, "as_printed | symmetrized");
  }

  /// Config file, then flags on top.
  RunConfig resolve() const {
    std::string path = config;
    if (path.empty()) {
      if (const char *env = std::getenv("FMP_CONFIG"); env != nullptr) {
        path = env;
      }
    }
    RunConfig run = path.empty() ? RunConfig{} : load_run_config(path);
    if (mode) {
      const auto parsed = parse_compare_mode(*mode);
      if (not parsed) {
        throw ParseError("--mode: expected one of sim, symx, symy, symxy, got '" + *mode + "'");
      }
      run.compare.mode = *parsed;
    }
    if (threshold) {
      run.compare.threshold = *threshold;
    }
    if (policy) {
      const auto parsed = parse_orientation_policy(*policy);
      if (not parsed) {
        throw ParseError("--policy: expected as_printed or symmetrized, got '" + *policy + "'");
      }
      run.compare.policy = *parsed;
    }
    return run;
  }
};

/// Reports configuration violations on `err`; true when the configuration is usable.
bool usable(const RunConfig &config, std::ostream &err) {
  const auto violations = validate_run_config(config);
  if (violations.empty()) {
    return true;
  }
  err << violations_to_json(violations);
  return false;
}

std::string stemOf(const fs::path &path) { return path.stem().string(); }

// ---------------------------------------------------------------------------------------------

struct DescribeArgs {
  CommonFlags common;
  std::string scene;
  std::string format = "csv";
  std::size_t top = 0;
};

int describe(const DescribeArgs &args, std::ostream &out, std::ostream &err) {
  const auto config = args.common.resolve();
  if (not usable(config, err)) {
    return kValidationError;
  }
  const Scene scene = parse_scene(args.scene);
  const Reasoner reasoner(config.partitions, config.tables);
  const FmpMatrix fmp = build_fmp(scene, reasoner);

  if (args.format == "csv") {
    write_fmp_csv(out, fmp, scene.objects(), args.top);
    return kOk;
  }
  nlohmann::ordered_json doc;
  doc["image"] = scene.image();
  doc["objects"] = nlohmann::ordered_json::array();
  for (const auto &object : scene.objects()) {
    doc["objects"].push_back(object.id.to_string());
  }
  doc["cells"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < fmp.size(); ++c) {
    for (std::size_t r = 0; r < fmp.size(); ++r) {
      nlohmann::ordered_json cell;
      cell["c"] = scene.objects()[c].id.to_string();
      cell["r"] = scene.objects()[r].id.to_string();
      cell["descriptors"] = nlohmann::ordered_json::array();
      auto entries = ranked(fmp.at(c, r));
      if (args.top > 0 and entries.size() > args.top) {
        entries.resize(args.top);
      }
      for (const auto &e : entries) {
        cell["descriptors"].push_back({{"d", e.label.to_string()}, {"mu", e.mu}});
      }
      doc["cells"].push_back(std::move(cell));
    }
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------------------------

struct CompareArgs {
  CommonFlags common;
  std::string first;
  std::string second;
  std::string format = "scalar";
};

int compare(const CompareArgs &args, std::ostream &out, std::ostream &err) {
  const auto config = args.common.resolve();
  if (not usable(config, err)) {
    return kValidationError;
  }
  const Scene first = parse_scene(args.first);
  const Scene second = parse_scene(args.second);
  const Reasoner reasoner(config.partitions, config.tables);
  const auto report = measure(first, second, reasoner, config.matching(), config.compare);

  if (args.format == "json") {
    out << report_to_json(report) << "\n";
  } else if (args.format == "csv") {
    out << "first,second,mode,n,n0,measure\n"
        << stemOf(args.first) << ',' << stemOf(args.second) << ',' << to_string(config.compare.mode) << ','
        << report.n << ',' << report.n0 << ',' << format_measure(report.measure) << "\n";
  } else {
    out << format_measure(report.measure) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------------------------

struct MatrixArgs {
  CommonFlags common;
  std::vector<std::string> inputs;
  unsigned jobs = 1;
};

std::vector<fs::path> collectScenes(const std::vector<std::string> &inputs) {
  std::vector<fs::path> files;
  for (const auto &input : inputs) {
    const fs::path path(input);
    if (fs::is_directory(path)) {
      for (const auto &entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() and entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
    } else {
      files.push_back(path);
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path &a, const fs::path &b) {
    const auto sa = stemOf(a);
    const auto sb = stemOf(b);
    return sa != sb ? sa < sb : a.string() < b.string();
  });
  return files;
}

/// Runs `task(k)` for k in [0, count) on up to `jobs` threads.
template <class Task>
void parallelFor(std::size_t count, unsigned jobs, Task task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) task(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) task(k);
    });
  }
  for (auto &worker : workers) worker.join();
}

int matrix(const MatrixArgs &args, std::ostream &out, std::ostream &err) {
  const auto config = args.common.resolve();
  if (not usable(config, err)) {
    return kValidationError;
  }
  const auto files = collectScenes(args.inputs);
  if (files.size() < 2) {
    err << "matrix: need at least two scene files, found " << files.size() << "\n";
    return kParseError;
  }
  const Reasoner reasoner(config.partitions, config.tables);
  const auto mm = config.matching();
  const std::size_t count = files.size();

  std::vector<std::optional<PreparedScene>> scenes(count);
  std::vector<std::string> loadErrors(count);
  parallelFor(count, args.jobs, [&](std::size_t k) {
    try {
      scenes[k].emplace(parse_scene(files[k]), reasoner);
    } catch (const Error &e) {
      loadErrors[k] = e.what();
    }
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      pairs.emplace_back(a, b);
    }
  }
  std::vector<std::optional<double>> values(pairs.size());
  std::vector<std::string> pairErrors(pairs.size());
  parallelFor(pairs.size(), args.jobs, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    if (not scenes[a] or not scenes[b]) {
      return;
    }
    try {
      values[k] = measure(*scenes[a], *scenes[b], mm, config.compare).measure;
    } catch (const Error &e) {
      pairErrors[k] = e.what();
    }
  });

  for (std::size_t k = 0; k < count; ++k) {
    if (not loadErrors[k].empty()) {
      err << loadErrors[k] << "\n";
    }
  }
  bool anyOverlapFailure = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (not pairErrors[k].empty()) {
      err << stemOf(files[pairs[k].first]) << " vs " << stemOf(files[pairs[k].second]) << ": " << pairErrors[k]
          << "\n";
      anyOverlapFailure = true;
    }
  }

  for (const auto &file : files) {
    out << ',' << stemOf(file);
  }
  out << "\n";
  std::size_t k = 0;
  for (std::size_t a = 0; a < count; ++a) {
    out << stemOf(files[a]);
    for (std::size_t b = 0; b < count; ++b) {
      if (b < a) {
        out << ",-";
      } else {
        const auto &value = values[k++];
        out << ',' << (value ? format_measure(*value) : "NA");
      }
    }
    out << "\n";
  }

  if (std::any_of(values.begin(), values.end(), [](const auto &v) { return v.has_value(); })) {
    return kOk;
  }
  return anyOverlapFailure ? kInsufficientOverlap : kParseError;
}

// ---------------------------------------------------------------------------------------------

struct ValidateArgs {
  CommonFlags common;
  std::string configPositional;
  std::string dumpTables;
};

int validate(ValidateArgs args, std::ostream &out, std::ostream &err) {
  if (not args.configPositional.empty()) {
    args.common.config = args.configPositional;
  }
  const auto config = args.common.resolve();
  const auto violations = validate_run_config(config);
  out << violations_to_json(violations);
  if (not args.dumpTables.empty()) {
    const fs::path dir(args.dumpTables);
    fs::create_directories(dir);
    auto write = [&](const char *name, const std::string &text) {
      std::ofstream file(dir / name, std::ios::binary);
      file << text;
      if (not file) {
        err << "validate: cannot write " << (dir / name).string() << "\n";
      }
    };
    write("fam1x.grid", dump_grid(config.tables.x));
    write("fam1y.grid", dump_grid(config.tables.y));
    write("fam2.grid", dump_grid(config.tables.two));
  }
  return violations.empty() ? kOk : kValidationError;
}

// ---------------------------------------------------------------------------------------------

struct GenArgs {
  std::uint64_t seed = 1;
  std::size_t count = 5;
  std::vector<double> transform;
  std::string mirror;
  std::vector<std::string> swaps;
  std::size_t extra = 0;
  std::string output;
};

testkit::MirrorAxis parseMirror(const std::string &text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  std::vector<double> values;
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) {
      values.push_back(std::stod(item));
    }
  }
  if (kind == "vertical" and values.size() == 1) return testkit::MirrorAxis::vertical(values[0]);
  if (kind == "horizontal" and values.size() == 1) return testkit::MirrorAxis::horizontal(values[0]);
  if (kind == "point" and values.size() == 2) return testkit::MirrorAxis::point(values[0], values[1]);
  throw ParseError("--mirror: expected vertical:X0, horizontal:Y0 or point:X0,Y0, got '" + text + "'");
}

int gen(const GenArgs &args, std::ostream &out, std::ostream &err) {
  Scene scene = testkit::random_scene(args.seed, args.count);
  if (not args.transform.empty()) {
    if (args.transform.size() != 4) {
      throw ParseError("--transform: expected sx,sy,tx,ty");
    }
    scene = testkit::transform_scene(
        scene, {args.transform[0], args.transform[1], args.transform[2], args.transform[3]});
  }
  if (not args.mirror.empty()) {
    scene = testkit::mirror_scene(scene, parseMirror(args.mirror));
  }
  for (const auto &swap : args.swaps) {
    const auto colon = swap.find(':');
    if (colon == std::string::npos) {
      throw ParseError("--swap: expected A:B, got '" + swap + "'");
    }
    scene = testkit::swap_boxes(scene, ObjectId::number(std::stoll(swap.substr(0, colon))),
                                ObjectId::number(std::stoll(swap.substr(colon + 1))));
  }
  if (args.extra > 0) {
    scene = testkit::add_unmatched(scene, args.extra, args.seed + 1);
  }
  const auto text = serialize_scene(scene);
  if (args.output.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(args.output, std::ios::binary);
  file << text;
  if (not file) {
    err << "gen: cannot write " << args.output << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Fuzzy mutual position similarity and symmetry between annotated scenes", "fmp"};
  app.require_subcommand(1);

  DescribeArgs describeArgs;
  auto *describeCmd = app.add_subcommand("describe", "Print the fuzzy mutual position matrix of a scene");
  describeArgs.common.attach(*describeCmd);
  describeCmd->add_option("scene", describeArgs.scene, "scene JSON file")->required();
  describeCmd->add_option("--format", describeArgs.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  describeCmd->add_option("--top", describeArgs.top, "descriptors per cell, 0 for all");

  CompareArgs compareArgs;
  auto *compareCmd = app.add_subcommand("compare", "Similarity or symmetry measure of two scenes");
  compareArgs.common.attach(*compareCmd);
  compareCmd->add_option("first", compareArgs.first, "scene JSON file")->required();
  compareCmd->add_option("second", compareArgs.second, "scene JSON file")->required();
  compareCmd->add_option("--format", compareArgs.format, "scalar | json | csv")
      ->check(CLI::IsMember({"scalar", "json", "csv"}));

  MatrixArgs matrixArgs;
  auto *matrixCmd = app.add_subcommand("matrix", "All-pairs measures of a set of scenes as CSV");
  matrixArgs.common.attach(*matrixCmd);
  matrixCmd->add_option("inputs", matrixArgs.inputs, "scene files or directories of *.json")->required();
  matrixCmd->add_option("-j,--jobs", matrixArgs.jobs, "worker threads")->check(CLI::PositiveNumber);

  ValidateArgs validateArgs;
  auto *validateCmd = app.add_subcommand("validate", "Check partitions, tables and matching matrices");
  validateArgs.common.attach(*validateCmd);
  validateCmd->add_option("config_file", validateArgs.configPositional, "JSON run configuration");
  validateCmd->add_option("--dump-tables", validateArgs.dumpTables, "write the FAM grids to this directory");

  GenArgs genArgs;
  auto *genCmd = app.add_subcommand("gen", "Generate a seeded random scene");
  genCmd->group("");
  genCmd->add_option("--seed", genArgs.seed);
  genCmd->add_option("--count", genArgs.count)->check(CLI::PositiveNumber);
  genCmd->add_option("--transform", genArgs.transform, "sx,sy,tx,ty")->delimiter(',');
  genCmd->add_option("--mirror", genArgs.mirror, "vertical:X0 | horizontal:Y0 | point:X0,Y0");
  genCmd->add_option("--swap", genArgs.swaps, "A:B, repeatable");
  genCmd->add_option("--extra", genArgs.extra, "unmatched objects to append");
  genCmd->add_option("-o,--output", genArgs.output);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*describeCmd) return describe(describeArgs, out, err);
    if (*compareCmd) return compare(compareArgs, out, err);
    if (*matrixCmd) return matrix(matrixArgs, out, err);
    if (*validateCmd) return validate(validateArgs, out, err);
    if (*genCmd) return gen(genArgs, out, err);
  } catch (const InsufficientOverlap &e) {
    err << "error: " << e.what() << "\n";
    return kInsufficientOverlap;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace fmp::cli

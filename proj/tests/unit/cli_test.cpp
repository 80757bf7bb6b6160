#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fmp/scene_io.hpp"
#include "fmp/testkit.hpp"
#include "fmp_cli/cli.hpp"
#include "fmp_cli/config.hpp"
#include "json.hpp"

namespace fmp::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    _dir = fs::temp_directory_path() / (std::string("fmp_cli_") + info->name());
    fs::remove_all(_dir);
    fs::create_directories(_dir);
    unsetenv("FMP_CONFIG");
  }
  void TearDown() override {
    unsetenv("FMP_CONFIG");
    fs::remove_all(_dir);
  }

  std::string write(const std::string &name, const std::string &text) {
    const auto path = _dir / name;
    fs::create_directories(path.parent_path());
    std::ofstream(path) << text;
    return path.string();
  }
  std::string writeScene(const std::string &name, const Scene &scene) { return write(name, serialize_scene(scene)); }
  std::string path(const std::string &name) const { return (_dir / name).string(); }

  fs::path _dir;
};

TEST_F(CliTest, DescribeSingleObject) {
  const auto file = write("one.json", R"({"objects":[{"id":1,"label":"cup","bbox":[0,0,10,10]}]})");
  const auto r = invoke({"describe", file});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1,1,SA/CE,1.000\n");
}

TEST_F(CliTest, DescribeNestedAsJson) {
  const auto file =
      write("nested.json", R"({"objects":[{"id":1,"label":"a","bbox":[0,0,10,10]},{"id":2,"label":"b","bbox":[2.5,2.5,7.5,7.5]}]})");
  auto r = invoke({"describe", file});
  EXPECT_EQ(r.out, "1,1,SA/CE,1.000\n1,2,LG/CE,1.000\n2,1,IN/CE,1.000\n2,2,SA/CE,1.000\n");
  r = invoke({"describe", file, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["cells"].size(), 4u);
  EXPECT_EQ(doc["cells"][2]["descriptors"][0]["d"], "IN/CE");
}

TEST_F(CliTest, DescribeErrors) {
  auto r = invoke({"describe", path("missing.json")});
  EXPECT_EQ(r.code, kParseError);
  EXPECT_NE(r.err.find("no such file"), std::string::npos);

  const auto bad = write("bad.json", R"({"objects":[{"id":4,"label":"a","bbox":[3,0,3,10]}]})");
  r = invoke({"describe", bad});
  EXPECT_EQ(r.code, kParseError);
  EXPECT_NE(r.err.find("object 4"), std::string::npos) << r.err;

  r = invoke({"describe"});
  EXPECT_EQ(r.code, kParseError);
}

TEST_F(CliTest, CompareDefaultsToScalar) {
  const auto s = testkit::random_scene(7, 6);
  const auto a = writeScene("a.json", s);
  const auto m = writeScene("m.json", testkit::mirror_scene(s, testkit::MirrorAxis::vertical(321.5)));

  auto r = invoke({"compare", a, a});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.000\n");

  r = invoke({"compare", a, m, "--mode", "symx"});
  EXPECT_EQ(r.out, "1.000\n");

  r = invoke({"compare", a, m});
  const double value = std::stod(r.out);
  EXPECT_GE(value, 0.0);
  EXPECT_LE(value, 1.0);
}

TEST_F(CliTest, CompareJsonAndCsv) {
  const auto a = writeScene("a.json", testkit::random_scene(1, 4));
  const auto b = writeScene("b.json", testkit::random_scene(2, 5));
  auto r = invoke({"compare", a, b, "--format", "json", "--threshold", "0.3", "--mode", "symy"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["threshold"].get<double>(), 0.3);
  EXPECT_EQ(doc["mode"], "symy");
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["pairs"].size(), 16u);

  r = invoke({"compare", a, b, "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "first,second,mode,n,n0,measure");
}

TEST_F(CliTest, CompareErrors) {
  const auto a = write("a.json", R"({"objects":[{"id":1,"label":"a","bbox":[0,0,1,1]},{"id":2,"label":"b","bbox":[2,2,3,3]}]})");
  const auto b = write("b.json", R"({"objects":[{"id":3,"label":"a","bbox":[0,0,1,1]},{"id":4,"label":"b","bbox":[2,2,3,3]}]})");
  EXPECT_EQ(invoke({"compare", a, b}).code, kInsufficientOverlap);
  EXPECT_EQ(invoke({"compare", a, path("nope.json")}).code, kParseError);
  EXPECT_EQ(invoke({"compare", a, a, "--mode", "diagonal"}).code, kParseError);
  EXPECT_EQ(invoke({"compare", a, a, "--threshold", "1.5"}).code, kValidationError);
  EXPECT_EQ(invoke({"compare", a, a, "--format", "xml"}).code, kParseError);
}

TEST_F(CliTest, MatrixOfIdenticalScenes) {
  const auto s = testkit::random_scene(3, 5);
  writeScene("set/c.json", s);
  writeScene("set/a.json", s);
  writeScene("set/b.json", s);
  const auto r = invoke({"matrix", path("set")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, ",a,b,c\na,1.000,1.000,1.000\nb,-,1.000,1.000\nc,-,-,1.000\n");
}

TEST_F(CliTest, MatrixSymmetryAndFailures) {
  const auto s = testkit::random_scene(4, 6);
  const auto a = writeScene("a.json", s);
  const auto m = writeScene("m.json", testkit::mirror_scene(s, testkit::MirrorAxis::vertical(10)));
  const auto bad = write("bad.json", "{\"objects\": [");
  auto r = invoke({"matrix", a, m, bad, "--mode", "symx"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, rowA, rowBad, rowM;
  std::getline(lines, header);
  std::getline(lines, rowA);
  std::getline(lines, rowBad);
  std::getline(lines, rowM);
  EXPECT_EQ(header, ",a,bad,m");
  EXPECT_EQ(rowA.substr(rowA.rfind(',') + 1), "1.000");
  EXPECT_NE(rowA.find(",NA,"), std::string::npos);
  EXPECT_EQ(rowBad, "bad,-,NA,NA");
  EXPECT_NE(r.err.find("bad.json"), std::string::npos);
}

TEST_F(CliTest, MatrixIsDeterministicAcrossJobs) {
  std::vector<std::string> args{"matrix"};
  for (int k = 0; k < 6; ++k) {
    args.push_back(writeScene("s" + std::to_string(k) + ".json",
                              testkit::add_unmatched(testkit::random_scene(50 + k, 6), k % 3, k)));
  }
  const auto serial = invoke(args);
  args.insert(args.end(), {"--jobs", "4"});
  const auto parallel = invoke(args);
  EXPECT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST_F(CliTest, MatrixNeedsTwoScenes) {
  const auto a = writeScene("a.json", testkit::random_scene(3, 5));
  EXPECT_EQ(invoke({"matrix", a}).code, kParseError);
}

TEST_F(CliTest, ValidateDefaults) {
  const auto r = invoke({"validate"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["ok"].get<bool>());
  EXPECT_TRUE(doc["violations"].empty());
}

TEST_F(CliTest, ValidateReportsCoverageGap) {
  const auto config = write("gap.json", R"({"partition":{"x":{"el":[-1.0,-0.9,-0.85,-0.75],"er":[0.75,0.85,0.9,1.0]}}})");
  const auto r = invoke({"validate", config});
  EXPECT_EQ(r.code, kValidationError);
  EXPECT_NE(r.out.find("coverage gap"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("partition.x"), std::string::npos);
}

TEST_F(CliTest, ValidateReportsMatchingDiagonal) {
  nlohmann::json doc;
  auto locus = nlohmann::json::array();
  const auto mm = MatchingMatrices::build();
  for (std::size_t r = 0; r < kLocusCount; ++r) {
    locus.push_back(mm.locus[r]);
  }
  locus[3][3] = 0.9;
  doc["matching"]["locus"] = locus;
  const auto config = write("diag.json", doc.dump());
  const auto r = invoke({"validate", config});
  EXPECT_EQ(r.code, kValidationError);
  EXPECT_NE(r.out.find("diagonal must be 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, ConfigFromEnvironmentAndFlagOverride) {
  const auto s = testkit::random_scene(11, 6);
  const auto a = writeScene("a.json", s);
  const auto m = writeScene("m.json", testkit::mirror_scene(s, testkit::MirrorAxis::horizontal(3)));
  const auto config = write("cfg.json", R"({"mode":"symy","threshold":0.2})");
  setenv("FMP_CONFIG", config.c_str(), 1);
  EXPECT_EQ(invoke({"compare", a, m}).out, "1.000\n");
  const auto flagged = invoke({"compare", a, m, "--mode", "sim"});
  const auto plain = invoke({"compare", a, m, "--config", write("empty.json", "{}")});
  EXPECT_EQ(flagged.out.size(), 6u);
  unsetenv("FMP_CONFIG");
  const auto reference = invoke({"compare", a, m, "--threshold", "0.2"});
  EXPECT_EQ(flagged.out, reference.out);
  EXPECT_EQ(plain.out, invoke({"compare", a, m}).out);
}

TEST_F(CliTest, ConfigErrors) {
  EXPECT_EQ(invoke({"validate", write("bad.json", R"({"threshold":"high"})")}).code, kParseError);
  EXPECT_EQ(invoke({"validate", write("bad2.json", R"({"partition":{"x":{"zz":[0,0,0,0]}}})")}).code, kParseError);
  EXPECT_EQ(invoke({"validate", write("bad3.json", R"({"colour":1})")}).code, kParseError);
  EXPECT_EQ(invoke({"validate", path("absent.json")}).code, kParseError);
  EXPECT_EQ(invoke({"validate", write("t.json", R"({"threshold":1.0})")}).code, kValidationError);
}

TEST_F(CliTest, DumpedTablesReloadThroughConfig) {
  auto r = invoke({"validate", "--dump-tables", path("grids")});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(path("grids/fam2.grid")));
  const auto config = write("grids/cfg.json", R"({"tables":{"fam1x":"fam1x.grid","fam1y":"fam1y.grid","fam2":"fam2.grid"},
      "partition":{"x":{"fl":["-inf","-inf",-5,-4]}}})");
  r = invoke({"validate", config});
  EXPECT_EQ(r.code, 0) << r.out << r.err;

  std::ifstream in(path("grids/fam1x.grid"));
  std::stringstream text;
  text << in.rdbuf();
  auto grid = text.str();
  grid.replace(grid.find("SA/H"), 4, "IN/L");
  std::ofstream(path("grids/fam1x.grid")) << grid;
  r = invoke({"validate", config});
  EXPECT_EQ(r.code, kValidationError);
  EXPECT_NE(r.out.find("\"fam\""), std::string::npos);
}

TEST_F(CliTest, RunConfigMatchingAppliesPolicyLast) {
  RunConfig config;
  config.compare.policy = OrientationPolicy::symmetrized;
  EXPECT_EQ(config.matching(), MatchingMatrices::build(OrientationPolicy::symmetrized));
  config.high = 0.6;
  EXPECT_EQ(config.matching().loc(Locus::FA, Locus::NE), 0.6);
}

TEST_F(CliTest, GenReproducesFixtures) {
  auto r = invoke({"gen", "--seed", "7", "--count", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_scene_text(r.out), testkit::random_scene(7, 5));

  r = invoke({"gen", "--seed", "7", "--count", "5", "--mirror", "point:1,2", "--swap", "1:2", "--extra", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto expected = testkit::add_unmatched(
      testkit::swap_boxes(testkit::mirror_scene(testkit::random_scene(7, 5), testkit::MirrorAxis::point(1, 2)),
                          ObjectId::number(1), ObjectId::number(2)),
      2, 8);
  EXPECT_EQ(parse_scene_text(r.out), expected);

  EXPECT_EQ(invoke({"gen", "--mirror", "diagonal:3"}).code, kParseError);
  EXPECT_EQ(invoke({"gen", "--transform", "1,2"}).code, kParseError);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(FormatMeasure, ThreeDecimals) {
  EXPECT_EQ(format_measure(1.0), "1.000");
  EXPECT_EQ(format_measure(2.0 / 3.0), "0.667");
  EXPECT_EQ(format_measure(0.0), "0.000");
}

}  // namespace
}  // namespace fmp::cli

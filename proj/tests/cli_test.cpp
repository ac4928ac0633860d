#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "bench.hpp"
#include "cli.hpp"
#include "polytangent/io.hpp"
#include "polytangent/oracle.hpp"

namespace polytangent::cli {
namespace {

namespace fs = std::filesystem;

constexpr std::string_view kTwoSquares =
    "polytangent v1\npoly A 4 ccw\n0 0\n1 0\n1 1\n0 1\npoly B 4 ccw\n3 0\n4 0\n4 1\n3 1\n";
constexpr std::string_view kNestedTriangles =
    "polytangent v1\npoly C 3 ccw\n0 0\n10 0\n5 5\npoly D 3 ccw\n4 1\n6 1\n5 2\n";
// Corner 0 of each triangle already spans the separating tangent.
constexpr std::string_view kZeroUpdates =
    "polytangent v1\npoly E 3 ccw\n0 0\n1 3\n-2 2\npoly F 3 ccw\n10 0\n8 -2\n11 -3\n";
constexpr std::string_view kZeroUpdatesJson = R"json({
  "schema": "polytangent/tangents/v1",
  "polygons": [
    {
      "name": "E",
      "n": 3,
      "orientation": "ccw"
    },
    {
      "name": "F",
      "n": 3,
      "orientation": "ccw"
    }
  ],
  "validation": {
    "simplicity_checked": true,
    "general_position_checked": true,
    "general_position": true
  },
  "results": [
    {
      "kind": "separating",
      "variant": "separating",
      "status": "found",
      "p0": {
        "index": 0,
        "x": 0,
        "y": 0
      },
      "p1": {
        "index": 0,
        "x": 10,
        "y": 0
      },
      "stats": {
        "iterations": 16,
        "corner_reads": 48,
        "updates": 0,
        "general_position_violated": false
      }
    },
    {
      "kind": "separating",
      "variant": "second-separating",
      "status": "found",
      "p0": {
        "index": 1,
        "x": 1,
        "y": 3
      },
      "p1": {
        "index": 1,
        "x": 8,
        "y": -2
      },
      "stats": {
        "iterations": 16,
        "corner_reads": 48,
        "updates": 4,
        "general_position_violated": false
      }
    },
    {
      "kind": "outer",
      "variant": "outer",
      "status": "found",
      "p0": {
        "index": 1,
        "x": 1,
        "y": 3
      },
      "p1": {
        "index": 0,
        "x": 10,
        "y": 0
      },
      "stats": {
        "iterations": 10,
        "corner_reads": 38,
        "updates": 1,
        "general_position_violated": false
      }
    },
    {
      "kind": "outer",
      "variant": "second-outer",
      "status": "found",
      "p0": {
        "index": 0,
        "x": 0,
        "y": 0
      },
      "p1": {
        "index": 2,
        "x": 11,
        "y": -3
      },
      "stats": {
        "iterations": 12,
        "corner_reads": 44,
        "updates": 2,
        "general_position_violated": false
      }
    }
  ],
  "outer_skipped": false,
  "verified": true,
  "exit_code": 0
}
)json";
constexpr std::string_view kBowTie =
    "polytangent v1\npoly X 4 cw\n0 0\n4 4\n4 0\n0 2\npoly Y 3 ccw\n5 0\n6 0\n5 1\n";

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polytangent_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, std::string_view text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "polytangent");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  static std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + 1)) {
      ++n;
    }
    return n;
  }

  fs::path dir_;
};

TEST_F(CliTest, TwoSquaresAllKindsAgreeWithOracle) {
  const Result r = cli({"tangents", file("sq.txt", kTwoSquares), "--kind=all", "--verify"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::string lines = "\n" + r.out;
  EXPECT_EQ(count(lines, "\nseparating: P0["), 1u);
  EXPECT_EQ(count(lines, "\nsecond-separating: P0["), 1u);
  EXPECT_EQ(count(lines, "\nouter: P0["), 1u);
  EXPECT_EQ(count(lines, "\nsecond-outer: P0["), 1u);
  EXPECT_NE(r.out.find("oracle: agrees"), std::string::npos);
  EXPECT_NE(r.err.find("not in general position"), std::string::npos);
}

TEST_F(CliTest, NestedTrianglesAreNotSeparable) {
  const Result r = cli({"tangents", file("n.txt", kNestedTriangles), "--kind=separating"});
  EXPECT_EQ(r.code, kExitNotSeparable);
  EXPECT_NE(r.out.find("hulls not disjoint"), std::string::npos);
}

TEST_F(CliTest, CrescentsOuterIsPreconditionUncertain) {
  const std::string f = path("c.txt");
  ASSERT_EQ(cli({"gen", "--regime", "overlapping-hulls", "--n0", "14", "--n1", "12", "--out", f})
                .code,
            kExitOk);
  EXPECT_EQ(cli({"tangents", f, "--kind=outer"}).code, kExitPreconditionUncertain);
  const Result d = cli({"check-disjoint", f});
  EXPECT_EQ(d.code, kExitNotSeparable);
  EXPECT_EQ(d.out, "false\n");
}

TEST_F(CliTest, CheckDisjoint) {
  const Result yes = cli({"check-disjoint", file("sq.txt", kTwoSquares)});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_EQ(yes.out, "true\n");
  const Result no = cli({"check-disjoint", file("n.txt", kNestedTriangles)});
  EXPECT_EQ(no.code, kExitNotSeparable);
  EXPECT_EQ(no.out, "false\n");
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(cli({"tangents", path("missing.txt")}).code, kExitInputError);
  EXPECT_EQ(cli({"tangents", file("bow.txt", kBowTie)}).code, kExitInputError);
  EXPECT_EQ(cli({"tangents", file("bad.txt", "polytangent v1\npoly T 3 ccw\n0 0\n0 5\n5 0\n")})
                .code,
            kExitInputError);
  EXPECT_EQ(cli({"tangents", file("sq.txt", kTwoSquares), "--frobnicate"}).code,
            kExitInputError);
  EXPECT_EQ(cli({"tangents", file("sq.txt", kTwoSquares), "--kind=sideways"}).code,
            kExitInputError);
  EXPECT_EQ(cli({"nonsense"}).code, kExitInputError);
  EXPECT_EQ(cli({}).code, kExitInputError);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ClockwiseInputIsReportedInFileIndexing) {
  const std::string ccw = file("a.txt", kTwoSquares);
  const std::vector<Polygon> polys = io::read_file(ccw);
  const std::vector<Polygon> flipped{polys[0].reversed_copy(), polys[1].reversed_copy()};
  const std::string cw = path("b.txt");
  io::write_file(cw, flipped);
  const auto a = nlohmann::json::parse(cli({"tangents", ccw, "--json"}).out);
  const auto b = nlohmann::json::parse(cli({"tangents", cw, "--json"}).out);
  ASSERT_EQ(a["results"].size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    for (const char* side : {"p0", "p1"}) {
      EXPECT_EQ(a["results"][k][side]["x"], b["results"][k][side]["x"]);
      EXPECT_EQ(a["results"][k][side]["y"], b["results"][k][side]["y"]);
      const std::int64_t n = 4;
      EXPECT_EQ(b["results"][k][side]["index"].get<std::int64_t>(),
                (n - a["results"][k][side]["index"].get<std::int64_t>()) % n);
    }
  }
}

TEST_F(CliTest, JsonGolden) {
  const Result r = cli({"tangents", file("e.txt", kZeroUpdates), "--json", "--verify"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, kZeroUpdatesJson);
}

TEST_F(CliTest, JsonSchemaOnFailure) {
  const Result r = cli({"tangents", file("n.txt", kNestedTriangles), "--json"});
  EXPECT_EQ(r.code, kExitNotSeparable);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], kJsonSchema);
  EXPECT_EQ(j["exit_code"], kExitNotSeparable);
  EXPECT_EQ(j["outer_skipped"], true);
  EXPECT_EQ(j["results"][0]["status"], "not-separable");
  EXPECT_TRUE(j["results"][0]["p0"].is_null());
}

TEST_F(CliTest, ValidateCommand) {
  const Result ok = cli({"validate", file("n.txt", kNestedTriangles)});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("valid"), std::string::npos);
  const Result bow = cli({"validate", file("bow.txt", kBowTie)});
  EXPECT_EQ(bow.code, kExitInputError);
  EXPECT_NE(bow.out.find("edges 0 and 2 intersect"), std::string::npos);
  EXPECT_EQ(cli({"validate", file("sq.txt", kTwoSquares)}).code, kExitInputError);
}

TEST_F(CliTest, GenIsDeterministicAndMatchesItsRegime) {
  const std::vector<std::string> flags{"gen", "--seed", "9", "--n0", "20", "--n1", "13",
                                       "--regime", "nested"};
  const Result a = cli(flags);
  const Result b = cli(flags);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  auto with_out = flags;
  with_out.insert(with_out.end(), {"--out", path("g.txt")});
  ASSERT_EQ(cli(with_out).code, kExitOk);
  EXPECT_EQ(slurp(path("g.txt")), a.out);

  const std::vector<Polygon> polys = io::parse(a.out);
  ASSERT_EQ(polys.size(), 2u);
  EXPECT_EQ(polys[0].size(), 20);
  EXPECT_EQ(polys[1].size(), 13);
  const auto report = oracle::classify_all_corner_pairs(polys[0].view(), polys[1].view());
  EXPECT_FALSE(report.hulls_disjoint);
  EXPECT_TRUE(report.outer_pairs.empty());

  EXPECT_EQ(cli({"gen", "--regime", "sideways"}).code, kExitInputError);
  EXPECT_EQ(cli({"gen", "--n0", "2"}).code, kExitInputError);
}

TEST_F(CliTest, TraceSvgTwoSquares) {
  const Result r = cli({"trace-svg", file("sq.txt", kTwoSquares), "--kind", "separating"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(r.out, "<path class=\"polygon\""), 2u);
  EXPECT_GE(count(r.out, "<line class=\"temporary\""), 1u);
  EXPECT_EQ(count(r.out, "stroke-dasharray"), count(r.out, "<line class=\"temporary\""));
  EXPECT_EQ(count(r.out, "<line class=\"tangent\""), 1u);
  EXPECT_NE(r.out.find("</svg>"), std::string::npos);
}

TEST_F(CliTest, TraceSvgOneDashedLinePerUpdate) {
  const std::string f = file("g.txt", cli({"gen", "--seed", "4", "--n0", "30", "--n1", "25"}).out);
  const std::vector<Polygon> polys = io::read_file(f);
  for (const char* kind : {"separating", "second-separating", "outer", "second-outer"}) {
    const Result svg = cli({"trace-svg", f, "--kind", kind});
    ASSERT_EQ(svg.code, kExitOk) << kind;
    const auto j = nlohmann::json::parse(cli({"tangents", f, "--json"}).out);
    std::int64_t updates = -1;
    for (const auto& res : j["results"]) {
      if (res["variant"] == kind) updates = res["stats"]["updates"];
    }
    EXPECT_EQ(count(svg.out, "<line class=\"temporary\""), static_cast<std::size_t>(updates + 1))
        << kind;
  }
}

TEST_F(CliTest, TraceSvgZeroUpdates) {
  const Result r = cli({"trace-svg", file("e.txt", kZeroUpdates)});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(count(r.out, "<line class=\"temporary\""), 1u);
  EXPECT_EQ(count(r.out, "<line class=\"tangent\""), 1u);
}

TEST_F(CliTest, TraceSvgNullOutcome) {
  const Result r = cli({"trace-svg", file("n.txt", kNestedTriangles), "--out", path("n.svg")});
  EXPECT_EQ(r.code, kExitNotSeparable);
  const std::string svg = slurp(path("n.svg"));
  EXPECT_NE(svg.find("NULL"), std::string::npos);
  EXPECT_EQ(count(svg, "<line class=\"tangent\""), 0u);
  EXPECT_EQ(cli({"trace-svg", path("n.txt"), "--kind", "diagonal"}).code, kExitInputError);
}

TEST_F(CliTest, BenchCsvAndDeterminism) {
  const Result r = cli({"bench", "--sizes", "16,32,64", "--reps", "3", "--seed", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "algorithm,n0,n1,rep,status,iterations,corner_reads,wall_time_ns,iteration_bound,"
            "read_bound");
  std::map<std::pair<std::string, std::string>, std::set<std::string>> iterations;
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    ASSERT_EQ(cells.size(), 10u) << line;
    iterations[{cells[0], cells[1]}].insert(cells[5]);
    ++rows;
  }
  EXPECT_EQ(rows, 3 * 3 * 2);
  for (const auto& [key, values] : iterations) EXPECT_EQ(values.size(), 1u) << key.first;

  ASSERT_EQ(cli({"bench", "--sizes", "16", "--algorithm", "outer", "--csv", path("b.csv")}).code,
            kExitOk);
  EXPECT_EQ(count(slurp(path("b.csv")), "\nouter,"), 1u);
  EXPECT_EQ(cli({"bench", "--sizes", "16", "--regime", "bogus"}).code, kExitInputError);
}

TEST(BenchRow, BoundViolationIsDetected) {
  BenchRow row;
  row.iterations = 161;
  row.corner_reads = 10;
  row.iteration_bound = 160;
  row.read_bound = 496;
  EXPECT_FALSE(row.within_bounds());
  row.iterations = 160;
  EXPECT_TRUE(row.within_bounds());
}

}  // namespace
}  // namespace polytangent::cli

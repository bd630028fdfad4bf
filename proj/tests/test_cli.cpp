#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "scstar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = scstar::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }
}  // namespace

TEST(Cli, TableCsv) {
  auto r = run({"table", "--nmax", "14", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n0,n1,n_inf,n,d0,d1,d_inf,genus\n", 0), 0u);
  EXPECT_NE(r.out.find("\n1,6,7,14,1,2,7,3\n"), std::string::npos);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  auto pos = run({"table", "3", "--format", "csv"});
  EXPECT_EQ(pos.out, "n0,n1,n_inf,n,d0,d1,d_inf,genus\n1,1,1,3,1,1,1,1\n");
}

TEST(Cli, TableJsonFlagsUntabulatedRows) {
  auto j = json_of(run({"table", "--nmax", "7"}));
  int flagged = 0;
  for (const auto& row : j["rows"])
    if (row["genus"].get<int>() <= 3 && !row["tabulated"].get<bool>()) ++flagged;
  EXPECT_EQ(flagged, 2);  // (2,2,2;6) and (1,2,4;7)
}

TEST(Cli, TableUsageErrors) {
  EXPECT_EQ(run({"table", "--nmax", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "svg"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, GenusJson) {
  auto r = run({"genus", "--sig", "1,1,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["d"], nlohmann::json({1, 1, 2}));
  EXPECT_EQ(j["triangulation"]["euler"], -2);
  EXPECT_TRUE(j["singular"]["point_at_infinity_singular"].get<bool>());
}

TEST(Cli, MalformedSignature) {
  auto r = run({"genus", "--sig", "4,1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1 <= n0 <= n1 <= n_inf"), std::string::npos);
  EXPECT_EQ(run({"genus", "--sig", "1,x,4"}).code, 2);
  EXPECT_EQ(run({"genus", "--sig", "1,1"}).code, 2);
  EXPECT_EQ(run({"genus", "--sig", "1,1,4;7"}).code, 2);
  EXPECT_EQ(run({"genus", "--sig", "1,1,4;6"}).code, 0);
  EXPECT_EQ(run({"genus"}).code, 2);
}

TEST(Cli, MapJsonSchema) {
  auto r = run({"map", "--sig", "1,1,1", "--grid", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_NEAR(j["C"]["re"].get<double>(), oracle::beta(1.0 / 3, 1.0 / 3), 1e-9);
  EXPECT_EQ(j["angles"][0], (nlohmann::json{{"num", 1}, {"den", 3}}));
  EXPECT_EQ(j["points"].size(), 121u - 2u);
  for (const auto& p : j["points"]) {
    EXPECT_TRUE(p["xi"].contains("re"));
    EXPECT_TRUE(p["z"].contains("im"));
  }
  EXPECT_EQ(run({"map", "--sig", "1,1,1", "--tol", "1e-2"}).code, 2);
}

TEST(Cli, PolygonJsonAndSvg) {
  auto j = json_of(run({"polygon", "--sig", "1,1,4"}));
  EXPECT_EQ(j["vertices"].size(), 12u);
  EXPECT_EQ(j["edge_pairs"]["0"].size(), 6u);
  EXPECT_EQ(j["orbits"]["0"].size(), 2u);
  EXPECT_EQ(j["vertex_classes"].size(), 4u);
  EXPECT_EQ(j["edge_pairs"]["0"][0]["witness"]["j"], "0");
  auto svg = run({"polygon", "--sig", "1,1,4", "--format", "svg"});
  ASSERT_EQ(svg.code, 0);
  std::string why;
  EXPECT_TRUE(oracle::well_formed_xml(svg.out, &why)) << why;
}

TEST(Cli, BilliardSvgReflectionMarks) {
  auto svg = run({"billiard", "--sig", "1,1,4", "--bounces", "100", "--dir", "1,0", "--format", "svg"});
  ASSERT_EQ(svg.code, 0) << svg.err;
  std::string why;
  EXPECT_TRUE(oracle::well_formed_xml(svg.out, &why)) << why;
  auto j = json_of(run({"billiard", "--sig", "1,1,4", "--bounces", "100", "--dir", "1,0"}));
  EXPECT_EQ(oracle::count_occurrences(svg.out, "class=\"reflection\""), j["reflections"].size());
  EXPECT_EQ(j["reflections"].size(), 100u);
  EXPECT_EQ(j["termination"], "budget exhausted");
  EXPECT_EQ(j["unfolded"]["frames"].size(), j["segments"].size());
}

TEST(Cli, BilliardZeroBouncesAndBadStart) {
  auto j = json_of(run({"billiard", "--sig", "1,1,4", "--bounces", "0", "--start", "1,0.5"}));
  EXPECT_EQ(j["segments"].size(), 1u);
  EXPECT_EQ(j["start"], (nlohmann::json{{"re", 1.0}, {"im", 0.5}}));
  auto jv = json_of(run({"polygon", "--sig", "1,1,4"}));
  double vx = jv["vertices"][0]["re"], vy = jv["vertices"][0]["im"];
  char start[64];
  std::snprintf(start, sizeof start, "%.17g,%.17g", vx, vy);
  EXPECT_EQ(run({"billiard", "--sig", "1,1,4", "--start", start}).code, 2);
  EXPECT_EQ(run({"billiard", "--sig", "1,1,4", "--start", "0,0"}).code, 2);
  EXPECT_EQ(run({"billiard", "--sig", "1,1,4", "--dir", "0,0"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"billiard", "--sig", "2,3,5", "--seed", "4"},
                                        std::vector<std::string>{"verify", "--sig", "1,1,4", "--seed", "9"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, VerifyReport) {
  auto r = run({"verify", "--sig", "1,1,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["summary"]["fail"], 0);
  bool hexagon = false;
  for (const auto& e : j["entries"]) {
    EXPECT_TRUE(e["status"] == "pass" || e["status"] == "mismatch-documented");
    if (e["name"] == "hexagon_orbits_ade_bcf") hexagon = e["status"] == "pass";
  }
  EXPECT_TRUE(hexagon);
  auto all = run({"verify", "--all", "6", "--format", "csv"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out.rfind("signature,name,status,detail\n", 0), 0u);
}

TEST(Cli, OutFile) {
  std::string path = ::testing::TempDir() + "scstar_table.csv";
  auto r = run({"table", "--nmax", "4", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run({"table", "--nmax", "4", "--format", "csv"}).out);
  std::remove(path.c_str());
  EXPECT_EQ(run({"table", "--out", "/nonexistent/dir/x.json"}).code, 2);
}

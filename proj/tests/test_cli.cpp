#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = coxdesc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TransversalText) {
  const auto r = run({"transversal", "A2", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\n2\n1 2\n");
}

TEST(Cli, DoubleTransversal) {
  const auto r = run({"transversal", "B3", "1,2", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\n3\n3 2 1 2 3\n");
}

TEST(Cli, ProductJson) {
  const auto r = run({"product", "A2", "1", "1"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["type"], "A2");
  EXPECT_EQ(j["product"].dump(), R"({"-":"1","1":"1"})");
}

TEST(Cli, ProductIsDeterministic) {
  const auto a = run({"product", "D4", "1,3", "2,4"});
  const auto b = run({"product", "D4", "1,3", "2,4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AnalyzeJson) {
  const auto r = run({"analyze", "B3", "2"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 4);
  EXPECT_EQ(j["native"], true);
  EXPECT_EQ(j["integral"], false);
  EXPECT_EQ(j["J"], "1,3");
}

TEST(Cli, AnalyzeTextShowsWitness) {
  const auto r = run({"--format", "text", "analyze", "A3", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("witness"), std::string::npos);
  const auto none = run({"--format", "text", "analyze", "B4", "1"});
  EXPECT_EQ(none.code, 0);
  EXPECT_NE(none.out.find("witness: K = 3,4, t = 2"), std::string::npos) << none.out;
}

TEST(Cli, ChainTableCsv) {
  const auto r = run({"chain-table", "A2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "j\\k,0,1,2\n0,0:6,0:3,0:1\n1,0:3,0:1;1:1,1:1\n2,0:1,1:1,2:1\n");
}

TEST(Cli, ReproduceSuite) {
  const auto r = run({"reproduce", "example_b3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SpotCheckIsSeeded) {
  const auto a = run({"--seed", "5", "spot-check", "B3", "--samples", "5"});
  const auto b = run({"--seed", "5", "spot-check", "B3", "--samples", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GroupOfE8DoesNotEnumerate) {
  const auto r = run({"group", "E8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("696729600"), std::string::npos);
}

TEST(Cli, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "coxdesc_cli_test.csv";
  const auto r = run({"--out", path.string(), "chain-table", "B2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "j\\k,0,1,2");
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"product", "A2", "1", "4"}).code, 2);
  EXPECT_EQ(run({"product", "Z9", "1", "1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "group", "A2"}).code, 2);
  EXPECT_EQ(run({"product", "E8", "1", "1"}).code, 3);
  EXPECT_EQ(run({"--cap", "10", "transversal", "A4", "-"}).code, 3);
  EXPECT_EQ(run({"chain-table", "H3"}).code, 2);
}

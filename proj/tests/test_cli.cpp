#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "critgroup/cli.hpp"

using critgroup::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Outcome call(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("critgroup_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST(Cli, CriticalGroupBipyramid) {
  const auto r = call({"critical-group", "--gen", "bipyramid", "--dim", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["result"]["group"]["invariant_factors"], json::array({"15"}));
  EXPECT_EQ(j["result"]["group"]["order"], "15");
  EXPECT_EQ(j["result"]["route"], "direct");
  EXPECT_EQ(j["input"]["source"], "gen:bipyramid");
}

TEST(Cli, CriticalGroupAutoTreeRecorded) {
  const auto r = call({"critical-group", "--gen", "bipyramid", "--dim", "1", "--tree", "auto", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_EQ(j["result"]["route"], "reduced");
  EXPECT_EQ(j["result"]["tree"]["faces"], json::array({"12", "13", "14", "15"}));
  EXPECT_EQ(j["result"]["group"]["order"], "15");
}

TEST(Cli, TreeCensus) {
  const auto r = call({"trees", "--gen", "bipyramid", "--dim", "2", "--census", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["result"]["count"], "15");
  EXPECT_EQ(r.parsed()["result"]["tau"], "15");
  const auto s = call({"trees", "--gen", "bipyramid", "--dim", "2", "--stream"});
  EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n') >= 15, true);
  EXPECT_NE(s.out.find("tree: 123 124 125 134 135"), std::string::npos);
}

TEST(Cli, SmttVerdict) {
  const auto r = call({"verify", "smtt", "--dim", "2", "--gen", "bipyramid"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("[holds]"), std::string::npos);
}

TEST(Cli, OtherVerifiers) {
  EXPECT_EQ(call({"verify", "main-thm", "--dim", "1", "--gen", "bipyramid"}).code, 0);
  EXPECT_EQ(call({"verify", "sphere", "--gen", "sphere 3"}).code, 0);
  EXPECT_EQ(call({"verify", "alt-product", "--dim", "1", "--gen", "bipyramid"}).code, 0);
  EXPECT_EQ(call({"verify", "simplex", "--n", "5", "--k", "1"}).code, 0);
  EXPECT_EQ(call({"verify", "sphere", "--gen", "bipyramid"}).code, critgroup::cli::kHypothesisViolation);
}

TEST(Cli, Gen) {
  const auto r = call({"gen", "bipyramid"});
  EXPECT_EQ(r.out, "1 2 3\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n2 3 4\n2 3 5\n");
  const auto s = call({"gen", "sphere", "2", "--json"});
  EXPECT_EQ(s.parsed()["result"]["facets"].size(), 4u);
  const auto t = call({"gen", "simplex-skeleton", "6", "2"});
  EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 20);
  EXPECT_EQ(call({"gen", "cycle", "2"}).code, critgroup::cli::kInputError);
  EXPECT_EQ(call({"gen", "torus"}).code, critgroup::cli::kInputError);
}

TEST(Cli, StdinAndFiles) {
  const std::string facets = call({"gen", "bipyramid"}).out;
  const auto a = call({"info", "-", "--json"}, facets);
  ASSERT_EQ(a.code, 0);
  const std::string path = temp_file("bipyramid.txt", facets);
  const auto b = call({"info", path, "--json"});
  ASSERT_EQ(b.code, 0);
  const auto c = call({"info", "--gen", "bipyramid", "--json"});
  EXPECT_EQ(a.parsed()["input"]["digest"], b.parsed()["input"]["digest"]);
  EXPECT_EQ(a.parsed()["input"]["digest"], c.parsed()["input"]["digest"]);
  EXPECT_EQ(a.parsed()["result"], c.parsed()["result"]);
  EXPECT_EQ(a.parsed()["result"]["homology"][3]["group"], "Z^2");
}

TEST(Cli, JsonRoundTrip) {
  const std::vector<std::vector<std::string>> commands = {
      {"info", "--gen", "bipyramid", "--json"},
      {"critical-group", "--gen", "simplex-skeleton 5 2", "--dim", "1", "--json"},
      {"trees", "--gen", "bipyramid", "--dim", "2", "--stream", "--json"},
      {"verify", "smtt", "--gen", "bipyramid", "--dim", "1", "--json"},
      {"verify", "simplex", "--n", "4", "--k", "1", "--json"},
      {"flow", "fire", "--gen", "bipyramid", "--dim", "1", "--face", "23", "--json"},
      {"chip", "group-law", "--gen", "cycle 4", "--json"},
      {"critical-group", "--gen", "cycle 2", "--dim", "0", "--json"},
  };
  for (const auto& args : commands) {
    const auto r = call(args);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    EXPECT_EQ(json::parse(j.dump()).dump(2), j.dump(2));
    for (const char* key : {"command", "input", "result", "warnings"}) EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, ExactLargeIntegers) {
  const auto r = call({"verify", "smtt", "--gen", "simplex-skeleton 6 2", "--dim", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = r.parsed();
  EXPECT_EQ(j["result"]["tau"], "46656");
  EXPECT_TRUE(j["result"]["pi"].is_string());
  const std::string pi = j["result"]["pi"];
  EXPECT_EQ(pi.find_first_not_of("0123456789"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"info", "-"}, "1 2\n3 x\n").code, critgroup::cli::kInputError);
  EXPECT_EQ(call({"info"}).code, critgroup::cli::kInputError);
  EXPECT_EQ(call({"bogus"}).code, critgroup::cli::kInputError);
  EXPECT_EQ(call({"critical-group", "--gen", "bipyramid", "--dim", "7"}).code, critgroup::cli::kInputError);
  EXPECT_EQ(call({"trees", "--gen", "simplex-skeleton 6 2", "--dim", "2", "--budget", "5"}).code,
            critgroup::cli::kBudgetExceeded);
  EXPECT_EQ(call({"verify", "simplex", "--n", "4", "--k", "1"}).code, critgroup::cli::kVerificationFailed);
  const std::string rp2 = temp_file("rp2_tree.txt", call({"gen", "rp2"}).out);
  const auto torsion = call({"critical-group", "--gen", "simplex-skeleton 6 3", "--dim", "2", "--tree", rp2, "--json"});
  EXPECT_EQ(torsion.code, critgroup::cli::kHypothesisViolation);
  EXPECT_EQ(torsion.parsed()["error"]["kind"], "hypothesis");
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, BudgetPartialFlag) {
  const auto r = call({"trees", "--gen", "simplex-skeleton 6 2", "--dim", "2", "--budget", "5", "--json"});
  EXPECT_EQ(r.parsed()["result"]["partial"], true);
}

TEST(Cli, Flow) {
  const auto r = call({"flow", "fire", "--gen", "bipyramid", "--dim", "1", "--face", "23", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["result"]["after"], json::array({"-1", "1", "0", "0", "-3", "1", "1", "-1", "-1"}));
  const auto e = call({"flow", "extend", "--gen", "bipyramid", "--dim", "1", "--theta", "1,0,0,0,0", "--json"});
  EXPECT_EQ(e.parsed()["result"]["conservative"], true);
  const auto q = call({"flow", "equiv", "--gen", "cycle 4", "--dim", "0", "--config", "2 -2 0 0", "--other",
                       "0 0 0 0", "--json"});
  EXPECT_EQ(q.parsed()["result"]["equivalent"], false);
  const auto c = call({"flow", "canonical", "--gen", "bipyramid", "--dim", "1", "--config", "0 0 0 0 1", "--json"});
  EXPECT_EQ(c.parsed()["result"]["moduli"], json::array({"1", "1", "1", "1", "15"}));
  EXPECT_EQ(call({"flow", "fire", "--gen", "bipyramid", "--dim", "1", "--face", "45"}).code,
            critgroup::cli::kInputError);
}

TEST(Cli, Chip) {
  const auto s = call({"chip", "stabilize", "--gen", "complete 4", "--chips", "5 0 0", "--json"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.parsed()["result"]["state"], json::array({"2", "1", "1"}));
  const auto r = call({"chip", "recurrent", "--gen", "complete 3", "--chips", "0 0", "--json"});
  EXPECT_EQ(r.parsed()["result"]["recurrent"], false);
  const auto p = call({"chip", "representative", "--gen", "cycle 5", "--chips", "0 0 0 0", "--json"});
  EXPECT_EQ(p.parsed()["result"]["representative"], json::array({"1", "1", "1", "1"}));
  const auto g = call({"chip", "group-law", "--gen", "cycle 5", "--exhaustive", "--bound", "2"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(call({"chip", "stabilize", "--gen", "cycle 5", "--chips", "1 2"}).code, critgroup::cli::kInputError);
  EXPECT_EQ(call({"chip", "stabilize", "--gen", "cycle 4", "--bank", "0", "--chips", "1 0 0"}).code,
            critgroup::cli::kInputError);
  EXPECT_EQ(call({"chip", "stabilize", "--gen", "cycle 4", "--bank", "9", "--chips", "1 0 0"}).code,
            critgroup::cli::kInputError);
}

TEST(Cli, Fnv) {
  EXPECT_EQ(critgroup::cli::fnv1a64(""), 14695981039346656037ULL);
  EXPECT_EQ(critgroup::cli::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

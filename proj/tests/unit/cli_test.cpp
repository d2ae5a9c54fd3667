#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "reference_values.hpp"

namespace tzfact::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Zeros) {
  EXPECT_EQ(call({"zeros", "--base", "10", "--n", "10"}).out, "2\n");
  EXPECT_EQ(call({"zeros", "--base", "7", "--n", "6"}).out, "0\n");
  const Outcome o = call({"zeros", "--base", "10", "--power", "50"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, std::string(testdata::kZ10Pow50) + "\n");
  const Outcome d = call({"zeros", "--base", "6", "--power", "5", "--digits"});
  EXPECT_EQ(d.out, "3886\n{2,5,5,5,4}_6\n");
}

TEST(Cli, ZerosErrors) {
  EXPECT_EQ(call({"zeros", "--base", "1", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(call({"zeros", "--base", "10"}).code, kExitUsage);
  EXPECT_EQ(call({"zeros", "--base", "10", "--n", "5", "--power", "2"}).code, kExitUsage);
  EXPECT_EQ(call({"zeros", "--base", "10", "--n", "-5"}).code, kExitUsage);
  EXPECT_EQ(call({"zeros", "--base", "10", "--n", "12x"}).code, kExitUsage);
  const Outcome big = call({"zeros", "--base", "10", "--power", "2000000"});
  EXPECT_EQ(big.code, kExitUsage);
  EXPECT_NE(big.err.find("--force"), std::string::npos);
  const Outcome bad = call({"zeros", "--base", "ten", "--n", "5"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("--base"), std::string::npos);
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
}

TEST(Cli, Theta) {
  const Outcome o = call({"theta", "--base", "10"});
  EXPECT_NE(o.out.find("theta(10) = 1/4"), std::string::npos);
  EXPECT_NE(o.out.find("canonical = {0.2,5,overline(0)}_10"), std::string::npos);
  EXPECT_NE(o.out.find("repeating-tail = {0.2,4,overline(9)}_10"), std::string::npos);
  const auto j = nlohmann::json::parse(call({"theta", "--base", "8", "--json"}).out);
  EXPECT_EQ(j["theta"], "1/3");
  EXPECT_EQ(j["canonical"]["period"], (std::vector<int>{2, 5}));
  EXPECT_NE(call({"theta", "--base", "2"}).out.find("theta(2) = 1\n"), std::string::npos);
}

TEST(Cli, Stream) {
  EXPECT_EQ(call({"stream", "--base", "12", "--k", "4"}).out, "{5,11,11,11}_12\n");
}

TEST(Cli, ReportJson) {
  const Outcome o = call({"report", "--base", "10", "--k", "9", "--json"});
  ASSERT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"alpha", "b", "eta", "eta_bound", "k", "theta_floor",
                                            "unequal_digits", "z"}));
  EXPECT_EQ(j["alpha"], "2");
  EXPECT_EQ(j["eta"], 1);
  // Round trip: parse then dump reproduces the line.
  EXPECT_EQ(j.dump() + "\n", o.out);
}

TEST(Cli, ReportText) {
  EXPECT_NE(call({"report", "--base", "6", "--k", "5"}).out.find("unequal_digits = 1"),
            std::string::npos);
  EXPECT_NE(call({"report", "--base", "13", "--k", "20"}).out.find("alpha = 0\n"),
            std::string::npos);
}

TEST(Cli, ScanCsvAndSummary) {
  const Outcome o = call({"scan", "--bases", "2..30", "--ks", "1..10", "--check", "eta-bound",
                          "--jobs", "2"});
  EXPECT_EQ(o.code, kExitOk);
  std::istringstream in(o.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "b,k,alpha,eta,eta_bound,check,pass");
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 29u * 10u);
  EXPECT_NE(o.err.find("theorem_violations=0"), std::string::npos);
}

TEST(Cli, ScanJsonlToFile) {
  const auto path = std::filesystem::temp_directory_path() / "tzfact_cli_scan.jsonl";
  const Outcome o = call({"scan", "--bases", "2..12", "--ks", "b-1", "--check",
                          "eta-tight,conjecture1", "--format", "jsonl", "--out", path.string()});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("cells=11"), std::string::npos);
  std::ifstream in(path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.dump(), line);
    ++n;
  }
  EXPECT_EQ(n, 22u);
  std::filesystem::remove(path);
}

TEST(Cli, ScanErrors) {
  EXPECT_EQ(call({"scan", "--bases", "1..5", "--ks", "1..2"}).code, kExitUsage);
  EXPECT_EQ(call({"scan", "--bases", "2..5", "--ks", "0..2"}).code, kExitUsage);
  EXPECT_EQ(call({"scan", "--bases", "2..5", "--ks", "1..2", "--check", "bogus"}).code,
            kExitUsage);
  EXPECT_EQ(call({"scan", "--bases", "2..5", "--ks", "1..2", "--format", "xml"}).code,
            kExitUsage);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"scan", "--bases", "2..40", "--ks", "1..12", "--check",
                                      "eta-bound,conjecture1,squarefree"};
  auto one = args;
  one.insert(one.end(), {"--jobs", "1"});
  auto three = args;
  three.insert(three.end(), {"--jobs", "3"});
  EXPECT_EQ(call(one).out, call(three).out);
  EXPECT_EQ(call({"theta", "--base", "360", "--json"}).out,
            call({"theta", "--base", "360", "--json"}).out);
}

TEST(Cli, TightEtaAndOeis) {
  EXPECT_EQ(call({"tight-eta", "--limit", "121"}).out, "120\n");
  EXPECT_EQ(call({"tight-eta", "--limit", "100"}).out, "");
  EXPECT_EQ(call({"oeis", "--limit", "5"}).out, "1\n2\n2\n4\n");
  EXPECT_EQ(call({"oeis", "--limit", "1"}).code, kExitUsage);
}

TEST(Cli, Coincidences) {
  const Outcome none = call({"coincidences", "--limit", "100"});
  EXPECT_EQ(none.code, kExitOk);
  EXPECT_NE(none.out.find("excluded"), std::string::npos);
  EXPECT_NE(none.out.find("no pairs"), std::string::npos);
  const Outcome two = call({"coincidences", "--limit", "1369"});
  EXPECT_NE(two.out.find("81 361 {0.overline(10)}_81\n"), std::string::npos);
  EXPECT_NE(two.out.find("343 1369 {0.overline(19)}_343\n"), std::string::npos);
  EXPECT_EQ(call({"coincidences", "--limit", "3"}).code, kExitUsage);
}

TEST(Cli, VerifySingleSuite) {
  const Outcome o = call({"verify", "--suite", "exactness-lemma"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out.rfind("PASS exactness-lemma", 0), 0u);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, kExitUsage);
}

TEST(Cli, Parsers) {
  const Range r = parse_range("3..9", "--bases");
  EXPECT_EQ(r.lo, 3u);
  EXPECT_EQ(r.hi, 9u);
  EXPECT_EQ(parse_range("7", "--bases").hi, 7u);
  EXPECT_EQ(parse_k_range("b-1").kind, KRange::Kind::kBaseMinusOne);
  EXPECT_ANY_THROW(parse_range("9..3", "--bases"));
  EXPECT_ANY_THROW(parse_range("a..3", "--bases"));
}

}  // namespace
}  // namespace tzfact::cli

// Acceptance gate. Prints one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 3 7        run only criteria 3 and 7

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "reference_values.hpp"
#include "tzfact/anomaly.hpp"
#include "tzfact/arith.hpp"
#include "tzfact/legendre.hpp"
#include "tzfact/sweep.hpp"
#include "tzfact/theta.hpp"
#include "tzfact/verify.hpp"

#ifndef TZFACT_FIXTURE_DIR
#define TZFACT_FIXTURE_DIR "."
#endif

namespace {

using namespace tzfact;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0: no enforced budget
  std::function<Verdict()> run;
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l[0] != '#') out.push_back(l);
  }
  return out;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Verdict power_ten_values() {
  Verdict v;
  for (std::size_t k = 1; k <= testdata::kIntroPowers.size(); ++k) {
    const std::string got = cli_out({"zeros", "--base", "10", "--power", std::to_string(k)});
    if (got != std::string(testdata::kIntroPowers[k - 1]) + "\n") {
      v.fail("k=" + std::to_string(k) + " gave " + got);
    }
  }
  if (cli_out({"zeros", "--base", "10", "--power", "50"}) != std::string(testdata::kZ10Pow50) + "\n") {
    v.fail("k=50 mismatch");
  }
  if (cli_out({"zeros", "--base", "10", "--power", "100"}) !=
      std::string(testdata::kZ10Pow100) + "\n") {
    v.fail("k=100 mismatch");
  }
  if (v.pass) v.detail = "k=1..10, 50, 100 exact";
  return v;
}

Verdict digit_table() {
  Verdict v;
  for (const auto& [b, want] : testdata::kDigitTable) {
    const auto got = to_digits(z_power(b, 20), b).digits;
    if (got != want) v.fail("b=" + std::to_string(b) + " gave " + format_digits({b, got}));
  }
  if (v.pass) v.detail = std::to_string(testdata::kDigitTable.size()) + " bases exact";
  return v;
}

Verdict from_suite(const verify::SuiteResult& r) {
  Verdict v;
  v.detail = r.name + ": " + std::to_string(r.cases) + " cases";
  if (!r.passed()) v.fail(r.name + ": " + std::to_string(r.failures) + " failures, first: " + r.first_failure);
  return v;
}

Verdict oracle_grid() { return from_suite(verify::oracle_equivalence(50, 500)); }

Verdict theorem1() { return from_suite(verify::prime_power_theorem(2048, 40)); }

Verdict section4_tails() {
  Verdict v;
  const std::vector<std::pair<Word, std::string>> dec{
      {9, "8"}, {99, "80"}, {999, "791"}, {9999, "7859"}};
  for (const auto& [k, tail] : dec) {
    const AnomalyReport r = report(10, k);
    const std::string z = r.z_value.get_str();
    if (z.size() != k || z.compare(z.size() - tail.size(), tail.size(), tail) != 0 ||
        z.compare(0, 7, "2499999") != 0) {
      v.fail("10^" + std::to_string(k) + " tail is " + z.substr(z.size() - tail.size()));
    }
    // The bold block is exactly the digits that differ from the stream.
    if (r.unequal_digits != tail.size()) {
      v.fail("10^" + std::to_string(k) + " unequal_digits=" + std::to_string(r.unequal_digits));
    }
  }
  const std::vector<std::pair<Word, std::vector<Word>>> senary{
      {5, {4}}, {35, {4, 1}}, {215, {4, 1, 5}}};
  for (const auto& [k, tail] : senary) {
    const AnomalyReport r = report(6, k);
    const auto d = to_digits(r.z_value, 6).digits;
    const std::vector<Word> got(d.end() - tail.size(), d.end());
    if (got != tail || r.unequal_digits != tail.size()) {
      v.fail("6^" + std::to_string(k) + " tail " + format_digits({6, got}));
    }
    if (d.end()[-static_cast<std::ptrdiff_t>(tail.size()) - 1] != 5) {
      v.fail("6^" + std::to_string(k) + " digit before tail is not 5");
    }
  }
  if (v.pass) v.detail = "10^9..10^9999 and 6^5, 6^35, 6^215 tails exact";
  return v;
}

Verdict theorem2_sweep() {
  SweepSpec spec;
  spec.base_lo = 2;
  spec.base_hi = 1000;
  spec.ks = {KRange::Kind::kExplicit, 1, 1000};
  spec.checks = {Check::kEtaBound};
  spec.jobs = jobs();
  const SweepResult r = run_sweep(spec);
  Verdict v;
  v.detail = cli::summary_line(r.summary) + " jobs=" + std::to_string(spec.jobs);
  if (r.summary.cells != 999u * 1000u) v.fail("cell count " + std::to_string(r.summary.cells));
  if (r.summary.theorem_violations != 0) v.fail(v.detail);
  return v;
}

Verdict tight_list() {
  Verdict v;
  std::vector<Word> got;
  for (const auto& l : lines(cli_out({"tight-eta", "--limit", "1000"}))) got.push_back(std::stoull(l));
  if (got != testdata::kTightEta) {
    std::string s;
    for (Word b : got) s += std::to_string(b) + " ";
    v.fail("got " + s);
  } else {
    v.detail = "16 values, 120..945";
  }
  return v;
}

Verdict coincidences() {
  Verdict v;
  const std::string out = cli_out({"coincidences", "--limit", "40000"});
  if (out.find("excluded") == std::string::npos) v.fail("all-ones exclusion not reported");
  const std::vector<std::string> want{"81 361 {0.overline(10)}_81",
                                      "343 1369 {0.overline(19)}_343"};
  const auto got = lines(out);
  if (got != want) {
    std::string s;
    for (const auto& l : got) s += "[" + l + "] ";
    v.fail("expected exactly 2 pairs, got " + std::to_string(got.size()) + ": " + s);
  } else {
    v.detail = "(81,361) period [10], (343,1369) period [19]";
  }
  return v;
}

Verdict squarefree_suite() {
  SweepSpec spec;
  spec.base_lo = 2;
  spec.base_hi = 1000;
  spec.ks = {KRange::Kind::kExplicit, 1, 500};
  spec.checks = {Check::kSquarefree, Check::kConjecture2};
  spec.jobs = jobs();
  const SweepResult r = run_sweep(spec);
  std::uint64_t sf_rows = 0, sf_fail = 0, c2_rows = 0, c2_fail = 0;
  for (const auto& row : r.rows) {
    if (row.check == Check::kSquarefree) {
      ++sf_rows;
      sf_fail += row.pass ? 0 : 1;
    } else {
      ++c2_rows;
      c2_fail += row.pass ? 0 : 1;
    }
  }
  Verdict v;
  v.detail = "squarefree rows=" + std::to_string(sf_rows) + " violations=" +
             std::to_string(sf_fail) + "; conjecture2 rows=" + std::to_string(c2_rows) +
             " violations=" + std::to_string(c2_fail) + " (reported only)";
  if (sf_rows == 0) v.fail("no square-free cells");
  if (sf_fail != 0) v.fail(v.detail);
  return v;
}

Verdict oeis_fixture() {
  Verdict v;
  const std::filesystem::path path = std::filesystem::path(TZFACT_FIXTURE_DIR) / "b090624.txt";
  if (!std::filesystem::exists(path)) {
    v.fail("fixture " + path.string() + " missing; published terms not available offline");
    return v;
  }
  std::ifstream in(path);
  std::vector<std::string> want;
  for (std::string l; std::getline(in, l);) {
    if (l.empty() || l[0] == '#') continue;
    std::istringstream ss(l);
    Word n = 0, a = 0;
    if (ss >> n >> a && n >= 2 && n <= 1000) want.push_back(std::to_string(a));
  }
  const auto got = lines(cli_out({"oeis", "--limit", "1000"}));
  if (want.size() != 999) v.fail("fixture covers " + std::to_string(want.size()) + " of 999 terms");
  for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i) {
    if (want[i] != got[i]) {
      v.fail("n=" + std::to_string(i + 2) + " got " + got[i] + " want " + want[i]);
      break;
    }
  }
  if (v.pass) v.detail = "999 terms match";
  return v;
}

Verdict property_suites() {
  Verdict v;
  std::string names;
  for (const auto& r : {verify::lemma1_agreement(), verify::corollary1(), verify::lemma2_gaps(),
                        verify::digit_count(), verify::gamma_monotone(),
                        verify::expansion_minimality()}) {
    names += r.name + "(" + std::to_string(r.cases) + ") ";
    if (!r.passed()) v.fail(r.name + ": " + r.first_failure);
  }
  if (v.pass) v.detail = names;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "Z_10(10^k) reference values", 1.0, power_ten_values},
      {2, "base-b digit table b=2..25", 1.0, digit_table},
      {3, "oracle equivalence b<=50, n<=500", 120.0, oracle_grid},
      {4, "prime-power theorem b<=2048, k<=40", 60.0, theorem1},
      {5, "anomaly tails base 10 and base 6", 30.0, section4_tails},
      {6, "eta bound sweep b<=1000, k<=1000", 0.0, theorem2_sweep},
      {7, "tight-eta --limit 1000", 10.0, tight_list},
      {8, "coincidences --limit 40000", 60.0, coincidences},
      {9, "square-free bound b<=1000, k<=500", 600.0, squarefree_suite},
      {10, "oeis --limit 1000 against published terms", 0.0, oeis_fixture},
      {11, "standalone property suites", 0.0, property_suites},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      v.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    failed += v.pass ? 0 : 1;
    std::printf("[%s] %2d %-45s %8.2fs  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tzfact/arith.hpp"
#include "tzfact/factor.hpp"
#include "tzfact/legendre.hpp"
#include "tzfact/verify.hpp"

namespace tzfact::cli {
namespace {

using json = nlohmann::json;

constexpr Word kPowerGuard = 1'000'000;

// Raised for bad user input; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Word parse_word(const std::string& text, const char* flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(flag) + ": expected a nonnegative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError(std::string(flag) + ": value out of range: '" + text + "'");
  }
}

std::string join_digits(const std::vector<Word>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::string representation_name(Representation r) {
  return r == Representation::kCanonical ? "canonical" : "repeating-tail";
}

json expansion_json(const BaseExpansion& e) {
  return json{{"base", e.base},
              {"integer_digits", e.integer_digits.digits},
              {"preperiod", e.preperiod},
              {"period", e.period},
              {"exact", e.exact},
              {"representation", representation_name(e.representation)}};
}

struct Options {
  Word base = 0;
  std::string n;
  Word power = 0;
  Word k = 0;
  Word limit = 0;
  bool json = false;
  bool digits = false;
  bool force = false;
  bool all_bases = false;
  std::string bases;
  std::string ks;
  std::vector<std::string> checks;
  std::string out_path;
  std::string format = "csv";
  unsigned jobs = 0;
  std::vector<std::string> suites;
};

int cmd_zeros(const Options& o, const CLI::App& app, std::ostream& out) {
  require_base(o.base, "zeros");
  const bool has_n = app.count("--n") > 0;
  const bool has_power = app.count("--power") > 0;
  if (has_n == has_power) throw UsageError("zeros: give exactly one of --n or --power");
  Natural z;
  if (has_power) {
    if (o.power > kPowerGuard && !o.force) {
      throw UsageError("zeros: --power above " + std::to_string(kPowerGuard) +
                       " requires --force");
    }
    z = z_base(ZQuery{o.base, PowerForm{o.power}});
  } else {
    Natural n;
    if (o.n.empty() || o.n.find_first_not_of("0123456789") != std::string::npos ||
        n.set_str(o.n, 10) != 0) {
      throw UsageError("--n: expected a nonnegative decimal integer, got '" + o.n + "'");
    }
    z = z_base(ZQuery{o.base, n});
  }
  if (o.json) {
    json j{{"base", o.base}, {"z", z.get_str()}};
    if (o.digits) j["digits"] = to_digits(z, o.base).digits;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << z.get_str() << '\n';
  if (o.digits) out << format_digits(to_digits(z, o.base)) << '\n';
  return kExitOk;
}

int cmd_theta(const Options& o, std::ostream& out) {
  require_base(o.base, "theta");
  const Factorization f = factorize(o.base);
  const ThetaValue t = theta(f);
  const BaseExpansion canonical = expand_rational(t.value, o.base, Representation::kCanonical);
  const BaseExpansion tail = expand_rational(t.value, o.base, Representation::kRepeatingTail);
  if (o.json) {
    json j{{"base", o.base},
           {"theta", t.value.get_str()},
           {"argmin", {{"prime", t.argmin.prime}, {"exponent", t.argmin.exponent}}},
           {"exact", canonical.exact},
           {"canonical", expansion_json(canonical)}};
    if (canonical.exact) j["repeating_tail"] = expansion_json(tail);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "theta(" << o.base << ") = " << t.value.get_str() << '\n';
  out << "factorization = " << to_string(f) << '\n';
  out << "argmin = " << t.argmin.prime << '^' << t.argmin.exponent << '\n';
  out << "exact = " << (canonical.exact ? "true" : "false") << '\n';
  out << "preperiod = " << canonical.preperiod.size() << '\n';
  out << "period = " << canonical.period.size() << '\n';
  out << "canonical = " << format_expansion(canonical) << '\n';
  if (canonical.exact) out << "repeating-tail = " << format_expansion(tail) << '\n';
  return kExitOk;
}

int cmd_stream(const Options& o, std::ostream& out) {
  require_base(o.base, "stream");
  if (o.k == 0) throw UsageError("stream: --k must be >= 1");
  const auto digits = theta_digit_stream(o.base, o.k);
  if (o.json) {
    out << json{{"base", o.base}, {"digits", digits}}.dump() << '\n';
  } else {
    out << format_digits(DigitVector{o.base, digits}) << '\n';
  }
  return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out) {
  require_base(o.base, "report");
  if (o.k == 0) throw UsageError("report: --k must be >= 1");
  const AnomalyReport r = report(o.base, o.k);
  if (o.json) {
    out << report_json(r) << '\n';
    return kExitOk;
  }
  out << "b = " << r.b << '\n'
      << "k = " << r.k << '\n'
      << "z = " << r.z_value.get_str() << '\n'
      << "theta_floor = " << r.theta_floor.get_str() << '\n'
      << "alpha = " << r.alpha.get_str() << '\n'
      << "eta = " << r.eta << '\n'
      << "eta_bound = " << r.eta_bound << '\n'
      << "unequal_digits = " << r.unequal_digits << '\n'
      << "conjecture1_bound = " << r.conjecture1_bound << '\n';
  if (r.squarefree_excess) {
    out << "squarefree_excess = " << r.squarefree_excess->get_str() << '\n';
  }
  return kExitOk;
}

int cmd_scan(Options o, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  const Range bases = parse_range(o.bases, "--bases");
  spec.base_lo = bases.lo;
  spec.base_hi = bases.hi;
  spec.ks = parse_k_range(o.ks);
  for (const auto& item : o.checks) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto c = parse_check(name);
      if (!c) throw UsageError("--check: unknown check '" + name + "'");
      spec.checks.push_back(*c);
    }
  }
  if (spec.checks.empty()) spec.checks.push_back(Check::kEtaBound);
  spec.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (o.format == "json-lines") o.format = "jsonl";
  if (o.format != "csv" && o.format != "jsonl") {
    throw UsageError("--format: expected csv or jsonl, got '" + o.format + "'");
  }
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("scan: ") + e.what());
  }

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("--out: cannot write '" + o.out_path + "'");
  }
  const SweepResult result = run_sweep(spec);
  std::ostream& rows = o.out_path.empty() ? out : file;
  if (o.format == "csv") {
    write_csv(result, rows);
  } else {
    write_jsonl(result, rows);
  }
  if (!o.out_path.empty()) {
    file.close();
    if (!file) throw UsageError("--out: write to '" + o.out_path + "' failed");
    out << summary_line(result.summary) << '\n';
  } else {
    err << summary_line(result.summary) << '\n';
  }
  return result.summary.theorem_violations == 0 ? kExitOk : kExitViolation;
}

int cmd_coincidences(const Options& o, std::ostream& out) {
  if (o.limit < 4) throw UsageError("coincidences: --limit must be >= 4");
  const auto family =
      o.all_bases ? CoincidenceFamily::kAllBases : CoincidenceFamily::kPrimePowers;
  const auto pairs = find_coincidence_pairs(o.limit, family);
  if (o.json) {
    json arr = json::array();
    for (const auto& p : pairs) {
      arr.push_back({{"b1", p.b1}, {"b2", p.b2}, {"preperiod", p.key.preperiod},
                     {"period", p.key.period}});
    }
    out << json{{"limit", o.limit},
                {"family", o.all_bases ? "all-bases" : "prime-powers"},
                {"excluded", "all-ones stream {0.overline(1)}"},
                {"pairs", arr}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "# bases <= " << o.limit << ", "
      << (o.all_bases ? "all bases" : "prime-power bases")
      << "; the all-ones stream {0.overline(1)} shared by every prime is excluded\n";
  for (const auto& p : pairs) {
    BaseExpansion shown = p.expansion_b1;
    out << p.b1 << ' ' << p.b2 << ' ' << format_expansion(shown) << '\n';
  }
  if (pairs.empty()) out << "# no pairs\n";
  return kExitOk;
}

int cmd_tight_eta(const Options& o, std::ostream& out) {
  if (o.limit < 2) throw UsageError("tight-eta: --limit must be >= 2");
  for (Word b : find_tight_eta(o.limit)) out << b << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto& suites = verify::registry();
  std::vector<const verify::Suite*> selected;
  if (o.suites.empty()) {
    for (const auto& s : suites) selected.push_back(&s);
  } else {
    for (const auto& name : o.suites) {
      const verify::Suite* found = nullptr;
      for (const auto& s : suites) {
        if (s.name == name) found = &s;
      }
      if (!found) throw UsageError("--suite: unknown suite '" + name + "'");
      selected.push_back(found);
    }
  }
  bool all_ok = true;
  for (const auto* s : selected) {
    const verify::SuiteResult r = s->run();
    all_ok = all_ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases;
    if (!r.passed()) out << " failures=" << r.failures << " first: " << r.first_failure;
    out << '\n';
  }
  return all_ok ? kExitOk : kExitViolation;
}

int cmd_oeis(const Options& o, std::ostream& out) {
  if (o.limit < 2) throw UsageError("oeis: --limit must be >= 2");
  for (Word n = 2; n <= o.limit; ++n) out << inverse_theta(n) << '\n';
  return kExitOk;
}

}  // namespace

std::string format_expansion(const BaseExpansion& e) {
  std::string s = "{" + join_digits(e.integer_digits.digits) + ".";
  if (!e.preperiod.empty()) s += join_digits(e.preperiod) + ",";
  s += "overline(" + join_digits(e.period) + ")}_" + std::to_string(e.base);
  return s;
}

std::string report_json(const AnomalyReport& r) {
  json j;
  j["b"] = r.b;
  j["k"] = r.k;
  j["z"] = r.z_value.get_str();
  j["theta_floor"] = r.theta_floor.get_str();
  j["alpha"] = r.alpha.get_str();
  j["eta"] = r.eta;
  j["eta_bound"] = r.eta_bound;
  j["unequal_digits"] = r.unequal_digits;
  return j.dump();
}

Range parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Word v = parse_word(text, flag);
    return {v, v};
  }
  const Range r{parse_word(text.substr(0, dots), flag), parse_word(text.substr(dots + 2), flag)};
  if (r.lo > r.hi) throw UsageError(std::string(flag) + ": empty range '" + text + "'");
  return r;
}

KRange parse_k_range(const std::string& text) {
  if (text == "b-1") return {KRange::Kind::kBaseMinusOne, 0, 0};
  const Range r = parse_range(text, "--ks");
  if (r.lo == 0) throw UsageError("--ks: k must be >= 1");
  return {KRange::Kind::kExplicit, r.lo, r.hi};
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "b,k,alpha,eta,eta_bound,check,pass\n";
  for (const auto& row : result.rows) {
    out << row.b << ',' << row.k << ',' << row.alpha.get_str() << ',' << row.eta << ','
        << row.eta_bound << ',' << check_name(row.check) << ',' << (row.pass ? 1 : 0) << '\n';
  }
}

void write_jsonl(const SweepResult& result, std::ostream& out) {
  for (const auto& row : result.rows) {
    json j;
    j["b"] = row.b;
    j["k"] = row.k;
    j["alpha"] = row.alpha.get_str();
    j["eta"] = row.eta;
    j["eta_bound"] = row.eta_bound;
    j["check"] = std::string(check_name(row.check));
    j["pass"] = row.pass;
    out << j.dump() << '\n';
  }
}

std::string summary_line(const SweepSummary& s) {
  return "cells=" + std::to_string(s.cells) + " rows=" + std::to_string(s.rows) +
         " theorem_violations=" + std::to_string(s.theorem_violations) +
         " conjecture_violations=" + std::to_string(s.conjecture_violations) +
         " tight_hits=" + std::to_string(s.tight_hits) +
         " max_unequal_digits=" + std::to_string(s.max_unequal_digits);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trailing zeroes of factorials in arbitrary bases", "tzfact"};
  app.require_subcommand(1);
  Options o;

  auto* zeros = app.add_subcommand("zeros", "Z_b(n) or Z_b(b^k)");
  zeros->add_option("--base", o.base, "Base b >= 2")->required();
  zeros->add_option("--n", o.n, "Decimal argument n");
  zeros->add_option("--power", o.power, "Use n = b^k");
  zeros->add_flag("--digits", o.digits, "Also print the base-b digits");
  zeros->add_flag("--force", o.force, "Allow --power above 10^6");
  zeros->add_flag("--json", o.json, "JSON output");

  auto* th = app.add_subcommand("theta", "theta(b) and its base-b expansion");
  th->add_option("--base", o.base, "Base b >= 2")->required();
  th->add_flag("--json", o.json, "JSON output");

  auto* stream = app.add_subcommand("stream", "Leading base-b digits of theta(b)");
  stream->add_option("--base", o.base, "Base b >= 2")->required();
  stream->add_option("--k", o.k, "Number of digits")->required();
  stream->add_flag("--json", o.json, "JSON output");

  auto* rep = app.add_subcommand("report", "Digit anomaly of Z_b(b^k)");
  rep->add_option("--base", o.base, "Base b >= 2")->required();
  rep->add_option("--k", o.k, "Exponent k >= 1")->required();
  rep->add_flag("--json", o.json, "JSON output");

  auto* scan = app.add_subcommand("scan", "Sweep checks over a (b, k) grid");
  scan->add_option("--bases", o.bases, "Base range a..b")->required();
  scan->add_option("--ks", o.ks, "k range a..b, or b-1")->required();
  scan->add_option("--check", o.checks, "Checks (comma separated or repeated)");
  scan->add_option("--out", o.out_path, "Write rows to PATH");
  scan->add_option("--format", o.format, "csv or jsonl");
  scan->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");

  auto* coin = app.add_subcommand("coincidences", "Bases with identical theta expansions");
  coin->add_option("--limit", o.limit, "Largest base")->required();
  coin->add_flag("--all-bases", o.all_bases, "Include bases that are not prime powers");
  coin->add_flag("--json", o.json, "JSON output");

  auto* tight = app.add_subcommand("tight-eta", "Bases with eta(b, b-1) at its bound");
  tight->add_option("--limit", o.limit, "Exclusive upper bound on b")->required();

  auto* ver = app.add_subcommand("verify", "Run the property suites");
  ver->add_option("--suite", o.suites, "Suite name (default: all)");

  auto* oeis = app.add_subcommand("oeis", "1/theta(n) for n = 2..limit");
  oeis->add_option("--limit", o.limit, "Largest n")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*zeros) return cmd_zeros(o, *zeros, out);
    if (*th) return cmd_theta(o, out);
    if (*stream) return cmd_stream(o, out);
    if (*rep) return cmd_report(o, out);
    if (*scan) return cmd_scan(o, out, err);
    if (*coin) return cmd_coincidences(o, out);
    if (*tight) return cmd_tight_eta(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*oeis) return cmd_oeis(o, out);
  } catch (const InconsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tzfact::cli

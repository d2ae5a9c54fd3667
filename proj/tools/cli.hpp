#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tzfact/anomaly.hpp"
#include "tzfact/sweep.hpp"
#include "tzfact/theta.hpp"

namespace tzfact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "{0.2,4,overline(9)}_10"
std::string format_expansion(const BaseExpansion& e);

// One JSON object with fields b, k, z, theta_floor, alpha, eta, eta_bound,
// unequal_digits. Arbitrary-precision fields are decimal strings.
std::string report_json(const AnomalyReport& r);

// "a..b" or a single value.
struct Range {
  Word lo = 0;
  Word hi = 0;
};
Range parse_range(const std::string& text, const char* flag);

// "a..b", a single value, or "b-1".
KRange parse_k_range(const std::string& text);

void write_csv(const SweepResult& result, std::ostream& out);
void write_jsonl(const SweepResult& result, std::ostream& out);
std::string summary_line(const SweepSummary& s);

}  // namespace tzfact::cli

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tzfact/types.hpp"

namespace tzfact {

enum class Check {
  kEtaBound,     // eta <= floor(log_b k) + 2
  kConjecture1,  // unequal digits <= digits(k) + 1
  kConjecture2,  // square-free b: eta <= floor(log_b k) + 1
  kSquarefree,   // square-free b, s >= 2: theta b^k - Z <= k(s-1)
  kLemma2,       // 0 < Z(b^(k+1)) - b Z(b^k), and < b for prime powers
  kDigitCount,   // Z_b(b^k) has exactly k base-b digits
  kTheorem1,     // prime powers: Z equals the stream prefix, alpha in {0, 1}
  kEtaTight,     // statistic: eta == floor(log_b k) + 2
};

std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);

// Conjectures and statistics never count as failures of the library.
bool is_conjecture(Check c);

struct KRange {
  enum class Kind { kExplicit, kBaseMinusOne };
  Kind kind = Kind::kExplicit;
  Word lo = 1;
  Word hi = 1;
};

struct SweepSpec {
  Word base_lo = 2;
  Word base_hi = 2;
  KRange ks;
  std::vector<Check> checks;
  unsigned jobs = 1;
};

struct SweepRow {
  Word b = 0;
  Word k = 0;
  Natural alpha;
  Word eta = 0;
  Word eta_bound = 0;
  Check check = Check::kEtaBound;
  bool pass = false;
};

struct SweepSummary {
  std::uint64_t cells = 0;
  std::uint64_t rows = 0;
  std::uint64_t theorem_violations = 0;
  std::uint64_t conjecture_violations = 0;
  std::uint64_t tight_hits = 0;
  Word max_unequal_digits = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // by (b, k), checks in requested order
  SweepSummary summary;
};

// Throws std::invalid_argument on an empty or malformed range.
void validate(const SweepSpec& spec);

// Fans the bases out over spec.jobs workers; output order does not depend on
// scheduling.
SweepResult run_sweep(const SweepSpec& spec);

}  // namespace tzfact

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tzfact/types.hpp"

namespace tzfact::verify {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

// Legendre's two forms agree for n <= n_max and primes p <= p_max.
SuiteResult lemma1_agreement(Word n_max = 100000, Word p_max = 100);
// Z_p(l p^n) = l Z_p(p^n) + Z_p(l).
SuiteResult corollary1(Word p_max = 50, Word l_max = 500, Word n_max = 10);
// 0 < Z_b(b^(k+1)) - b Z_b(b^k), and < b when b is a prime power.
SuiteResult lemma2_gaps(Word b_max = 200, Word k_max = 60);
// Z_b(b^k) has exactly k base-b digits.
SuiteResult digit_count(Word b_max = 200, Word k_max = 60);
// Z_b(b^(k+1)) b^k > Z_b(b^k) b^(k+1).
SuiteResult gamma_monotone(Word b_max = 200, Word k_max = 60);
// Z_b(b^k) den(theta) < num(theta) b^k.
SuiteResult strict_theta_bound(Word b_max = 200, Word k_max = 60);
// z_base against the materialized factorial.
SuiteResult oracle_equivalence(Word b_max = 50, Word n_max = 500);
// Minimal preperiod and period, and exact reconstruction, for theta(b) in
// both spellings and for every a/m with m <= 64 in bases 2..36.
SuiteResult expansion_minimality(Word b_max = 500);
// Digit stream against the integer route ceil(theta b^c) - 1.
SuiteResult stream_consistency(Word b_max = 500, Word count = 40);
// Prime-power theorem: digit equality, floor/Fermat identities, period
// identities, preperiod <= 1, distinct-digit count, repdigit prediction.
SuiteResult prime_power_theorem(Word b_max = 2048, Word k_max = 40);
// theta(p^n) exact in base p^n iff p^n = 2^(2^m).
SuiteResult exactness_lemma(Word b_max = 65536);

struct Suite {
  std::string_view name;
  std::function<SuiteResult()> run;
};

// Every suite at its default range.
const std::vector<Suite>& registry();

}  // namespace tzfact::verify

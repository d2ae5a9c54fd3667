#pragma once

#include <optional>
#include <vector>

#include "tzfact/legendre.hpp"
#include "tzfact/theta.hpp"
#include "tzfact/types.hpp"

namespace tzfact {

// Digit anomaly of Z_b(b^k) against the leading digits of theta(b).
struct AnomalyReport {
  Word b = 0;
  Word k = 0;
  Natural z_value;      // Z_b(b^k)
  Natural theta_floor;  // floor(theta(b) b^k)
  Natural alpha;        // theta_floor - z_value
  Word eta = 0;         // base-b length of alpha, 0 when alpha == 0
  Word eta_bound = 0;   // floor(log_b k) + 2
  // Trailing block of the k digits of z_value that differs from the first k
  // digits of the theta stream, measured from the first mismatch.
  Word unequal_digits = 0;
  Word conjecture1_bound = 0;  // digits(k) + 1
  // theta(b) b^k - z_value, only for square-free b with at least two primes.
  std::optional<Rational> squarefree_excess;
};

AnomalyReport report(Word b, Word k, LegendreMode mode = kDefaultLegendreMode);

// Integer value of the first k theta-stream digits: ceil(theta(b) b^k) - 1.
// Equals floor(theta b^k) unless theta b^k is an integer.
Natural stream_prefix_value(const Rational& theta_value, Word b, Word k);

// Length of the trailing block where the k-digit strings of `value` and
// `prefix` differ, scanning from the most significant digit. Requires
// value <= prefix < b^k.
Word unequal_trailing_digits(const Natural& value, const Natural& prefix, Word b);

// eta <= floor(log_b k) + 2.
bool check_eta_bound(const AnomalyReport& r);

// unequal_digits <= (floor(log_b k) + 1) + 1. An open conjecture: callers
// record violations, they do not treat them as errors.
bool check_conjecture1(const AnomalyReport& r);

struct SquarefreeCheck {
  Rational excess;     // theta(b) b^k - Z_b(b^k)
  Natural limit;       // k (s - 1)
  bool bound_holds = false;
  Word eta = 0;
  bool conjecture2_holds = false;  // eta <= floor(log_b k) + 1
};

// Throws NotSquarefreeError unless b is square-free with s >= 2 primes.
SquarefreeCheck check_squarefree_bound(Word b, Word k,
                                       LegendreMode mode = kDefaultLegendreMode);
SquarefreeCheck check_squarefree_bound(const AnomalyReport& r);

// All b in [2, b_limit) with eta(b, b-1) == floor(log_b(b-1)) + 2.
std::vector<Word> find_tight_eta(Word b_limit);

enum class CoincidenceFamily {
  kPrimePowers,  // only prime-power bases take part
  kAllBases,
};

struct CoincidencePair {
  Word b1 = 0;
  Word b2 = 0;
  BaseExpansion expansion_b1;  // canonical spelling of theta(b1) in base b1
  ExpansionKey key;
};

// Pairs b1 < b2 <= b_limit whose canonical expansions of theta in their own
// base have identical digit blocks. The all-ones stream {0.(1)} shared by
// every prime is always excluded.
std::vector<CoincidencePair> find_coincidence_pairs(
    Word b_limit, CoincidenceFamily family = CoincidenceFamily::kPrimePowers);

}  // namespace tzfact

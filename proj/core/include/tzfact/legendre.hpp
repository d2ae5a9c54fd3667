#pragma once

#include <variant>

#include "tzfact/factor.hpp"
#include "tzfact/types.hpp"

namespace tzfact {

// How z_prime evaluates Legendre's formula.
//   kCrossCheck: both sum_{i>=1} floor(n/p^i) and (n - sigma_p(n))/(p-1),
//                throwing InconsistencyError if they disagree.
//   kDigitSum:   only the digit-sum form (one pass over the base-p digits).
enum class LegendreMode { kCrossCheck, kDigitSum };

#ifdef NDEBUG
inline constexpr LegendreMode kDefaultLegendreMode = LegendreMode::kDigitSum;
#else
inline constexpr LegendreMode kDefaultLegendreMode = LegendreMode::kCrossCheck;
#endif

// Exponent of p in n!.
Natural z_prime(const Natural& n, Word p, LegendreMode mode = kDefaultLegendreMode);

// floor(z_prime(n, p) / r), the number of trailing zeroes of n! in base p^r.
Natural z_prime_power(const Natural& n, Word p, Word r,
                      LegendreMode mode = kDefaultLegendreMode);

// n = base^k, materialized before evaluation.
struct PowerForm {
  Word k = 0;
};

struct ZQuery {
  Word base = 10;
  std::variant<Natural, PowerForm> argument;
};

// Number of trailing zeroes of n! written in base b.
Natural z_base(const ZQuery& q, LegendreMode mode = kDefaultLegendreMode);
Natural z_base(Word base, const Natural& n, LegendreMode mode = kDefaultLegendreMode);
Natural z_base(const Factorization& f, const Natural& n,
               LegendreMode mode = kDefaultLegendreMode);

// Z_b(b^k).
Natural z_power(Word b, Word k, LegendreMode mode = kDefaultLegendreMode);

// a_k = Z_b(b^k) - b * Z_b(b^(k-1)) for k >= 1, so a_1 = Z_b(b) and
// Z_b(b^k) = sum_{i=1..k} a_i b^(k-i).
Natural z_stream_delta(Word b, Word k, LegendreMode mode = kDefaultLegendreMode);

inline constexpr Word kDefaultOracleCap = 2000;

// Materializes n! and strips factors of base by exact division.
Natural oracle_trailing_zeros(Word n, Word base, Word cap = kDefaultOracleCap);

}  // namespace tzfact

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "tzfact/arith.hpp"
#include "tzfact/factor.hpp"
#include "tzfact/types.hpp"

namespace tzfact {

// theta(b) = lim Z_b(n)/n = min_i 1/(r_i (p_i - 1)), with the prime power
// that attains the minimum (smallest prime on ties).
struct ThetaValue {
  Rational value;
  PrimePower argmin;
};

ThetaValue theta(Word b);
ThetaValue theta(const Factorization& f);

// 1/theta(b) = max_i r_i (p_i - 1).
Word inverse_theta(Word b);
Word inverse_theta(const Factorization& f);

// Exact expansions have two spellings: ...d_t followed by zeros (canonical)
// or ...(d_t - 1) followed by (base-1)s (repeating tail).
enum class Representation { kCanonical, kRepeatingTail };

// q = {int . preperiod overline(period)}_base with minimal preperiod and
// period lengths.
struct BaseExpansion {
  Word base = 10;
  DigitVector integer_digits;
  std::vector<Word> preperiod;
  std::vector<Word> period;
  bool exact = false;
  Representation representation = Representation::kCanonical;

  // i-th fractional digit, 1-based.
  Word fractional_digit(std::size_t i) const;
  std::vector<Word> fractional_digits(std::size_t count) const;
  // Rebuilds the rational from the digit blocks.
  Rational value() const;

  bool operator==(const BaseExpansion&) const = default;
};

// Long division with remainder-cycle detection. Requires 0 <= q <= 1. Zero has
// no repeating-tail spelling and is always returned canonical.
BaseExpansion expand_rational(const Rational& q, Word base,
                              Representation rep = Representation::kCanonical);

// True iff some power of base times q is an integer.
bool is_exact(const Rational& q, Word base);

// b = 2^(2^m), i.e. b + 1 is a Fermat number.
bool is_fermat_base(Word b);

// First `count` fractional base-b digits of theta(b), repeating-tail spelling
// when theta(b) is exact in base b.
std::vector<Word> theta_digit_stream(Word b, std::size_t count);

// Z_b(b^k) / b^k.
Rational gamma(Word b, Word k);

// Period data of theta(p^n) in base p^n. s_min is the least s with
// theta_int = (p^n / n) * R_{sn}^{(p)} integral; pure iff theta_int / p^n is.
struct PrimePowerPeriod {
  Word p = 0;
  Word n = 0;
  Word s_min = 0;
  Natural theta_int;
  bool pure = false;
};

PrimePowerPeriod prime_power_period(Word p, Word n);

// When n divides R_n^{(p)}, Z_{p^n}(p^{nk}) is the repdigit
// R_n^{(p)} R_k^{(p^n)} / n; returns that prediction.
std::optional<Natural> repdigit_witness(Word p, Word n, Word k);

// Key for comparing expansions across bases: digits compared as plain
// integers, base ignored.
struct ExpansionKey {
  std::vector<Word> integer_digits;
  std::vector<Word> preperiod;
  std::vector<Word> period;

  auto operator<=>(const ExpansionKey&) const = default;
};

ExpansionKey expansion_key(const BaseExpansion& e);

}  // namespace tzfact

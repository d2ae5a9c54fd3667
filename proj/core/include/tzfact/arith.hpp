#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tzfact/types.hpp"

namespace tzfact {

// Base-b digits of a Natural, most significant first. Zero is {0}.
struct DigitVector {
  Word base = 10;
  std::vector<Word> digits;

  std::size_t size() const { return digits.size(); }
  bool operator==(const DigitVector&) const = default;
};

DigitVector to_digits(const Natural& n, Word base);

// Inverse of to_digits. Digits must already be in range.
Natural from_digits(const DigitVector& dv);

// Sum of the base-p digits of n.
Natural digit_sum(const Natural& n, Word p);

// Same value as digit_sum, as a machine word. The sum of the digits of an
// integer with B bits is below B * p, so it always fits for inputs that fit in
// memory.
Word digit_sum_word(const Natural& n, Word p);

// (base^k - 1) / (base - 1); zero when k == 0.
Natural repunit(Word base, Word k);

Natural pow(Word base, Word exponent);

// floor(log_base(n)) for n >= 1, integer arithmetic only.
Word floor_log(Word base, const Natural& n);
Word floor_log(Word base, Word n);

// Number of base-b digits of n (1 for n == 0).
Word digit_count(const Natural& n, Word base);

// The repeated digit when n is a base-b repdigit.
std::optional<Word> is_repdigit(const Natural& n, Word base);

// "{d1,d2,...}_b", the brace notation used for printed expansions.
std::string format_digits(const DigitVector& dv);

}  // namespace tzfact

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tzfact/types.hpp"

namespace tzfact {

struct PrimePower {
  Word prime = 0;
  Word exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

// b = p1^r1 * ... * ps^rs with p1 < ... < ps.
struct Factorization {
  std::vector<PrimePower> factors;

  std::size_t distinct_primes() const { return factors.size(); }
  bool operator==(const Factorization&) const = default;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(Word n);

// Trial division by small primes, then Brent's variant of Pollard rho with a
// fixed sequence of polynomial constants. Output is fully deterministic.
Factorization factorize(Word b);

// Product of p^r over the factorization. Wraps silently on overflow; callers
// only use it on factorizations of machine words.
Word reconstruct(const Factorization& f);

std::optional<PrimePower> is_prime_power(const Factorization& f);
bool is_squarefree(const Factorization& f);

// "2^3 * 3^2 * 5"
std::string to_string(const Factorization& f);

}  // namespace tzfact

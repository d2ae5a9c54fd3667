#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tzfact {

// Arbitrary-precision nonnegative integers and exact rationals are carried by
// GMP. Natural values are never negative in this library; the alias does not
// enforce that, the operations do.
using Natural = mpz_class;
using Rational = mpq_class;

using Word = std::uint64_t;

// Base or radix argument below 2.
class InvalidBaseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's mathematical domain (log of zero, q > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two routes that must agree did not. Always a bug in this library.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force oracle asked for a factorial larger than its cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Operation requires a square-free base.
class NotSquarefreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_base(Word base, const char* what) {
  if (base < 2) {
    throw InvalidBaseError(std::string(what) + ": base must be >= 2, got " +
                           std::to_string(base));
  }
}

inline Natural to_natural(Word w) {
  Natural n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
  return n;
}

// Caller guarantees n fits in 64 bits.
inline Word to_word(const Natural& n) {
  Word w = 0;
  mpz_export(&w, nullptr, -1, sizeof(w), 0, 0, n.get_mpz_t());
  return w;
}

inline bool fits_word(const Natural& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

}  // namespace tzfact

#include "tzfact/factor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace tzfact {
namespace {

__extension__ using u128 = unsigned __int128;

Word mul_mod(Word a, Word b, Word m) {
  return static_cast<Word>(static_cast<u128>(a) * b % m);
}

Word pow_mod(Word base, Word e, Word m) {
  Word r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

constexpr std::array<Word, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};

// Small primes used both for trial division and as Miller-Rabin shortcuts.
constexpr Word kTrialLimit = 1000;

const std::vector<Word>& small_primes() {
  static const std::vector<Word> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<Word> out;
    for (Word i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (Word j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// n odd composite, not a perfect power of a small prime. Returns a nontrivial
// divisor.
Word rho_brent(Word n) {
  for (Word c = 1;; ++c) {
    auto f = [&](Word x) { return (mul_mod(x, x, n) + c) % n; };
    Word y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr Word kBatch = 128;
    Word r = 1;
    do {
      x = y;
      for (Word i = 0; i < r; ++i) y = f(y);
      Word k = 0;
      do {
        ys = y;
        for (Word i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batch overshot; replay one step at a time.
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(Word n, std::map<Word, Word>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Word d = rho_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_prime(Word n) {
  if (n < 2) return false;
  for (Word p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  Word d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (Word a : kWitnesses) {
    Word x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(Word b) {
  require_base(b, "factorize");
  std::map<Word, Word> exps;
  Word rest = b;
  for (Word p : small_primes()) {
    if (p * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++exps[p];
    }
  }
  if (rest > 1) {
    if (rest <= kTrialLimit * kTrialLimit) {
      ++exps[rest];  // no factor below sqrt(rest) remains, so rest is prime
    } else {
      split(rest, exps);
    }
  }
  Factorization f;
  f.factors.reserve(exps.size());
  for (const auto& [p, e] : exps) f.factors.push_back({p, e});
  return f;
}

Word reconstruct(const Factorization& f) {
  Word v = 1;
  for (const auto& pp : f.factors) {
    for (Word i = 0; i < pp.exponent; ++i) v *= pp.prime;
  }
  return v;
}

std::optional<PrimePower> is_prime_power(const Factorization& f) {
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

bool is_squarefree(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::string to_string(const Factorization& f) {
  std::string out;
  for (const auto& pp : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

}  // namespace tzfact

#include "tzfact/arith.hpp"

#include <algorithm>
#include <limits>

namespace tzfact {
namespace {

struct Chunk {
  Word power;  // base^width
  unsigned width;
};

// Largest power of base that fits in an unsigned long, so a single
// mpz_tdiv_q_ui peels off `width` digits at once.
Chunk chunk_for(Word base) {
  constexpr Word kMax = std::numeric_limits<unsigned long>::max();
  Chunk c{base, 1};
  while (c.power <= kMax / base) {
    c.power *= base;
    ++c.width;
  }
  return c;
}

// Calls emit(digit) for every base-b digit of n, least significant first,
// including interior zeros. Emits nothing for n == 0.
template <typename Emit>
void for_each_digit_lsf(const Natural& n, Word base, Emit&& emit) {
  if (sgn(n) == 0) return;
  const Chunk chunk = chunk_for(base);
  mpz_class q = n;
  while (sgn(q) != 0) {
    Word rem = mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), chunk.power);
    if (sgn(q) == 0) {
      while (rem != 0) {
        emit(rem % base);
        rem /= base;
      }
    } else {
      for (unsigned i = 0; i < chunk.width; ++i) {
        emit(rem % base);
        rem /= base;
      }
    }
  }
}

}  // namespace

DigitVector to_digits(const Natural& n, Word base) {
  require_base(base, "to_digits");
  if (sgn(n) < 0) throw DomainError("to_digits: negative value");
  DigitVector dv{base, {}};
  if (sgn(n) == 0) {
    dv.digits.push_back(0);
    return dv;
  }
  dv.digits.reserve(mpz_sizeinbase(n.get_mpz_t(), 2));
  for_each_digit_lsf(n, base, [&](Word d) { dv.digits.push_back(d); });
  std::reverse(dv.digits.begin(), dv.digits.end());
  return dv;
}

Natural from_digits(const DigitVector& dv) {
  require_base(dv.base, "from_digits");
  // Horner over chunks so that most multiplications are by a full word.
  const Chunk chunk = chunk_for(dv.base);
  Natural acc = 0;
  Word block = 0;
  Word scale = 1;
  for (Word d : dv.digits) {
    block = block * dv.base + d;
    scale *= dv.base;
    if (scale == chunk.power) {
      acc *= static_cast<unsigned long>(scale);
      acc += static_cast<unsigned long>(block);
      block = 0;
      scale = 1;
    }
  }
  if (scale != 1) {
    acc *= static_cast<unsigned long>(scale);
    acc += static_cast<unsigned long>(block);
  }
  return acc;
}

Word digit_sum_word(const Natural& n, Word p) {
  require_base(p, "digit_sum");
  if (sgn(n) < 0) throw DomainError("digit_sum: negative value");
  Word sum = 0;
  for_each_digit_lsf(n, p, [&](Word d) { sum += d; });
  return sum;
}

Natural digit_sum(const Natural& n, Word p) {
  return to_natural(digit_sum_word(n, p));
}

Natural pow(Word base, Word exponent) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

Natural repunit(Word base, Word k) {
  require_base(base, "repunit");
  if (k == 0) return 0;
  Natural r = pow(base, k) - 1;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), base - 1);
  return r;
}

Word floor_log(Word base, const Natural& n) {
  require_base(base, "floor_log");
  if (sgn(n) <= 0) throw DomainError("floor_log: argument must be >= 1");
  const Word nbits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Word bbits = 0;
  for (Word b = base; b != 0; b >>= 1) ++bbits;
  // 2^(bbits-1) <= base < 2^bbits brackets the answer:
  //   base^lo < 2^(bbits*lo) <= 2^(nbits-1) <= n
  //   base^hi >= 2^((bbits-1)*hi) >= 2^nbits > n
  Word lo = (nbits - 1) / bbits;
  Word hi = bbits == 1 ? nbits : (nbits + bbits - 2) / (bbits - 1);
  // Invariant: base^lo <= n < base^hi.
  while (hi - lo > 1) {
    const Word mid = lo + (hi - lo) / 2;
    if (pow(base, mid) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Word floor_log(Word base, Word n) {
  require_base(base, "floor_log");
  if (n == 0) throw DomainError("floor_log: argument must be >= 1");
  Word e = 0;
  while (n >= base) {
    n /= base;
    ++e;
  }
  return e;
}

Word digit_count(const Natural& n, Word base) {
  if (sgn(n) == 0) return 1;
  return floor_log(base, n) + 1;
}

std::optional<Word> is_repdigit(const Natural& n, Word base) {
  require_base(base, "is_repdigit");
  if (sgn(n) <= 0) return std::nullopt;
  std::optional<Word> first;
  bool uniform = true;
  for_each_digit_lsf(n, base, [&](Word d) {
    if (!first) {
      first = d;
    } else if (d != *first) {
      uniform = false;
    }
  });
  if (!uniform || !first || *first == 0) return std::nullopt;
  return first;
}

std::string format_digits(const DigitVector& dv) {
  std::string out = "{";
  for (std::size_t i = 0; i < dv.digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dv.digits[i]);
  }
  out += "}_";
  out += std::to_string(dv.base);
  return out;
}

}  // namespace tzfact

#include "tzfact/legendre.hpp"

#include <string>

#include "tzfact/arith.hpp"

namespace tzfact {
namespace {

Natural legendre_sum(const Natural& n, Word p) {
  Natural total = 0;
  Natural q = n;
  while (sgn(q) != 0) {
    mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    total += q;
  }
  return total;
}

Natural legendre_digit_form(const Natural& n, Word p) {
  Natural v = n - to_natural(digit_sum_word(n, p));
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p - 1);
  return v;
}

}  // namespace

Natural z_prime(const Natural& n, Word p, LegendreMode mode) {
  require_base(p, "z_prime");
  if (sgn(n) < 0) throw DomainError("z_prime: negative argument");
  Natural by_digits = legendre_digit_form(n, p);
  if (mode == LegendreMode::kCrossCheck) {
    const Natural by_sum = legendre_sum(n, p);
    if (by_sum != by_digits) {
      throw InconsistencyError("z_prime: Legendre forms disagree for p=" +
                               std::to_string(p) + ": " + by_sum.get_str() +
                               " vs " + by_digits.get_str());
    }
  }
  return by_digits;
}

Natural z_prime_power(const Natural& n, Word p, Word r, LegendreMode mode) {
  if (r == 0) throw DomainError("z_prime_power: exponent must be >= 1");
  Natural z = z_prime(n, p, mode);
  if (r != 1) mpz_fdiv_q_ui(z.get_mpz_t(), z.get_mpz_t(), r);
  return z;
}

Natural z_base(const Factorization& f, const Natural& n, LegendreMode mode) {
  bool first = true;
  Natural best;
  for (const auto& pp : f.factors) {
    Natural z = z_prime_power(n, pp.prime, pp.exponent, mode);
    if (first || z < best) {
      best = std::move(z);
      first = false;
    }
  }
  return best;
}

Natural z_base(Word base, const Natural& n, LegendreMode mode) {
  require_base(base, "z_base");
  return z_base(factorize(base), n, mode);
}

Natural z_power(Word b, Word k, LegendreMode mode) {
  require_base(b, "z_power");
  return z_base(factorize(b), pow(b, k), mode);
}

Natural z_base(const ZQuery& q, LegendreMode mode) {
  require_base(q.base, "z_base");
  if (const auto* n = std::get_if<Natural>(&q.argument)) {
    return z_base(q.base, *n, mode);
  }
  return z_power(q.base, std::get<PowerForm>(q.argument).k, mode);
}

Natural z_stream_delta(Word b, Word k, LegendreMode mode) {
  require_base(b, "z_stream_delta");
  if (k == 0) throw DomainError("z_stream_delta: k must be >= 1");
  const Factorization f = factorize(b);
  const Natural upper = z_base(f, pow(b, k), mode);
  const Natural lower = z_base(f, pow(b, k - 1), mode);
  return upper - lower * static_cast<unsigned long>(b);
}

Natural oracle_trailing_zeros(Word n, Word base, Word cap) {
  require_base(base, "oracle_trailing_zeros");
  if (n > cap) {
    throw CapExceededError("oracle_trailing_zeros: n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  }
  Natural fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  Natural count = 0;
  Natural q;
  while (true) {
    const Word rem = mpz_tdiv_q_ui(q.get_mpz_t(), fact.get_mpz_t(), base);
    if (rem != 0) break;
    fact.swap(q);
    ++count;
  }
  return count;
}

}  // namespace tzfact

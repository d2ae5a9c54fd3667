#include "tzfact/theta.hpp"

#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "tzfact/legendre.hpp"

namespace tzfact {

ThetaValue theta(const Factorization& f) {
  if (f.factors.empty()) throw InvalidBaseError("theta: empty factorization");
  // Maximizing r(p-1) minimizes 1/(r(p-1)); strict '>' keeps the smallest
  // prime on ties since factors are sorted.
  PrimePower best = f.factors.front();
  Word best_den = best.exponent * (best.prime - 1);
  for (const auto& pp : f.factors) {
    const Word den = pp.exponent * (pp.prime - 1);
    if (den > best_den) {
      best = pp;
      best_den = den;
    }
  }
  Rational v(1, to_natural(best_den));
  return {v, best};
}

ThetaValue theta(Word b) {
  require_base(b, "theta");
  return theta(factorize(b));
}

Word inverse_theta(const Factorization& f) {
  const ThetaValue t = theta(f);
  return t.argmin.exponent * (t.argmin.prime - 1);
}

Word inverse_theta(Word b) {
  require_base(b, "inverse_theta");
  return inverse_theta(factorize(b));
}

Word BaseExpansion::fractional_digit(std::size_t i) const {
  if (i == 0) throw DomainError("fractional_digit: positions are 1-based");
  if (i <= preperiod.size()) return preperiod[i - 1];
  return period[(i - 1 - preperiod.size()) % period.size()];
}

std::vector<Word> BaseExpansion::fractional_digits(std::size_t count) const {
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(fractional_digit(i));
  return out;
}

Rational BaseExpansion::value() const {
  const Natural whole = from_digits(integer_digits);
  const Natural pre = from_digits({base, preperiod.empty() ? std::vector<Word>{0} : preperiod});
  const Natural rep = from_digits({base, period});
  const Natural bt = pow(base, preperiod.size());
  const Natural bs1 = pow(base, period.size()) - 1;
  // whole + (pre + rep / (b^s - 1)) / b^t
  Rational q(pre * bs1 + rep, bt * bs1);
  q.canonicalize();
  return q + Rational(whole);
}

namespace {

// Remainder -> first position seen, for denominators beyond a machine word.
class RemainderIndex {
 public:
  // Returns the previous position of r, or records `pos` and returns nullopt.
  std::optional<std::size_t> visit(const Natural& r, std::size_t pos) {
    auto [it, inserted] = seen_.try_emplace(r, pos);
    if (!inserted) return it->second;
    return std::nullopt;
  }

 private:
  std::map<Natural, std::size_t> seen_;
};

// Fractional digits of r/den until a remainder repeats; returns the position
// where the cycle starts.
std::size_t long_division(Word r, Word den, Word base, std::vector<Word>& digits) {
  __extension__ using u128 = unsigned __int128;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  constexpr Word kDenseLimit = Word{1} << 22;
  std::vector<std::size_t> dense;
  std::unordered_map<Word, std::size_t> sparse;
  if (den <= kDenseLimit) dense.assign(den, kUnseen);
  for (std::size_t pos = 0;; ++pos) {
    if (!dense.empty()) {
      if (dense[r] != kUnseen) return dense[r];
      dense[r] = pos;
    } else {
      auto [it, inserted] = sparse.try_emplace(r, pos);
      if (!inserted) return it->second;
    }
    const u128 t = static_cast<u128>(r) * base;
    digits.push_back(static_cast<Word>(t / den));
    r = static_cast<Word>(t % den);
  }
}

}  // namespace

BaseExpansion expand_rational(const Rational& q_in, Word base, Representation rep) {
  require_base(base, "expand_rational");
  Rational q = q_in;
  q.canonicalize();
  if (sgn(q) < 0 || q > 1) {
    throw DomainError("expand_rational: q must lie in [0, 1], got " + q.get_str());
  }
  const Natural& den = q.get_den();
  Natural whole;
  Natural r;
  mpz_fdiv_qr(whole.get_mpz_t(), r.get_mpz_t(), q.get_num_mpz_t(), den.get_mpz_t());

  BaseExpansion e;
  e.base = base;
  e.integer_digits = to_digits(whole, base);
  e.exact = is_exact(q, base);

  std::vector<Word> digits;
  std::size_t start = 0;
  if (fits_word(den)) {
    start = long_division(to_word(r), to_word(den), base, digits);
  } else {
    RemainderIndex seen;
    Natural d;
    for (std::size_t pos = 0;; ++pos) {
      if (auto prev = seen.visit(r, pos)) {
        start = *prev;
        break;
      }
      r *= static_cast<unsigned long>(base);
      mpz_fdiv_qr(d.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
      digits.push_back(to_word(d));
    }
  }
  e.preperiod.assign(digits.begin(), digits.begin() + start);
  e.period.assign(digits.begin() + start, digits.end());

  if (rep == Representation::kRepeatingTail && e.exact && sgn(q) != 0) {
    // Minimal preperiod means its last digit is nonzero; with t == 0 the value
    // is a positive integer and the decrement moves into the integer part.
    if (!e.preperiod.empty()) {
      --e.preperiod.back();
    } else {
      e.integer_digits = to_digits(whole - 1, base);
    }
    e.period = {base - 1};
    e.representation = Representation::kRepeatingTail;
  }
  return e;
}

bool is_exact(const Rational& q_in, Word base) {
  require_base(base, "is_exact");
  Rational q = q_in;
  q.canonicalize();
  // Strip from the denominator every prime it shares with base.
  Natural den = q.get_den();
  const Natural b = to_natural(base);
  Natural g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), b.get_mpz_t());
    if (g == 1) break;
    den /= g;
  }
  return den == 1;
}

bool is_fermat_base(Word b) {
  if (!std::has_single_bit(b)) return false;
  const Word log2b = static_cast<Word>(std::countr_zero(b));
  return std::has_single_bit(log2b);
}

std::vector<Word> theta_digit_stream(Word b, std::size_t count) {
  const ThetaValue t = theta(b);
  return expand_rational(t.value, b, Representation::kRepeatingTail).fractional_digits(count);
}

Rational gamma(Word b, Word k) {
  Rational g(z_power(b, k), pow(b, k));
  g.canonicalize();
  return g;
}

PrimePowerPeriod prime_power_period(Word p, Word n) {
  if (!is_prime(p)) throw DomainError("prime_power_period: p must be prime");
  if (n == 0) throw DomainError("prime_power_period: n must be >= 1");
  const Natural pn = pow(p, n);
  const unsigned long nl = n;
  // The period of 1/(n(p-1)) in base p^n is at most n(p-1).
  const Word guard = 2 * n * (p - 1) + 2;
  for (Word s = 1; s <= guard; ++s) {
    Natural t = pn * repunit(p, s * n);
    if (mpz_divisible_ui_p(t.get_mpz_t(), nl) == 0) continue;
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), nl);
    const bool pure = mpz_divisible_p(t.get_mpz_t(), pn.get_mpz_t()) != 0;
    return {p, n, s, t, pure};
  }
  throw InconsistencyError("prime_power_period: no period found for p=" +
                           std::to_string(p) + " n=" + std::to_string(n));
}

std::optional<Natural> repdigit_witness(Word p, Word n, Word k) {
  if (!is_prime(p)) throw DomainError("repdigit_witness: p must be prime");
  if (n == 0 || k == 0) throw DomainError("repdigit_witness: n, k must be >= 1");
  Natural rn = repunit(p, n);
  if (mpz_divisible_ui_p(rn.get_mpz_t(), n) == 0) return std::nullopt;
  mpz_divexact_ui(rn.get_mpz_t(), rn.get_mpz_t(), n);
  const Natural pn = pow(p, n);
  if (!fits_word(pn)) throw DomainError("repdigit_witness: p^n exceeds a machine word");
  return rn * repunit(to_word(pn), k);
}

ExpansionKey expansion_key(const BaseExpansion& e) {
  return {e.integer_digits.digits, e.preperiod, e.period};
}

}  // namespace tzfact

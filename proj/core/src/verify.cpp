#include "tzfact/verify.hpp"

#include <set>

#include "tzfact/anomaly.hpp"
#include "tzfact/arith.hpp"
#include "tzfact/factor.hpp"
#include "tzfact/legendre.hpp"
#include "tzfact/theta.hpp"

namespace tzfact::verify {
namespace {

constexpr auto kMode = LegendreMode::kDigitSum;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  // Counts one case; on failure keeps the first message.
  template <typename MakeMessage>
  void expect(bool ok, MakeMessage&& message) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = message();
  }

  // Turns unexpected exceptions into recorded failures.
  template <typename Body>
  void guard(Body&& body, const std::string& where) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return where + ": " + e.what(); });
    }
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string at(Word b, Word k) {
  return "b=" + std::to_string(b) + " k=" + std::to_string(k);
}

std::vector<Word> primes_up_to(Word n) {
  std::vector<Word> out;
  for (Word p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Z_b(b^k) for k = 0..k_max.
std::vector<Natural> power_values(Word b, Word k_max) {
  const Factorization f = factorize(b);
  std::vector<Natural> z;
  z.reserve(k_max + 1);
  Natural bk = 1;
  for (Word k = 0; k <= k_max; ++k) {
    z.push_back(z_base(f, bk, kMode));
    bk *= static_cast<unsigned long>(b);
  }
  return z;
}

bool has_shorter_period(const std::vector<Word>& period) {
  const std::size_t s = period.size();
  for (std::size_t d = 1; d < s; ++d) {
    if (s % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < s && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) return true;
  }
  return false;
}

// Empty string when e is a minimal, faithful spelling of q.
std::string expansion_problem(const BaseExpansion& e, const Rational& q) {
  if (e.period.empty()) return "empty period";
  for (Word d : e.preperiod) {
    if (d >= e.base) return "preperiod digit out of range";
  }
  for (Word d : e.period) {
    if (d >= e.base) return "period digit out of range";
  }
  if (e.value() != q) return "reconstruction " + e.value().get_str() + " != " + q.get_str();
  // A preperiod ending in the period's last digit could be rotated away.
  if (!e.preperiod.empty() && e.preperiod.back() == e.period.back()) {
    return "preperiod not minimal";
  }
  if (has_shorter_period(e.period)) return "period not minimal";
  const bool zero_tail = e.period == std::vector<Word>{0};
  const bool full_tail = e.period == std::vector<Word>{e.base - 1};
  if (e.exact && !zero_tail && !full_tail) return "exact value with a nontrivial period";
  if (!e.exact && (zero_tail || full_tail)) return "inexact value with a trivial period";
  return {};
}

}  // namespace

SuiteResult lemma1_agreement(Word n_max, Word p_max) {
  Recorder rec("lemma1-agreement");
  const auto primes = primes_up_to(p_max);
  Natural n_big;
  for (Word p : primes) {
    for (Word n = 0; n <= n_max; ++n) {
      Word by_sum = 0;
      for (Word q = n / p; q != 0; q /= p) by_sum += q;
      n_big = to_natural(n);
      const Word sigma = digit_sum_word(n_big, p);
      const Word by_digits = (n - sigma) / (p - 1);
      const bool divisible = (n - sigma) % (p - 1) == 0;
      const bool ok = divisible && by_sum == by_digits &&
                      z_prime(n_big, p, kMode) == to_natural(by_sum);
      rec.expect(ok, [&] {
        return "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": sum form " +
               std::to_string(by_sum) + ", digit form " + std::to_string(by_digits);
      });
    }
  }
  return rec.done();
}

SuiteResult corollary1(Word p_max, Word l_max, Word n_max) {
  Recorder rec("corollary1");
  for (Word p : primes_up_to(p_max)) {
    for (Word n = 0; n <= n_max; ++n) {
      const Natural pn = pow(p, n);
      const Natural zpn = z_prime(pn, p, kMode);
      for (Word l = 1; l <= l_max; ++l) {
        const Natural lhs = z_prime(pn * static_cast<unsigned long>(l), p, kMode);
        const Natural rhs = zpn * static_cast<unsigned long>(l) + z_prime(to_natural(l), p, kMode);
        rec.expect(lhs == rhs, [&] {
          return "p=" + std::to_string(p) + " l=" + std::to_string(l) +
                 " n=" + std::to_string(n);
        });
      }
    }
  }
  return rec.done();
}

SuiteResult lemma2_gaps(Word b_max, Word k_max) {
  Recorder rec("lemma2-gaps");
  for (Word b = 2; b <= b_max; ++b) {
    const bool pp = is_prime_power(factorize(b)).has_value();
    const auto z = power_values(b, k_max + 1);
    for (Word k = 1; k <= k_max; ++k) {
      const Natural gap = z[k + 1] - z[k] * static_cast<unsigned long>(b);
      const bool ok = sgn(gap) > 0 && (!pp || gap < to_natural(b));
      rec.expect(ok, [&] { return at(b, k) + " gap=" + gap.get_str(); });
    }
  }
  return rec.done();
}

SuiteResult digit_count(Word b_max, Word k_max) {
  Recorder rec("digit-count");
  for (Word b = 2; b <= b_max; ++b) {
    const auto z = power_values(b, k_max);
    for (Word k = 1; k <= k_max; ++k) {
      // Independent of floor_log: b^(k-1) <= Z < b^k.
      const bool ok = pow(b, k - 1) <= z[k] && z[k] < pow(b, k) &&
                      to_digits(z[k], b).size() == k;
      rec.expect(ok, [&] { return at(b, k); });
    }
  }
  return rec.done();
}

SuiteResult gamma_monotone(Word b_max, Word k_max) {
  Recorder rec("gamma-monotone");
  for (Word b = 2; b <= b_max; ++b) {
    const auto z = power_values(b, k_max + 1);
    for (Word k = 1; k <= k_max; ++k) {
      const bool ok = z[k + 1] * pow(b, k) > z[k] * pow(b, k + 1);
      rec.expect(ok, [&] { return at(b, k); });
    }
  }
  return rec.done();
}

SuiteResult strict_theta_bound(Word b_max, Word k_max) {
  Recorder rec("strict-theta-bound");
  for (Word b = 2; b <= b_max; ++b) {
    const Rational th = theta(b).value;
    const auto z = power_values(b, k_max);
    for (Word k = 1; k <= k_max; ++k) {
      const bool ok = z[k] * th.get_den() < th.get_num() * pow(b, k);
      rec.expect(ok, [&] { return at(b, k); });
    }
  }
  return rec.done();
}

SuiteResult oracle_equivalence(Word b_max, Word n_max) {
  Recorder rec("oracle-equivalence");
  for (Word b = 2; b <= b_max; ++b) {
    for (Word n = 0; n <= n_max; ++n) {
      rec.guard(
          [&] {
            const Natural fast = z_base(b, to_natural(n), LegendreMode::kCrossCheck);
            const Natural slow = oracle_trailing_zeros(n, b, n_max);
            rec.expect(fast == slow, [&] {
              return "b=" + std::to_string(b) + " n=" + std::to_string(n) + ": " +
                     fast.get_str() + " vs " + slow.get_str();
            });
          },
          "b=" + std::to_string(b) + " n=" + std::to_string(n));
    }
  }
  return rec.done();
}

SuiteResult expansion_minimality(Word b_max) {
  Recorder rec("expansion-minimality");
  auto check = [&](const Rational& q, Word base) {
    for (auto rep : {Representation::kCanonical, Representation::kRepeatingTail}) {
      const BaseExpansion e = expand_rational(q, base, rep);
      const std::string problem = expansion_problem(e, q);
      rec.expect(problem.empty(), [&] {
        return q.get_str() + " base " + std::to_string(base) + ": " + problem;
      });
    }
  };
  for (Word b = 2; b <= b_max; ++b) check(theta(b).value, b);
  for (Word base = 2; base <= 36; ++base) {
    for (Word m = 1; m <= 64; ++m) {
      for (Word a = 0; a <= m; ++a) {
        Rational q(to_natural(a), to_natural(m));
        q.canonicalize();
        check(q, base);
      }
    }
  }
  return rec.done();
}

SuiteResult stream_consistency(Word b_max, Word count) {
  Recorder rec("stream-consistency");
  for (Word b = 2; b <= b_max; ++b) {
    const ThetaValue th = theta(b);
    const auto stream = theta_digit_stream(b, count);
    const auto from_tail =
        expand_rational(th.value, b, Representation::kRepeatingTail).fractional_digits(count);
    DigitVector by_integers = to_digits(stream_prefix_value(th.value, b, count), b);
    by_integers.digits.insert(by_integers.digits.begin(), count - by_integers.size(), 0);
    rec.expect(stream == from_tail && stream == by_integers.digits,
               [&] { return "b=" + std::to_string(b); });
  }
  return rec.done();
}

SuiteResult prime_power_theorem(Word b_max, Word k_max) {
  Recorder rec("prime-power-theorem");
  for (Word b = 2; b <= b_max; ++b) {
    const Factorization f = factorize(b);
    const auto pp = is_prime_power(f);
    if (!pp) continue;
    const Word p = pp->prime;
    const Word n = pp->exponent;
    const std::string where = "b=" + std::to_string(b);
    rec.guard(
        [&] {
          const Rational th = theta(f).value;
          const bool fermat = is_fermat_base(b);
          const BaseExpansion canonical = expand_rational(th, b, Representation::kCanonical);
          const BaseExpansion tail = expand_rational(th, b, Representation::kRepeatingTail);
          const PrimePowerPeriod ppp = prime_power_period(p, n);
          const auto stream = tail.fractional_digits(k_max + ppp.s_min + 1);
          const auto z = power_values(b, k_max + ppp.s_min + 1);

          for (Word k = 1; k <= k_max; ++k) {
            // Digits of Z_b(b^k) are the first k stream digits, and each
            // stream digit is the increment a_k.
            Natural assembled = 0;
            for (Word i = 0; i < k; ++i) {
              assembled = assembled * static_cast<unsigned long>(b) + static_cast<unsigned long>(stream[i]);
            }
            const Natural a_k = z[k] - z[k - 1] * static_cast<unsigned long>(b);
            rec.expect(assembled == z[k] && a_k == to_natural(stream[k - 1]),
                       [&] { return at(b, k) + ": digit equality"; });

            const Natural scaled = th.get_num() * pow(b, k);
            Natural fl;
            mpz_fdiv_q(fl.get_mpz_t(), scaled.get_mpz_t(), th.get_den_mpz_t());
            const bool integral = mpz_divisible_p(scaled.get_mpz_t(), th.get_den_mpz_t()) != 0;
            const bool ok = fermat ? (integral && z[k] == fl - 1) : (!integral && z[k] == fl);
            rec.expect(ok, [&] { return at(b, k) + ": floor/Fermat identity"; });

            if (auto w = repdigit_witness(p, n, k)) {
              rec.expect(*w == z[k] && is_repdigit(z[k], b).has_value(),
                         [&] { return at(b, k) + ": repdigit prediction"; });
            }
          }

          // Period identity at s_min.
          if (ppp.pure) {
            Natural expected = ppp.theta_int;
            mpz_divexact_ui(expected.get_mpz_t(), expected.get_mpz_t(), b);
            rec.expect(z[ppp.s_min] == expected, [&] { return where + ": Z(b^s) = theta/b"; });
          } else {
            rec.expect(z[ppp.s_min + 1] == ppp.theta_int + z[1],
                       [&] { return where + ": Z(b^(s+1)) = theta + Z(b)"; });
          }

          // Shape of the expansion: preperiod <= 1, pure iff no preperiod,
          // period length s_min, first digit differs from the period's last.
          for (const BaseExpansion* e : {&canonical, &tail}) {
            bool ok = e->preperiod.size() <= 1;
            if (e->preperiod.size() == 1) ok = ok && e->preperiod[0] != e->period.back();
            rec.expect(ok, [&] { return where + ": preperiod shape"; });
          }
          rec.expect(tail.period.size() == ppp.s_min && tail.preperiod.empty() == ppp.pure,
                     [&] { return where + ": s_min " + std::to_string(ppp.s_min) +
                                  " vs period " + std::to_string(tail.period.size()); });

          std::set<Word> distinct(tail.preperiod.begin(), tail.preperiod.end());
          distinct.insert(tail.period.begin(), tail.period.end());
          const bool count_ok =
              ppp.pure ? distinct.size() == ppp.s_min : distinct.size() <= ppp.s_min + 1;
          rec.expect(count_ok, [&] { return where + ": distinct digit count"; });
        },
        where);
  }
  return rec.done();
}

SuiteResult exactness_lemma(Word b_max) {
  Recorder rec("exactness-lemma");
  for (Word b = 2; b <= b_max; ++b) {
    const Factorization f = factorize(b);
    const auto pp = is_prime_power(f);
    if (!pp) continue;
    const bool exact = is_exact(theta(f).value, b);
    // p = 2 and r a power of two, stated without is_fermat_base.
    const bool predicted = pp->prime == 2 && (pp->exponent & (pp->exponent - 1)) == 0;
    rec.expect(exact == predicted && exact == is_fermat_base(b),
               [&] { return "b=" + std::to_string(b); });
  }
  return rec.done();
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"lemma1-agreement", [] { return lemma1_agreement(); }},
      {"corollary1", [] { return corollary1(); }},
      {"lemma2-gaps", [] { return lemma2_gaps(); }},
      {"digit-count", [] { return digit_count(); }},
      {"gamma-monotone", [] { return gamma_monotone(); }},
      {"strict-theta-bound", [] { return strict_theta_bound(); }},
      {"oracle-equivalence", [] { return oracle_equivalence(); }},
      {"expansion-minimality", [] { return expansion_minimality(); }},
      {"stream-consistency", [] { return stream_consistency(); }},
      {"prime-power-theorem", [] { return prime_power_theorem(); }},
      {"exactness-lemma", [] { return exactness_lemma(); }},
  };
  return suites;
}

}  // namespace tzfact::verify

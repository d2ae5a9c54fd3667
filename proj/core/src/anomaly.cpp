#include "tzfact/anomaly.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tzfact/arith.hpp"
#include "tzfact/factor.hpp"

namespace tzfact {

Natural stream_prefix_value(const Rational& theta_value, Word b, Word k) {
  Natural scaled = theta_value.get_num() * pow(b, k);
  Natural q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), theta_value.get_den_mpz_t());
  return q - 1;
}

Word unequal_trailing_digits(const Natural& value, const Natural& prefix, Word b) {
  const Natural gap = prefix - value;
  if (sgn(gap) < 0) throw DomainError("unequal_trailing_digits: value exceeds prefix");
  if (sgn(gap) == 0) return 0;
  // Digits at positions >= j agree iff subtracting gap from prefix does not
  // borrow out of the low j digits, i.e. prefix mod b^j >= gap.
  const Natural bb = to_natural(b);
  Natural place = 1;
  Natural low = 0;
  Natural rest = prefix;
  Natural digit;
  for (Word j = 1;; ++j) {
    mpz_fdiv_qr_ui(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), b);
    low += digit * place;
    place *= bb;
    if (low >= gap) return j;
    if (sgn(rest) == 0) return j;
  }
}

AnomalyReport report(Word b, Word k, LegendreMode mode) {
  require_base(b, "report");
  if (k == 0) throw DomainError("report: k must be >= 1");
  const Factorization f = factorize(b);
  const ThetaValue th = theta(f);
  const Natural bk = pow(b, k);

  AnomalyReport r;
  r.b = b;
  r.k = k;
  r.z_value = z_base(f, bk, mode);
  const Natural scaled = th.value.get_num() * bk;
  mpz_fdiv_q(r.theta_floor.get_mpz_t(), scaled.get_mpz_t(), th.value.get_den_mpz_t());
  r.alpha = r.theta_floor - r.z_value;
  if (sgn(r.alpha) < 0) {
    throw InconsistencyError("report: Z_b(b^k) exceeds floor(theta b^k) at b=" +
                             std::to_string(b) + " k=" + std::to_string(k));
  }
  r.eta = sgn(r.alpha) == 0 ? 0 : floor_log(b, r.alpha) + 1;
  r.eta_bound = floor_log(b, k) + 2;
  r.conjecture1_bound = floor_log(b, k) + 2;
  r.unequal_digits =
      unequal_trailing_digits(r.z_value, stream_prefix_value(th.value, b, k), b);
  if (is_squarefree(f) && f.distinct_primes() >= 2) {
    Rational excess(scaled, th.value.get_den());
    excess -= Rational(r.z_value);
    excess.canonicalize();
    r.squarefree_excess = excess;
  }
  return r;
}

bool check_eta_bound(const AnomalyReport& r) { return r.eta <= r.eta_bound; }

bool check_conjecture1(const AnomalyReport& r) {
  return r.unequal_digits <= r.conjecture1_bound;
}

SquarefreeCheck check_squarefree_bound(const AnomalyReport& r) {
  const Factorization f = factorize(r.b);
  if (!is_squarefree(f) || f.distinct_primes() < 2 || !r.squarefree_excess) {
    throw NotSquarefreeError("check_squarefree_bound: " + std::to_string(r.b) +
                             " is not square-free with at least two primes");
  }
  SquarefreeCheck c;
  c.excess = *r.squarefree_excess;
  c.limit = to_natural(r.k) * to_natural(f.distinct_primes() - 1);
  c.bound_holds = c.excess <= Rational(c.limit);
  c.eta = r.eta;
  c.conjecture2_holds = r.eta <= floor_log(r.b, r.k) + 1;
  return c;
}

SquarefreeCheck check_squarefree_bound(Word b, Word k, LegendreMode mode) {
  require_base(b, "check_squarefree_bound");
  const Factorization f = factorize(b);
  if (!is_squarefree(f) || f.distinct_primes() < 2) {
    throw NotSquarefreeError("check_squarefree_bound: " + std::to_string(b) +
                             " is not square-free with at least two primes");
  }
  return check_squarefree_bound(report(b, k, mode));
}

std::vector<Word> find_tight_eta(Word b_limit) {
  std::vector<Word> hits;
  for (Word b = 2; b < b_limit; ++b) {
    const AnomalyReport r = report(b, b - 1, LegendreMode::kDigitSum);
    if (r.eta == r.eta_bound) hits.push_back(b);
  }
  return hits;
}

std::vector<CoincidencePair> find_coincidence_pairs(Word b_limit, CoincidenceFamily family) {
  const ExpansionKey all_ones{{0}, {}, {1}};
  std::map<ExpansionKey, std::vector<std::pair<Word, BaseExpansion>>> buckets;
  for (Word b = 2; b <= b_limit; ++b) {
    const Factorization f = factorize(b);
    if (family == CoincidenceFamily::kPrimePowers && !is_prime_power(f)) continue;
    BaseExpansion e = expand_rational(theta(f).value, b, Representation::kCanonical);
    ExpansionKey key = expansion_key(e);
    if (key == all_ones) continue;
    buckets[std::move(key)].emplace_back(b, std::move(e));
  }
  std::vector<CoincidencePair> pairs;
  for (const auto& [key, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        pairs.push_back({members[i].first, members[j].first, members[i].second, key});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return std::pair(x.b1, x.b2) < std::pair(y.b1, y.b2);
  });
  return pairs;
}

}  // namespace tzfact

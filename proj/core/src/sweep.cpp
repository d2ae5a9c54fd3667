#include "tzfact/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "tzfact/anomaly.hpp"
#include "tzfact/arith.hpp"
#include "tzfact/factor.hpp"
#include "tzfact/legendre.hpp"
#include "tzfact/theta.hpp"

namespace tzfact {
namespace {

constexpr std::array<std::pair<Check, std::string_view>, 8> kCheckNames = {{
    {Check::kEtaBound, "eta-bound"},
    {Check::kConjecture1, "conjecture1"},
    {Check::kConjecture2, "conjecture2"},
    {Check::kSquarefree, "squarefree"},
    {Check::kLemma2, "lemma2"},
    {Check::kDigitCount, "digit-count"},
    {Check::kTheorem1, "theorem1"},
    {Check::kEtaTight, "eta-tight"},
}};

struct BaseResult {
  std::vector<SweepRow> rows;
  std::uint64_t cells = 0;
  Word max_unequal = 0;
};

BaseResult sweep_base(Word b, const SweepSpec& spec) {
  constexpr auto kMode = LegendreMode::kDigitSum;
  const Factorization f = factorize(b);
  const bool prime_power = is_prime_power(f).has_value();
  const bool squarefree = is_squarefree(f);
  const bool fermat = is_fermat_base(b);

  Word lo = spec.ks.lo;
  Word hi = spec.ks.hi;
  if (spec.ks.kind == KRange::Kind::kBaseMinusOne) lo = hi = b - 1;

  BaseResult out;
  if (lo == 0) return out;  // b == 1 is rejected earlier; k = 0 has no report
  std::vector<AnomalyReport> reports;
  reports.reserve(hi - lo + 1);
  for (Word k = lo; k <= hi; ++k) reports.push_back(report(b, k, kMode));

  for (std::size_t i = 0; i < reports.size(); ++i) {
    const AnomalyReport& r = reports[i];
    ++out.cells;
    out.max_unequal = std::max(out.max_unequal, r.unequal_digits);
    for (Check c : spec.checks) {
      std::optional<bool> pass;
      switch (c) {
        case Check::kEtaBound:
          pass = check_eta_bound(r);
          break;
        case Check::kConjecture1:
          pass = check_conjecture1(r);
          break;
        case Check::kConjecture2:
          if (squarefree) pass = r.eta <= floor_log(b, r.k) + 1;
          break;
        case Check::kSquarefree:
          if (r.squarefree_excess) pass = check_squarefree_bound(r).bound_holds;
          break;
        case Check::kLemma2: {
          const Natural next = i + 1 < reports.size()
                                   ? reports[i + 1].z_value
                                   : z_base(f, pow(b, r.k + 1), kMode);
          const Natural delta = next - r.z_value * static_cast<unsigned long>(b);
          pass = sgn(delta) > 0 && (!prime_power || delta < to_natural(b));
          break;
        }
        case Check::kDigitCount:
          pass = digit_count(r.z_value, b) == r.k;
          break;
        case Check::kTheorem1:
          if (prime_power) {
            pass = r.alpha == (fermat ? 1 : 0) && r.unequal_digits == 0;
          }
          break;
        case Check::kEtaTight:
          pass = r.eta == r.eta_bound;
          break;
      }
      if (pass) out.rows.push_back({b, r.k, r.alpha, r.eta, r.eta_bound, c, *pass});
    }
  }
  return out;
}

}  // namespace

std::string_view check_name(Check c) {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "unknown";
}

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& [check, n] : kCheckNames) {
    if (n == name) return check;
  }
  return std::nullopt;
}

bool is_conjecture(Check c) {
  return c == Check::kConjecture1 || c == Check::kConjecture2 || c == Check::kEtaTight;
}

void validate(const SweepSpec& spec) {
  if (spec.base_lo < 2) throw std::invalid_argument("base range must start at 2 or above");
  if (spec.base_lo > spec.base_hi) throw std::invalid_argument("base range is empty");
  if (spec.ks.kind == KRange::Kind::kExplicit) {
    if (spec.ks.lo < 1) throw std::invalid_argument("k range must start at 1 or above");
    if (spec.ks.lo > spec.ks.hi) throw std::invalid_argument("k range is empty");
  }
  if (spec.checks.empty()) throw std::invalid_argument("no checks selected");
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::size_t nbases = spec.base_hi - spec.base_lo + 1;
  std::vector<BaseResult> slots(nbases);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  // Largest bases cost the most; hand them out first.
  auto worker = [&] {
    for (std::size_t i = next++; i < nbases; i = next++) {
      const std::size_t slot = nbases - 1 - i;
      try {
        slots[slot] = sweep_base(spec.base_lo + slot, spec);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  for (auto& slot : slots) {
    result.summary.cells += slot.cells;
    result.summary.max_unequal_digits =
        std::max(result.summary.max_unequal_digits, slot.max_unequal);
    for (auto& row : slot.rows) {
      if (row.check == Check::kEtaTight) {
        result.summary.tight_hits += row.pass ? 1 : 0;
      } else if (!row.pass) {
        if (is_conjecture(row.check)) {
          ++result.summary.conjecture_violations;
        } else {
          ++result.summary.theorem_violations;
        }
      }
      result.rows.push_back(std::move(row));
    }
  }
  result.summary.rows = result.rows.size();
  return result;
}

}  // namespace tzfact

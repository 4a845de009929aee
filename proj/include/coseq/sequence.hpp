#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coseq/core.hpp"
#include "coseq/numtheory.hpp"

namespace coseq {

// Which (period, step) pair drives the enumeration of integers coprime to
// the modulus:
//   minimal: period = radical_totient, step = radical. Shortest recurrence;
//            the base window holds the radical's totatives and P(1) = R + 1.
//   full:    period = totient, step = value. The base window holds the
//            modulus' own totatives and P(1) = value + 1.
// For squarefree moduli the two coincide. Otherwise they enumerate the same
// set of integers with indices offset by totient - radical_totient.
enum class PeriodChoice { minimal, full };

// Data pinning the doubly infinite enumeration P: on the base window
// [-period+1, 0], P(m) = base[m + period - 1], and P advances by `step`
// every `period` indices. `base` holds the totatives of `step`; the next
// value P(1) = step + 1 falls out of the stepping rule.
struct SequenceParams {
  FactoredModulus mod;
  PeriodChoice choice = PeriodChoice::minimal;
  int64_t period = 0;
  int64_t step = 0;
  std::vector<int64_t> base;

  // P(n) for n in the base window [-period+1, 0].
  int64_t base_value(int64_t n) const { return base[static_cast<size_t>(n + period - 1)]; }
};

SequenceParams make_params(const FactoredModulus& mod, PeriodChoice choice);

inline constexpr int64_t kDefaultIterationCeiling = 10'000'000;
inline constexpr int64_t kDefaultEnumerationBudget = 100'000'000;
inline constexpr int64_t kMaxWindow = 10'000'000;

// P(n) in closed form: k = ceil(n / period) full steps on top of the base
// window value at n - k*period.
Int eval_closed(const SequenceParams& params, int64_t n);

// Same value, reached by stepwise iteration from the base window. Throws if
// more than `iteration_ceiling` steps would be needed.
Int eval_recurrence(const SequenceParams& params, int64_t n,
                    int64_t iteration_ceiling = kDefaultIterationCeiling);

// Brute-force enumeration by gcd scan, independent of the factorization and
// closed-form machinery. Rank n is anchored like the full-period sequence:
// rank 1 holds a + 1, equivalently rank -phi(a)+1 holds 1. Negative values
// are enumerated downward; zero is excluded by coprimality. Throws once more
// than `enumeration_budget` candidate integers have been scanned.
Int oracle(int64_t a, int64_t n,
           int64_t enumeration_budget = kDefaultEnumerationBudget);

// Oracle values for every rank in [n_lo, n_hi], via one linear scan per
// direction instead of one scan per rank.
std::vector<Int> oracle_window(int64_t a, int64_t n_lo, int64_t n_hi,
                               int64_t enumeration_budget = kDefaultEnumerationBudget);

// Index shift s such that, for full-period parameterizations of two moduli
// sharing a radical, eval_b(n) == eval_a(n + s) for all n. (The minimal
// parameterizations of such moduli are literally identical.)
int64_t shift_between(const FactoredModulus& a, const FactoredModulus& b);

// Offset from minimal-anchored to full-anchored indexing: the full-period
// sequence evaluated at n equals the minimal one at n + this shift.
inline int64_t full_anchor_shift(const FactoredModulus& mod) {
  return mod.totient - mod.radical_totient;
}

// The full-anchored P(n) (P(1) = value + 1), computed either directly or
// through the minimal-period machinery (the default; both agree).
Int eval_canonical(const FactoredModulus& mod, int64_t n,
                   PeriodChoice via = PeriodChoice::minimal);

struct WindowCheck {
  std::string name;
  bool pass = true;
  std::optional<int64_t> witness;  // first failing index
  std::string detail;
};

struct WindowReport {
  int64_t modulus = 0;
  int64_t n_lo = 0;
  int64_t n_hi = 0;
  std::vector<WindowCheck> checks;

  bool all_pass() const;
};

// Window-wide audit of the full-period sequence: coprimality of every value,
// strict monotonicity, the telescoping identity P(n) = k*R + P(n - k*Q) for
// k in {-2,-1,1,2, value/radical}, agreement of closed form, recurrence and
// oracle, and surjectivity (every coprime integer between P(n_lo) and
// P(n_hi) appears exactly once). Failures are reported with a witness index,
// never thrown.
WindowReport verify_window(const FactoredModulus& mod, int64_t n_lo, int64_t n_hi);

}  // namespace coseq

#include "coseq/sequence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coseq {

namespace {

constexpr int64_t kInt64Max = std::numeric_limits<int64_t>::max();
constexpr int64_t kInt64Min = std::numeric_limits<int64_t>::min();

void charge(int64_t& budget, const char* what) {
  if (--budget < 0)
    throw std::invalid_argument(std::string(what) +
                                ": enumeration budget exceeded");
}

// phi(a) by plain gcd scan; deliberately ignores the factorization code.
int64_t totient_by_scan(int64_t a, int64_t& budget) {
  int64_t count = 0;
  for (int64_t t = 1; t < a; ++t) {
    charge(budget, "oracle");
    if (std::gcd(t, a) == 1) ++count;
  }
  return count;
}

void check_index_range(int64_t n, int64_t period) {
  if (n >= 0 ? n > kInt64Max - period : n < kInt64Min + period)
    throw std::invalid_argument("sequence index too large in magnitude");
}

}  // namespace

SequenceParams make_params(const FactoredModulus& mod, PeriodChoice choice) {
  SequenceParams p;
  p.mod = mod;
  p.choice = choice;
  if (choice == PeriodChoice::minimal) {
    p.step = mod.radical;
    p.period = mod.radical_totient;
  } else {
    p.step = mod.value;
    p.period = mod.totient;
  }
  p.base = euler_set(p.step).totatives;
  if (static_cast<int64_t>(p.base.size()) != p.period)
    throw std::logic_error("base window length disagrees with the period");
  return p;
}

Int eval_closed(const SequenceParams& params, int64_t n) {
  check_index_range(n, params.period);
  const int64_t k = ceil_div(n, params.period);
  const int64_t m = n - k * params.period;  // in [-period+1, 0]
  return Int(k) * params.step + params.base_value(m);
}

Int eval_recurrence(const SequenceParams& params, int64_t n,
                    int64_t iteration_ceiling) {
  check_index_range(n, params.period);
  const int64_t k = ceil_div(n, params.period);
  if (k > iteration_ceiling || k < -iteration_ceiling)
    throw std::invalid_argument(
        "recurrence evaluation would take " + std::to_string(k) +
        " steps, ceiling is " + std::to_string(iteration_ceiling));
  const int64_t m = n - k * params.period;
  Int v = params.base_value(m);
  for (int64_t i = 0; i < k; ++i) v += params.step;
  for (int64_t i = 0; i > k; --i) v -= params.step;
  return v;
}

Int oracle(int64_t a, int64_t n, int64_t enumeration_budget) {
  if (a < 2) throw std::invalid_argument("oracle requires a >= 2");
  int64_t budget = enumeration_budget;
  const int64_t phi = totient_by_scan(a, budget);
  if (n > kInt64Max - phi)
    throw std::invalid_argument("oracle: rank out of range");
  const int64_t target = n + phi;  // 1-based rank among coprimes >= 1
  if (target >= 1) {
    int64_t seen = 0;
    for (int64_t t = 1;; ++t) {
      charge(budget, "oracle");
      if (std::gcd(t, a) == 1 && ++seen == target) return Int(t);
    }
  }
  const int64_t need = 1 - target;  // coprimes strictly below 1, downward
  int64_t seen = 0;
  for (int64_t t = 0;; --t) {
    charge(budget, "oracle");
    if (std::gcd(t, a) == 1 && ++seen == need) return Int(t);
  }
}

std::vector<Int> oracle_window(int64_t a, int64_t n_lo, int64_t n_hi,
                               int64_t enumeration_budget) {
  if (a < 2) throw std::invalid_argument("oracle requires a >= 2");
  if (n_lo > n_hi) throw std::invalid_argument("oracle_window: empty window");
  int64_t budget = enumeration_budget;
  const int64_t phi = totient_by_scan(a, budget);
  if (n_hi > kInt64Max - phi)
    throw std::invalid_argument("oracle_window: rank out of range");

  std::vector<Int> out(static_cast<size_t>(n_hi - n_lo + 1));
  if (n_hi >= -phi + 1) {  // ranks served by the upward scan from 1
    const int64_t first = std::max(n_lo, -phi + 1);
    const int64_t target_lo = first + phi;
    const int64_t target_hi = n_hi + phi;
    int64_t seen = 0;
    for (int64_t t = 1; seen < target_hi; ++t) {
      charge(budget, "oracle_window");
      if (std::gcd(t, a) == 1) {
        ++seen;
        if (seen >= target_lo)
          out[static_cast<size_t>(first - n_lo + (seen - target_lo))] = t;
      }
    }
  }
  if (n_lo <= -phi) {  // ranks below the totative block: downward scan
    const int64_t last = std::min(n_hi, -phi);
    const int64_t need_lo = -phi + 1 - last;
    const int64_t need_hi = -phi + 1 - n_lo;
    int64_t seen = 0;
    for (int64_t t = 0; seen < need_hi; --t) {
      charge(budget, "oracle_window");
      if (std::gcd(t, a) == 1) {
        ++seen;
        if (seen >= need_lo)
          out[static_cast<size_t>(last - n_lo - (seen - need_lo))] = t;
      }
    }
  }
  return out;
}

int64_t shift_between(const FactoredModulus& a, const FactoredModulus& b) {
  if (a.radical != b.radical)
    throw std::invalid_argument(
        "shift_between requires equal radicals, got " +
        std::to_string(a.radical) + " and " + std::to_string(b.radical));
  // Equals radical_totient * (b - a) / radical.
  return b.totient - a.totient;
}

Int eval_canonical(const FactoredModulus& mod, int64_t n, PeriodChoice via) {
  const SequenceParams params = make_params(mod, via);
  if (via == PeriodChoice::full) return eval_closed(params, n);
  return eval_closed(params, n + full_anchor_shift(mod));
}

bool WindowReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const WindowCheck& c) { return c.pass; });
}

WindowReport verify_window(const FactoredModulus& mod, int64_t n_lo,
                           int64_t n_hi) {
  if (n_lo >= n_hi)
    throw std::invalid_argument("verify_window requires n_lo < n_hi");
  if (n_hi - n_lo + 1 > kMaxWindow)
    throw std::invalid_argument("verify_window: window larger than 10^7");

  const SequenceParams params = make_params(mod, PeriodChoice::full);
  const int64_t width = n_hi - n_lo + 1;
  std::vector<Int> values(static_cast<size_t>(width));
  for (int64_t n = n_lo; n <= n_hi; ++n)
    values[static_cast<size_t>(n - n_lo)] = eval_closed(params, n);
  auto value_at = [&](int64_t n) -> const Int& {
    return values[static_cast<size_t>(n - n_lo)];
  };

  WindowReport report;
  report.modulus = mod.value;
  report.n_lo = n_lo;
  report.n_hi = n_hi;

  {
    WindowCheck c;
    c.name = "coprimality";
    for (int64_t n = n_lo; n <= n_hi; ++n) {
      if (gcd(abs(value_at(n)), Int(mod.value)) != 1) {
        c.pass = false;
        c.witness = n;
        c.detail = "gcd(P(n), a) != 1 at n = " + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    WindowCheck c;
    c.name = "monotonicity";
    for (int64_t n = n_lo; n < n_hi; ++n) {
      if (!(value_at(n) < value_at(n + 1))) {
        c.pass = false;
        c.witness = n;
        c.detail = "P(n) >= P(n+1) at n = " + std::to_string(n);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    WindowCheck c;
    c.name = "telescoping";
    const int64_t ks[] = {-2, -1, 1, 2, mod.value / mod.radical};
    for (int64_t n = n_lo; n <= n_hi && c.pass; ++n) {
      for (int64_t k : ks) {
        const Int expect =
            Int(k) * mod.radical +
            eval_closed(params, n - k * mod.radical_totient);
        if (value_at(n) != expect) {
          c.pass = false;
          c.witness = n;
          c.detail = "P(n) != k*R + P(n - k*Q) at n = " + std::to_string(n) +
                     ", k = " + std::to_string(k);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    WindowCheck c;
    c.name = "method agreement";
    std::vector<Int> by_oracle = oracle_window(mod.value, n_lo, n_hi);
    for (int64_t n = n_lo; n <= n_hi; ++n) {
      const Int by_recurrence = eval_recurrence(params, n);
      const Int& by_scan = by_oracle[static_cast<size_t>(n - n_lo)];
      if (value_at(n) != by_recurrence || value_at(n) != by_scan) {
        c.pass = false;
        c.witness = n;
        c.detail = "closed/recurrence/oracle disagree at n = " +
                   std::to_string(n);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    // Every coprime integer between P(n_lo) and P(n_hi) appears exactly once:
    // walk the integers and match them against the window values in order.
    WindowCheck c;
    c.name = "surjectivity";
    const int64_t lo = values.front().convert_to<int64_t>();
    const int64_t hi = values.back().convert_to<int64_t>();
    int64_t cursor = n_lo;
    for (int64_t v = lo; v <= hi; ++v) {
      if (std::gcd(v, mod.value) != 1) continue;
      if (cursor > n_hi || value_at(cursor) != v) {
        c.pass = false;
        c.witness = cursor <= n_hi ? cursor : n_hi;
        c.detail = "coprime value " + std::to_string(v) +
                   " missing or duplicated in the window";
        break;
      }
      ++cursor;
    }
    if (c.pass && cursor != n_hi + 1) {
      c.pass = false;
      c.witness = cursor;
      c.detail = "window holds values beyond the coprime integers in range";
    }
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace coseq

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "coseq/core.hpp"
#include "coseq/numtheory.hpp"

namespace coseq {

// Truncated expansion of the generating function sum_{n>=1} P(n) t^n of the
// full-anchored sequence. terms[k] holds the coefficient of t^{k+1}, carried
// as an exact rational that must reduce to a positive integer.
struct SeriesExpansion {
  int64_t modulus = 0;
  std::vector<Rat> terms;
};

inline constexpr int64_t kMaxSeriesTerms = 1'000'000;
inline constexpr int64_t kMaxSeriesPeriod = int64_t{1} << 16;

// Expands a*t / ((t-1)(t^phi - 1)) - (sum_nu a_nu t^nu) / (t^phi - 1) around
// t = 0 through the geometric series of 1/(1-t) and 1/(1-t^phi) (both sign
// flips of the first denominator cancel; the minus sign on the second term
// absorbs the remaining one). Exact rational arithmetic, truncated at t^N.
SeriesExpansion expand_gf(const FactoredModulus& mod, int64_t n_terms);

// Multiplies the truncated series back by (t-1)(t^phi - 1) and compares, in
// exact arithmetic, against a*t - (t-1) * sum_nu a_nu t^nu. Returns the first
// degree that fails, or nullopt when the identity holds through degree N.
std::optional<int64_t> denominator_identity_failure(const SeriesExpansion& series,
                                                    const FactoredModulus& mod);

struct SeriesReport {
  bool pass = true;
  int64_t terms_checked = 0;
  std::optional<int64_t> first_mismatch;
  Int series_value;    // coefficient at the first mismatch, if any
  Int sequence_value;  // closed-form value there
};

// Coefficient-by-coefficient comparison of expand_gf against the closed-form
// sequence values P(1..N). Mismatches are reported, not thrown.
SeriesReport gf_vs_sequence(const FactoredModulus& mod, int64_t n_terms);

// CSV with columns n,coefficient.
void write_series_csv(std::ostream& out, const SeriesExpansion& series);

}  // namespace coseq

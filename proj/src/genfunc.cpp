#include "coseq/genfunc.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "coseq/sequence.hpp"

namespace coseq {

namespace {

void check_caps(const FactoredModulus& mod, int64_t n_terms) {
  if (n_terms < 1 || n_terms > kMaxSeriesTerms)
    throw std::invalid_argument("series length must be in [1, 10^6], got " +
                                std::to_string(n_terms));
  if (mod.totient > kMaxSeriesPeriod)
    throw std::invalid_argument("totient " + std::to_string(mod.totient) +
                                " exceeds the series period cap 2^16");
}

}  // namespace

SeriesExpansion expand_gf(const FactoredModulus& mod, int64_t n_terms) {
  check_caps(mod, n_terms);
  const SequenceParams params = make_params(mod, PeriodChoice::full);
  const int64_t phi = params.period;

  SeriesExpansion series;
  series.modulus = mod.value;
  series.terms.reserve(static_cast<size_t>(n_terms));
  for (int64_t n = 1; n <= n_terms; ++n) {
    // Head term: a * [t^{n-1}] 1/((1-t)(1-t^phi)). Convolving the two
    // geometric series counts lattice solutions of i + phi*j = n-1, which is
    // floor((n-1)/phi) + 1.
    const Rat head = Rat(mod.value) * ((n - 1) / phi + 1);
    // Tail term: [t^n] (sum_nu a_nu t^nu) / (1-t^phi) extends the totative
    // coefficients phi-periodically.
    const Rat tail = params.base[static_cast<size_t>((n - 1) % phi)];
    Rat c = head + tail;
    if (denominator(c) != 1 || c <= 0)
      throw std::logic_error("series coefficient at degree " +
                             std::to_string(n) +
                             " is not a positive integer");
    series.terms.push_back(std::move(c));
  }
  return series;
}

std::optional<int64_t> denominator_identity_failure(
    const SeriesExpansion& series, const FactoredModulus& mod) {
  const SequenceParams params = make_params(mod, PeriodChoice::full);
  const int64_t phi = params.period;
  const int64_t n_terms = static_cast<int64_t>(series.terms.size());

  // Right side a*t - (t-1) * sum_nu a_nu t^nu, degrees 0..phi+1.
  std::vector<Int> rhs(static_cast<size_t>(phi) + 2, Int(0));
  rhs[1] = mod.value;
  for (int64_t nu = 1; nu <= phi; ++nu) {
    rhs[static_cast<size_t>(nu)] += params.base[static_cast<size_t>(nu - 1)];
    rhs[static_cast<size_t>(nu + 1)] -= params.base[static_cast<size_t>(nu - 1)];
  }

  auto g = [&](int64_t i) -> Rat {
    return (i >= 1 && i <= n_terms) ? series.terms[static_cast<size_t>(i - 1)]
                                    : Rat(0);
  };
  // (t^{phi+1} - t^phi - t + 1) * G, degree by degree. Coefficients of the
  // product up to degree N only touch series terms up to N, so truncation
  // does not disturb the comparison.
  for (int64_t j = 0; j <= n_terms; ++j) {
    const Rat produced = g(j - phi - 1) - g(j - phi) - g(j - 1) + g(j);
    const Rat wanted = j <= phi + 1 ? Rat(rhs[static_cast<size_t>(j)]) : Rat(0);
    if (produced != wanted) return j;
  }
  return std::nullopt;
}

SeriesReport gf_vs_sequence(const FactoredModulus& mod, int64_t n_terms) {
  const SeriesExpansion series = expand_gf(mod, n_terms);
  const SequenceParams params = make_params(mod, PeriodChoice::full);
  SeriesReport report;
  report.terms_checked = n_terms;
  for (int64_t n = 1; n <= n_terms; ++n) {
    const Int by_sequence = eval_closed(params, n);
    const Rat& by_series = series.terms[static_cast<size_t>(n - 1)];
    if (by_series != Rat(by_sequence)) {
      report.pass = false;
      report.first_mismatch = n;
      report.series_value = numerator(by_series);  // integral by construction
      report.sequence_value = by_sequence;
      break;
    }
  }
  return report;
}

void write_series_csv(std::ostream& out, const SeriesExpansion& series) {
  out << "n,coefficient\n";
  for (size_t i = 0; i < series.terms.size(); ++i)
    out << (i + 1) << ',' << numerator(series.terms[i]) << '\n';
}

}  // namespace coseq

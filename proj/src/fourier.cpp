#include "coseq/fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coseq {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

ResidueTable make_residue_table(const SequenceParams& params) {
  const int64_t period = params.period;
  const Rat c0(params.step, params.period);
  ResidueTable table;
  table.period = period;
  table.entries.reserve(static_cast<size_t>(period));
  const Rat cap = Rat(2) * params.step;
  for (int64_t j = 0; j < period; ++j) {
    const int64_t m = j - period + 1;
    Rat r = params.base[static_cast<size_t>(j)] - c0 * m;
    if (!(r > 0 && r < cap))
      throw std::logic_error("residue entry outside (0, 2*step) at index " +
                             std::to_string(m));
    table.entries.push_back(std::move(r));
  }
  return table;
}

FourierExpansion solve_coefficients(const FactoredModulus& mod,
                                    PeriodChoice choice, int64_t period_cap) {
  SequenceParams params = make_params(mod, choice);
  if (params.period > period_cap)
    throw std::invalid_argument("period " + std::to_string(params.period) +
                                " exceeds the coefficient solve cap " +
                                std::to_string(period_cap));
  FourierExpansion fx;
  fx.c0 = Rat(params.step, params.period);
  fx.residues = make_residue_table(params);

  const int64_t period = params.period;
  std::vector<double> r(static_cast<size_t>(period));
  for (int64_t j = 0; j < period; ++j)
    r[static_cast<size_t>(j)] =
        fx.residues.entries[static_cast<size_t>(j)].convert_to<double>();

  // coeffs[nu] = (1/period) * sum_m r_m * e^(-2*pi*i*nu*m/period); the base
  // indices m = -period+1..0 run over a complete residue system.
  fx.coeffs.assign(static_cast<size_t>(period), {});
  for (int64_t nu = 0; nu < period; ++nu) {
    std::complex<double> acc{0.0, 0.0};
    for (int64_t j = 0; j < period; ++j) {
      const int64_t m = j - period + 1;
      const int64_t idx = floor_mod(-nu * m, period);
      acc += r[static_cast<size_t>(j)] *
             std::polar(1.0, kTau * static_cast<double>(idx) /
                                 static_cast<double>(period));
    }
    fx.coeffs[static_cast<size_t>(nu)] = acc / static_cast<double>(period);
  }
  fx.params = std::move(params);
  return fx;
}

FourierEval eval_fourier(const Rat& c0,
                         const std::vector<std::complex<double>>& coeffs,
                         int64_t n) {
  const int64_t period = static_cast<int64_t>(coeffs.size());
  const int64_t nr = floor_mod(n, period);
  std::complex<double> acc{0.0, 0.0};
  for (int64_t nu = 0; nu < period; ++nu) {
    const int64_t idx = (nu * nr) % period;
    acc += coeffs[static_cast<size_t>(nu)] *
           std::polar(1.0, kTau * static_cast<double>(idx) /
                               static_cast<double>(period));
  }
  FourierEval ev;
  ev.approx = c0.convert_to<double>() * static_cast<double>(n) + acc.real();
  ev.imag_residual = std::abs(acc.imag());
  if (std::abs(ev.approx) < 9.0e18) {
    const long long nearest = std::llround(ev.approx);
    ev.rounded = nearest;
    ev.round_residual = std::abs(ev.approx - static_cast<double>(nearest));
  } else {
    // Value magnitude defeats double rounding; flag it via the residual.
    ev.rounded = 0;
    ev.round_residual = std::numeric_limits<double>::infinity();
  }
  return ev;
}

FourierEval eval_fourier(const FourierExpansion& expansion, int64_t n) {
  return eval_fourier(expansion.c0, expansion.coeffs, n);
}

Int eval_exact(const ResidueTable& table, const Rat& c0, int64_t n) {
  const Rat v = c0 * n + table.at(n);
  if (denominator(v) != 1)
    throw std::logic_error("exact evaluation did not reduce to an integer");
  return numerator(v);
}

Int eval_exact(const FourierExpansion& expansion, int64_t n) {
  return eval_exact(expansion.residues, expansion.c0, n);
}

DensityLimit density_limit(const FourierExpansion& expansion) {
  return DensityLimit{expansion.c0, Int(2) * expansion.params.step};
}

}  // namespace coseq

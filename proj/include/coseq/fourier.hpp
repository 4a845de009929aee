#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "coseq/core.hpp"
#include "coseq/sequence.hpp"

namespace coseq {

// Exact periodic part of the enumeration: P(n) minus its linear slope c0*n
// repeats with the period, so tabulating it over one base window captures
// the whole Fourier sum exactly. entries[j] = P(m) - c0*m for m = j - period + 1.
struct ResidueTable {
  int64_t period = 0;
  std::vector<Rat> entries;  // index j <-> base index m = j - period + 1

  // Entry of n's residue class, same Euclidean convention as eval_closed.
  const Rat& at(int64_t n) const {
    const int64_t m = n - ceil_div(n, period) * period;
    return entries[static_cast<size_t>(m + period - 1)];
  }
};

// Builds the table from the base window; every entry lies strictly between
// 0 and 2*step.
ResidueTable make_residue_table(const SequenceParams& params);

struct FourierExpansion {
  SequenceParams params;  // anchoring data: period, step, base window
  Rat c0;                 // slope step/period, reduced (= radical/radical_totient)
  std::vector<std::complex<double>> coeffs;  // frequencies 0 .. period-1
  ResidueTable residues;  // exact counterpart of the coefficient sum

  int64_t period() const { return params.period; }
};

inline constexpr int64_t kDefaultPeriodCap = int64_t{1} << 16;

// Coefficients of P(n) = c0*n + sum_nu coeffs[nu] * e^(2*pi*i*nu*n/period).
// The base-window conditions form a Vandermonde system on the period-th
// roots of unity, so the solve is an inverse DFT of the residue table.
// Roots of unity are taken per term from the reduced angle, not by repeated
// multiplication. O(period^2); throws above `period_cap`.
FourierExpansion solve_coefficients(const FactoredModulus& mod,
                                    PeriodChoice choice,
                                    int64_t period_cap = kDefaultPeriodCap);

struct FourierEval {
  double approx = 0.0;         // real part of the evaluated expansion
  Int rounded;                 // nearest integer to `approx`
  double imag_residual = 0.0;  // |imaginary part|, should vanish
  double round_residual = 0.0; // distance from `approx` to `rounded`

  double residual() const {
    return imag_residual > round_residual ? imag_residual : round_residual;
  }
};

// Floating evaluation of the coefficient sum. The caller decides whether the
// residual is acceptable; the exact path below is always available.
FourierEval eval_fourier(const Rat& c0,
                         const std::vector<std::complex<double>>& coeffs,
                         int64_t n);
FourierEval eval_fourier(const FourierExpansion& expansion, int64_t n);

// Exact evaluation: c0*n + residue-table entry. The rational parts cancel by
// construction; throws std::logic_error if they ever fail to.
Int eval_exact(const ResidueTable& table, const Rat& c0, int64_t n);
Int eval_exact(const FourierExpansion& expansion, int64_t n);

struct DensityLimit {
  Rat slope;            // limit of P(n)/n = step/period = radical/radical_totient
  Int oscillation_cap;  // strict bound on |P(n) - slope*n|: 2*step
};

DensityLimit density_limit(const FourierExpansion& expansion);

}  // namespace coseq

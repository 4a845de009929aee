#pragma once

// Test-side oracles: plain gcd scans and a dense linear solve, deliberately
// independent of the library code paths they are used to check.

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace testsupport {

inline long long igcd(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool coprime(long long t, long long a) { return igcd(t, a) == 1; }

inline std::vector<long long> totatives_by_scan(long long m) {
  std::vector<long long> out;
  for (long long t = 1; t < m; ++t)
    if (coprime(t, m)) out.push_back(t);
  return out;
}

// Value at rank n of the increasing enumeration of all integers coprime to a,
// anchored so that rank 1 holds a + 1 (equivalently rank -phi+1 holds 1).
inline long long rank_value(long long a, long long n) {
  const long long phi = static_cast<long long>(totatives_by_scan(a).size());
  long long target = n + phi;
  if (target >= 1) {
    long long seen = 0;
    for (long long t = 1;; ++t)
      if (coprime(t, a) && ++seen == target) return t;
  }
  target = 1 - target;
  long long seen = 0;
  for (long long t = 0;; --t)
    if (coprime(t, a) && ++seen == target) return t;
}

// Direct dense solve of the base-window Vandermonde system
//   sum_{nu=0}^{T-1} c_nu * w^(nu*m) = r_m,  m = -T+1..0,  w = e^(2*pi*i/T),
// with r_m = base[m+T-1] - (step/T)*m. Partial-pivot Gaussian elimination;
// the independent route against the inverse-DFT coefficients.
inline std::vector<std::complex<double>> dense_fourier_solve(
    const std::vector<long long>& base, long long step) {
  using C = std::complex<double>;
  const int t = static_cast<int>(base.size());
  const double tau = 2.0 * std::numbers::pi;
  std::vector<std::vector<C>> m(t, std::vector<C>(t + 1));
  for (int row = 0; row < t; ++row) {
    const long long idx = row - t + 1;  // base-window index
    for (int nu = 0; nu < t; ++nu) {
      const long long e = ((nu * idx) % t + t) % t;
      m[row][nu] = std::polar(1.0, tau * static_cast<double>(e) / t);
    }
    m[row][t] = C(static_cast<double>(base[row]) -
                      static_cast<double>(step) / t * static_cast<double>(idx),
                  0.0);
  }
  for (int col = 0; col < t; ++col) {
    int pivot = col;
    for (int row = col + 1; row < t; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < t; ++row) {
      if (row == col) continue;
      const C f = m[row][col] / m[col][col];
      for (int k = col; k <= t; ++k) m[row][k] -= f * m[col][k];
    }
  }
  std::vector<C> solution(t);
  for (int row = 0; row < t; ++row) solution[row] = m[row][t] / m[row][row];
  return solution;
}

}  // namespace testsupport

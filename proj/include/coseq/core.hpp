#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace coseq {

// Sequence values and exact residue arithmetic use arbitrary precision;
// indices, moduli, periods and totatives stay int64_t.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Ceiling division for d > 0, correct for negative n (plain integer division
// truncates toward zero and would be off by one there).
inline int64_t ceil_div(int64_t n, int64_t d) {
  int64_t q = n / d;
  if (n % d > 0) ++q;
  return q;
}

// Euclidean remainder in [0, d) for d > 0.
inline int64_t floor_mod(int64_t n, int64_t d) {
  int64_t r = n % d;
  return r < 0 ? r + d : r;
}

}  // namespace coseq

#pragma once

#include <cstdint>
#include <vector>

#include "coseq/core.hpp"

namespace coseq {

struct PrimePower {
  int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A modulus with its prime factorization and the derived quantities used
// throughout: the radical (product of the distinct primes), the totient of
// the radical (which is the minimal enumeration period), and the totient of
// the modulus itself.
struct FactoredModulus {
  int64_t value = 0;
  std::vector<PrimePower> factors;  // primes strictly increasing
  int64_t radical = 0;              // product of distinct primes
  int64_t radical_totient = 0;      // product of (p - 1), equals phi(radical)
  int64_t totient = 0;              // (value / radical) * radical_totient
};

// The ordered totatives of a modulus: all integers in [1, m-1] coprime to m.
// First entry is 1, last is m-1, and t <-> m-t pairs are symmetric.
struct EulerSet {
  int64_t modulus = 0;
  std::vector<int64_t> totatives;  // strictly increasing
};

inline constexpr int64_t kDefaultModulusCeiling = INT64_MAX;
inline constexpr int64_t kMaxTotatives = int64_t{1} << 24;

// Deterministic trial-division factorization. Rejects values below 2 (the
// coprime enumeration has no base window for modulus 1) and above `ceiling`.
FactoredModulus factor(int64_t value, int64_t ceiling = kDefaultModulusCeiling);

// Materializes the totatives of m in increasing order. Refuses moduli whose
// totient exceeds kMaxTotatives.
EulerSet euler_set(int64_t m);

}  // namespace coseq

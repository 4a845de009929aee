#include "coseq/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace coseq {

FactoredModulus factor(int64_t value, int64_t ceiling) {
  if (value == 1)
    throw std::invalid_argument(
        "modulus 1 rejected: every integer is coprime to 1, so the ordered "
        "enumeration has no base window");
  if (value < 2)
    throw std::invalid_argument("modulus must be >= 2, got " +
                                std::to_string(value));
  if (value > ceiling)
    throw std::invalid_argument("modulus " + std::to_string(value) +
                                " exceeds ceiling " + std::to_string(ceiling));

  FactoredModulus fm;
  fm.value = value;
  int64_t rest = value;
  auto strip = [&](int64_t p) {
    if (rest % p != 0) return;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    fm.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +/- 1 candidates; `rest / c >= c` avoids c*c overflow near INT64_MAX.
  for (int64_t c = 5, gap = 2; rest > 1 && rest / c >= c; c += gap, gap = 6 - gap)
    strip(c);
  if (rest > 1) fm.factors.push_back({rest, 1});  // remainder is prime

  fm.radical = 1;
  fm.radical_totient = 1;
  for (const PrimePower& pp : fm.factors) {
    fm.radical *= pp.prime;
    fm.radical_totient *= pp.prime - 1;
  }
  fm.totient = (value / fm.radical) * fm.radical_totient;
  return fm;
}

EulerSet euler_set(int64_t m) {
  if (m < 2)
    throw std::invalid_argument("euler_set requires modulus >= 2, got " +
                                std::to_string(m));
  const FactoredModulus fm = factor(m);
  if (fm.totient > kMaxTotatives)
    throw std::invalid_argument(
        "totient of " + std::to_string(m) +
        " exceeds the totative materialization guard (2^24)");

  // Mark multiples of each prime divisor; survivors are the totatives.
  std::vector<bool> blocked(static_cast<size_t>(m), false);
  for (const PrimePower& pp : fm.factors)
    for (int64_t t = pp.prime; t < m; t += pp.prime)
      blocked[static_cast<size_t>(t)] = true;

  EulerSet es;
  es.modulus = m;
  es.totatives.reserve(static_cast<size_t>(fm.totient));
  for (int64_t t = 1; t < m; ++t)
    if (!blocked[static_cast<size_t>(t)]) es.totatives.push_back(t);

  if (static_cast<int64_t>(es.totatives.size()) != fm.totient)
    throw std::logic_error("totative count disagrees with the totient formula");
  return es;
}

}  // namespace coseq

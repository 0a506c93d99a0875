#pragma once

// Test-only reference computations, deliberately naive and independent of the
// library's algorithms.

#include "flick/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flick::testing {

/// Partitions of an n-set into k blocks: count the surjections n -> k by
/// enumerating all k^n maps, then divide by k!.
inline std::uint64_t set_partitions_by_surjections(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  std::vector<unsigned> digits(n, 0);
  std::uint64_t surjections = 0;
  while (true) {
    std::vector<bool> hit(k, false);
    for (unsigned d : digits) hit[d] = true;
    bool onto = true;
    for (bool h : hit) onto = onto && h;
    if (onto) ++surjections;
    unsigned pos = 0;
    while (pos < n && ++digits[pos] == k) digits[pos++] = 0;
    if (pos == n) break;
  }
  std::uint64_t kf = 1;
  for (unsigned i = 2; i <= k; ++i) kf *= i;
  return surjections / kf;
}

inline std::vector<BigInt> big(const std::vector<long long>& v) {
  return {v.begin(), v.end()};
}

inline BigInt big(const char* decimal) { return BigInt(std::string(decimal)); }

}  // namespace flick::testing

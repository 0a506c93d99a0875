#pragma once

// Stirling numbers of the second kind and two closed forms for the central
// factorial numbers of the second kind (OEIS A008957).

#include "flick/bigint.hpp"
#include "flick/triangle.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace flick {

/// S2(n,k) for 0 <= k <= n, grown bottom-up on demand. Thread-safe.
class Stirling2Table {
 public:
  BigInt get(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[n][k];
  }

  std::vector<BigInt> row(unsigned n) {
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[n];
  }

 private:
  void extend_to(unsigned n) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      const auto m = static_cast<unsigned>(rows_.size());
      std::vector<BigInt> next(m + 1);
      next[0] = 0;
      next[m] = 1;
      for (unsigned k = 1; k < m; ++k) next[k] = k * prev[k] + prev[k - 1];
      rows_.push_back(std::move(next));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline Stirling2Table& shared_stirling2() {
  static Stirling2Table instance;
  return instance;
}

inline BigInt stirling2(unsigned n, unsigned k) { return shared_stirling2().get(n, k); }

namespace detail {

inline void require_a008957_range(unsigned n, unsigned k, const char* who) {
  if (n == 0 || k == 0 || k > n) {
    throw std::invalid_argument(std::string(who) + ": need n >= 1 and 1 <= k <= n, got (" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
  }
}

}  // namespace detail

/// Central factorial number via a normalized (2n-2k+1)-th forward difference of
/// j^(2n-1) taken at offset k-n.
inline BigInt a008957_fd(unsigned n, unsigned k) {
  detail::require_a008957_range(n, k, "a008957_fd");
  const unsigned order = 2 * n - 2 * k + 1;
  const unsigned power = 2 * n - 1;
  const auto binom = binomial_row(order);
  BigInt sum = 0;
  for (unsigned i = 0; i <= order; ++i) {
    BigInt term = binom[i] * ipow(BigInt(static_cast<long long>(i) - n + k), power);
    if ((order - i) % 2 == 1) term = -term;
    sum += term;
  }
  return exact_div(sum, factorial(order),
                   "a008957_fd(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

inline BigInt a008957_stirling(unsigned n, unsigned k) {
  detail::require_a008957_range(n, k, "a008957_stirling");
  const unsigned power = 2 * n - 1;
  const unsigned blocks = 2 * n - 2 * k + 1;
  const auto binom = binomial_row(power);
  const BigInt shift = BigInt(static_cast<long long>(k) - static_cast<long long>(n));
  BigInt sum = 0;
  // S2(j, blocks) vanishes for j < blocks.
  for (unsigned j = blocks; j <= power; ++j) {
    sum += binom[j] * ipow(shift, power - j) * shared_stirling2().get(j, blocks);
  }
  return sum;
}

/// a008957_fd(n,k) == a008957_stirling(n,k) == T(2n-1, 2n-2k+1) for 1 <= k <= n <= max_n.
inline CheckResult a008957_identity_check(unsigned max_n) {
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const BigInt fd = a008957_fd(n, k);
      const BigInt st = a008957_stirling(n, k);
      const BigInt tri = triangle_entry_recurrence(2 * n - 1, 2 * n - 2 * k + 1);
      if (fd != st || st != tri || fd <= 0) {
        return CheckResult::fail("A008957(" + std::to_string(n) + "," + std::to_string(k) +
                                 "): fd=" + to_string(fd) + " stirling=" + to_string(st) +
                                 " triangle=" + to_string(tri));
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace flick

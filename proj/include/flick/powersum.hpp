#pragma once

// Power sums S_m(n) = 1^m + ... + n^m through the flickering basis:
//   n^m    = sum_k T(m,k) fallshift(n,k)
//   S_m(n) = sum_k T(m,k) / (k+1) * integral_basis(n, k+1)
// with every division exact.

#include "flick/bigint.hpp"
#include "flick/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flick {

enum class BasisKind { fallshift, integral };

struct BasisSpec {
  BasisKind kind = BasisKind::fallshift;
  unsigned k = 1;
};

namespace detail {

inline BigInt consecutive_product(const BigInt& start, unsigned k) {
  BigInt out = 1;
  BigInt factor = start;
  for (unsigned i = 0; i < k; ++i) {
    out *= factor;
    ++factor;
  }
  return out;
}

}  // namespace detail

/// Product of k consecutive integers starting at n - floor(k/2):
/// n, n(n-1), n(n-1)(n+1), n(n-1)(n+1)(n-2), ...
inline BigInt fallshift(const BigInt& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("fallshift: k must be >= 1");
  return detail::consecutive_product(n - k / 2, k);
}

/// Product of k consecutive integers starting at n - floor((k-1)/2):
/// n, n(n+1), n(n+1)(n-1), n(n+1)(n-1)(n+2), ...
inline BigInt integral_basis(const BigInt& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("integral_basis: k must be >= 1");
  return detail::consecutive_product(n - (k - 1) / 2, k);
}

inline BigInt evaluate_basis(const BasisSpec& spec, const BigInt& n) {
  return spec.kind == BasisKind::fallshift ? fallshift(n, spec.k) : integral_basis(n, spec.k);
}

/// n^m == sum_k T(m,k) fallshift(n,k) for every n in the range.
inline CheckResult expand_power_check(unsigned m, const std::vector<BigInt>& n_range) {
  if (m == 0) throw std::invalid_argument("expand_power_check: m must be >= 1");
  const auto row = shared_recurrence().row(m);
  for (const auto& n : n_range) {
    BigInt sum = 0;
    for (unsigned k = 1; k <= m; ++k) {
      if (row[k - 1] != 0) sum += row[k - 1] * fallshift(n, k);
    }
    if (sum != ipow(n, m)) return CheckResult::fail("m=" + std::to_string(m) + " n=" + to_string(n));
  }
  return CheckResult::pass();
}

/// I_{k+1}(j) - I_{k+1}(j-1) == (k+1) fallshift(j,k) for every j in the range.
inline CheckResult basis_difference_check(unsigned k, const std::vector<BigInt>& j_range) {
  if (k == 0) throw std::invalid_argument("basis_difference_check: k must be >= 1");
  for (const auto& j : j_range) {
    if (integral_basis(j, k + 1) - integral_basis(j - 1, k + 1) != BigInt(k + 1) * fallshift(j, k)) {
      return CheckResult::fail("k=" + std::to_string(k) + " j=" + to_string(j));
    }
  }
  return CheckResult::pass();
}

struct PowerSumTerm {
  unsigned k = 0;
  BigInt coefficient;  // T(m,k)
  BigInt basis_value;  // integral_basis(n, k+1)
};

struct PowerSumResult {
  unsigned m = 0;
  BigInt n;
  BigInt value;
  std::vector<PowerSumTerm> terms;  // only k with T(m,k) != 0
};

/// S_m(n) through the flickering basis, dividing each term by k+1 exactly.
inline PowerSumResult power_sum(unsigned m, const BigInt& n) {
  if (m == 0) throw std::invalid_argument("power_sum: m must be >= 1");
  if (n < 1) throw std::invalid_argument("power_sum: n must be >= 1");
  const auto row = shared_recurrence().row(m);
  PowerSumResult out{m, n, 0, {}};
  for (unsigned k = 1; k <= m; ++k) {
    const BigInt& t = row[k - 1];
    if (t == 0) continue;
    PowerSumTerm term{k, t, integral_basis(n, k + 1)};
    out.value += exact_div(t * term.basis_value, BigInt(k + 1),
                           "power_sum term k=" + std::to_string(k));
    out.terms.push_back(std::move(term));
  }
  return out;
}

/// Direct accumulation of i^m for i = 1..n.
inline BigInt power_sum_naive(unsigned m, const BigInt& n) {
  if (m == 0) throw std::invalid_argument("power_sum_naive: m must be >= 1");
  if (n < 1) throw std::invalid_argument("power_sum_naive: n must be >= 1");
  BigInt total = 0;
  for (BigInt i = 1; i <= n; ++i) total += boost::multiprecision::pow(i, m);
  return total;
}

/// (k+1)! divides integral_basis(n, k+1) for n in [-span, span], 1 <= k <= max_k.
inline CheckResult basis_divisibility_check(unsigned max_k, long long span) {
  for (unsigned k = 1; k <= max_k; ++k) {
    const BigInt f = factorial(k + 1);
    for (long long n = -span; n <= span; ++n) {
      if (integral_basis(BigInt(n), k + 1) % f != 0) {
        return CheckResult::fail("k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
  return CheckResult::pass();
}

/// sum_{j=1..n} (I_{k+1}(j) - I_{k+1}(j-1)) == I_{k+1}(n).
inline CheckResult telescoping_check(unsigned max_k, unsigned max_n) {
  for (unsigned k = 1; k <= max_k; ++k) {
    BigInt running = 0;
    for (unsigned n = 1; n <= max_n; ++n) {
      running += integral_basis(BigInt(n), k + 1) - integral_basis(BigInt(n - 1), k + 1);
      if (running != integral_basis(BigInt(n), k + 1)) {
        return CheckResult::fail("k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
    }
  }
  return CheckResult::pass();
}

/// S_1, S_2, S_3 against their classical closed forms for 1 <= n <= max_n.
inline CheckResult classical_closed_forms_check(unsigned max_n) {
  for (unsigned i = 1; i <= max_n; ++i) {
    const BigInt n(i);
    const BigInt tri = n * (n + 1) / 2;
    if (power_sum(1, n).value != tri) return CheckResult::fail("S_1 n=" + std::to_string(i));
    if (power_sum(2, n).value != n * (n + 1) * (2 * n + 1) / 6) {
      return CheckResult::fail("S_2 n=" + std::to_string(i));
    }
    if (power_sum(3, n).value != tri * tri) return CheckResult::fail("S_3 n=" + std::to_string(i));
  }
  return CheckResult::pass();
}

struct BenchReport {
  unsigned m = 0;
  BigInt n;
  unsigned reps = 0;
  std::chrono::nanoseconds precompute{0};  // materializing triangle row m
  std::chrono::nanoseconds flickering_median{0};
  std::chrono::nanoseconds naive_median{0};
  bool agree = true;
};

namespace detail {

inline std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return (v[mid - 1] + v[mid]) / 2;
}

}  // namespace detail

/// Sequential wall-clock comparison. Triangle row m is computed from scratch
/// (own recurrence instance) and timed separately so the medians measure
/// evaluation only.
inline BenchReport bench_power_sum(unsigned m, const BigInt& n, unsigned reps) {
  if (reps == 0) throw std::invalid_argument("bench_power_sum: reps must be >= 1");
  if (m == 0) throw std::invalid_argument("bench_power_sum: m must be >= 1");
  if (n < 1) throw std::invalid_argument("bench_power_sum: n must be >= 1");
  using clock = std::chrono::steady_clock;
  // Keep every measured duration strictly positive even on coarse clocks.
  auto elapsed = [](clock::time_point t0) {
    return std::max(std::chrono::nanoseconds(1),
                    std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0));
  };

  BenchReport report{m, n, reps, {}, {}, {}, true};
  {
    FlickerRecurrence fresh;
    const auto t0 = clock::now();
    (void)fresh.row(m);
    report.precompute = elapsed(t0);
  }
  (void)shared_recurrence().row(m);

  std::vector<std::chrono::nanoseconds> fast;
  std::vector<std::chrono::nanoseconds> slow;
  for (unsigned r = 0; r < reps; ++r) {
    auto t0 = clock::now();
    const BigInt a = power_sum(m, n).value;
    fast.push_back(elapsed(t0));
    t0 = clock::now();
    const BigInt b = power_sum_naive(m, n);
    slow.push_back(elapsed(t0));
    report.agree = report.agree && a == b;
  }
  report.flickering_median = detail::median(std::move(fast));
  report.naive_median = detail::median(std::move(slow));
  return report;
}

}  // namespace flick

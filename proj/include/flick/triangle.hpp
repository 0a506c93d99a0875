#pragma once

// The master flickering triangle T(n,k), 1 <= k <= n (OEIS A395021).
//
// Two independent constructions are provided: extraction of normalized central
// values from the forward-difference pyramid of j^n, and the four-case parity
// recurrence. They are expected to agree entrywise.

#include "flick/bigint.hpp"

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace flick {

/// Forward-difference pyramid of f(j) = j^power on j = -(power+2) ... power+2.
struct DiffTable {
  unsigned power = 0;
  std::vector<BigInt> values;
  std::vector<std::vector<BigInt>> levels;  // levels[0] == values

  /// The central entry of difference level k: index floor(L/2) of a level of
  /// length L. For odd k that is the half-integer slot j = -1/2, for even k
  /// the integer slot j = 0.
  const BigInt& central(unsigned k) const {
    const auto& level = levels.at(k);
    return level[level.size() / 2];
  }
};

inline DiffTable build_diff_table(unsigned power) {
  if (power == 0) throw std::invalid_argument("build_diff_table: power must be >= 1");
  DiffTable table;
  table.power = power;
  const long long reach = static_cast<long long>(power) + 2;
  table.values.reserve(static_cast<std::size_t>(2 * reach + 1));
  for (long long j = -reach; j <= reach; ++j) table.values.push_back(ipow(BigInt(j), power));

  table.levels.reserve(power + 1);
  table.levels.push_back(table.values);
  for (unsigned k = 1; k <= power; ++k) {
    const auto& prev = table.levels.back();
    std::vector<BigInt> next(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
    table.levels.push_back(std::move(next));
  }
  return table;
}

/// Row n of the triangle via |central k-th difference| / k!.
inline std::vector<BigInt> triangle_row_extraction(unsigned n) {
  if (n == 0) throw std::invalid_argument("triangle_row_extraction: n must be >= 1");
  const DiffTable table = build_diff_table(n);
  std::vector<BigInt> row;
  row.reserve(n);
  BigInt k_factorial = 1;
  for (unsigned k = 1; k <= n; ++k) {
    k_factorial *= k;
    row.push_back(exact_div(boost::multiprecision::abs(table.central(k)), k_factorial,
                            "triangle extraction T(" + std::to_string(n) + "," +
                                std::to_string(k) + ")"));
  }
  return row;
}

namespace detail {

// Row n from row n-1 (both stored 0-based: row[k-1] == T(n,k)).
inline std::vector<BigInt> next_flicker_row(unsigned n, const std::vector<BigInt>& prev) {
  std::vector<BigInt> row(n);
  const bool n_odd = (n % 2) == 1;
  for (unsigned k = 1; k <= n; ++k) {
    BigInt& out = row[k - 1];
    if (k == 1 || k == n) {
      out = 1;
    } else if (k % 2 == 0) {
      if (n_odd) {
        out = 0;
      } else {
        out = exact_div(2 * row[k - 2], BigInt(k), "recurrence 2/k at n=" + std::to_string(n));
      }
    } else {
      out = exact_div(prev[k - 1] * (k + 1), BigInt(2),
                      "recurrence (k+1)/2 at n=" + std::to_string(n));
      if (n_odd) {
        out += exact_div(2 * prev[k - 3], BigInt(k - 1),
                         "recurrence 2/(k-1) at n=" + std::to_string(n));
      }
    }
  }
  return row;
}

}  // namespace detail

/// Memoized parity recurrence. Rows are materialized bottom-up on demand and
/// kept; all access is serialized by an internal mutex.
class FlickerRecurrence {
 public:
  /// T(n,k); 0 when k is outside 1..n.
  BigInt entry(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) return 0;
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[n - 1][k - 1];
  }

  std::vector<BigInt> row(unsigned n) {
    if (n == 0) throw std::invalid_argument("FlickerRecurrence::row: n must be >= 1");
    std::lock_guard lock(mutex_);
    extend_to(n);
    return rows_[n - 1];
  }

  std::size_t cached_rows() {
    std::lock_guard lock(mutex_);
    return rows_.size();
  }

 private:
  void extend_to(unsigned n) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() < n) {
      const auto next = static_cast<unsigned>(rows_.size() + 1);
      rows_.push_back(detail::next_flicker_row(next, rows_.back()));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline FlickerRecurrence& shared_recurrence() {
  static FlickerRecurrence instance;
  return instance;
}

inline BigInt triangle_entry_recurrence(unsigned n, unsigned k) {
  return shared_recurrence().entry(n, k);
}

enum class Method { extraction, recurrence };

/// Rows 1..size() of the triangle; indices are 1-based.
struct FlickerTriangle {
  std::vector<std::vector<BigInt>> rows;

  std::size_t size() const { return rows.size(); }
  const BigInt& at(unsigned n, unsigned k) const { return rows.at(n - 1).at(k - 1); }

  friend bool operator==(const FlickerTriangle&, const FlickerTriangle&) = default;
};

inline FlickerTriangle triangle_rows(unsigned count, Method method) {
  if (count == 0) throw std::invalid_argument("triangle_rows: count must be >= 1");
  FlickerTriangle tri;
  tri.rows.reserve(count);
  for (unsigned n = 1; n <= count; ++n) {
    tri.rows.push_back(method == Method::extraction ? triangle_row_extraction(n)
                                                    : shared_recurrence().row(n));
  }
  return tri;
}

// ---------------------------------------------------------------------------
// Bounded identity checks.

inline CheckResult method_equivalence_check(unsigned max_n) {
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto extracted = triangle_row_extraction(n);
    const auto recursed = shared_recurrence().row(n);
    for (unsigned k = 1; k <= n; ++k) {
      if (extracted[k - 1] != recursed[k - 1]) {
        return CheckResult::fail("T(" + std::to_string(n) + "," + std::to_string(k) +
                                 "): extraction " + to_string(extracted[k - 1]) +
                                 " vs recurrence " + to_string(recursed[k - 1]));
      }
    }
  }
  return CheckResult::pass();
}

/// Re-derives every division the recurrence performs for rows up to max_n
/// and checks that each one leaves no remainder.
inline CheckResult integrality_check(unsigned max_n) {
  std::vector<BigInt> prev;
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto row = shared_recurrence().row(n);
    const bool n_odd = (n % 2) == 1;
    for (unsigned k = 2; k < n; ++k) {
      const std::string where = "T(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (k % 2 == 0) {
        if (!n_odd && (2 * row[k - 2]) % k != 0) return CheckResult::fail(where + " 2/k");
      } else {
        if ((prev[k - 1] * (k + 1)) % 2 != 0) return CheckResult::fail(where + " (k+1)/2");
        if (n_odd && (2 * prev[k - 3]) % (k - 1) != 0) return CheckResult::fail(where + " 2/(k-1)");
      }
    }
    for (const auto& v : row) {
      if (v < 0) return CheckResult::fail("negative entry in row " + std::to_string(n));
    }
    prev = row;
  }
  return CheckResult::pass();
}

/// T(n,k) == 0  <=>  k even, n odd, 1 < k < n.
inline CheckResult zero_pattern_check(unsigned max_n) {
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto row = shared_recurrence().row(n);
    for (unsigned k = 1; k <= n; ++k) {
      const bool expect_zero = k % 2 == 0 && n % 2 == 1 && k > 1 && k < n;
      if ((row[k - 1] == 0) != expect_zero) {
        return CheckResult::fail("T(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                 to_string(row[k - 1]));
      }
    }
  }
  return CheckResult::pass();
}

/// For even n and even k strictly inside the row, T(n,k) == T(n-1,k-1).
inline CheckResult collapse_identity_check(unsigned max_n) {
  for (unsigned n = 4; n <= max_n; n += 2) {
    for (unsigned k = 2; k < n; k += 2) {
      if (triangle_entry_recurrence(n, k) != triangle_entry_recurrence(n - 1, k - 1)) {
        return CheckResult::fail("T(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace flick

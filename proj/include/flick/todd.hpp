#pragma once

// The array Todd(n,k), n,k >= 1 (OEIS A394582): the odd-indexed columns of the
// flickering triangle rearranged so that row n holds difference order 2n-1.

#include "flick/bigint.hpp"
#include "flick/poly.hpp"
#include "flick/stirling.hpp"
#include "flick/triangle.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flick {

/// Row-major, lazily extended grid filled by the flickering rule
///   Todd(n,k) = n Todd(n,k-1) + [k odd] Todd(n-1,k),  Todd(n,1) = Todd(1,k) = 1.
class ToddGrid {
 public:
  ToddGrid() = default;
  ToddGrid(unsigned rows, unsigned cols) { extend(rows, cols); }

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  /// Grows the grid to at least rows x cols; existing entries are kept.
  void extend(unsigned rows, unsigned cols) {
    rows = std::max(rows, rows_);
    cols = std::max(cols, cols_);
    if (rows == rows_ && cols == cols_) return;
    for (unsigned n = 1; n <= rows; ++n) {
      if (n > rows_) entries_.emplace_back();
      auto& row = entries_[n - 1];
      const std::size_t have = row.size();
      row.resize(cols);
      for (unsigned k = static_cast<unsigned>(have) + 1; k <= cols; ++k) {
        if (n == 1 || k == 1) {
          row[k - 1] = 1;
        } else {
          row[k - 1] = n * row[k - 2];
          if (k % 2 == 1) row[k - 1] += entries_[n - 2][k - 1];
        }
      }
    }
    rows_ = rows;
    cols_ = cols;
  }

  const BigInt& at(unsigned n, unsigned k) const {
    if (n == 0 || k == 0 || n > rows_ || k > cols_) {
      throw std::out_of_range("ToddGrid::at(" + std::to_string(n) + "," + std::to_string(k) +
                              ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return entries_[n - 1][k - 1];
  }

  /// at() after growing the grid as needed.
  const BigInt& get(unsigned n, unsigned k) {
    extend(n, k);
    return at(n, k);
  }

  const std::vector<BigInt>& row(unsigned n) const { return entries_.at(n - 1); }

 private:
  unsigned rows_ = 0;
  unsigned cols_ = 0;
  std::vector<std::vector<BigInt>> entries_;
};

namespace detail {

inline void require_todd_index(unsigned n, unsigned k, const char* who) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument(std::string(who) + ": indices are 1-based, got (" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
  }
}

}  // namespace detail

inline BigInt todd_recurrence(unsigned n, unsigned k) {
  detail::require_todd_index(n, k, "todd_recurrence");
  return ToddGrid(n, k).at(n, k);
}

/// (2n-1)-th forward difference of j^(2n+k-2) at j = -(n-1), over (2n-1)!.
inline BigInt todd_finite_difference(unsigned n, unsigned k) {
  detail::require_todd_index(n, k, "todd_finite_difference");
  const unsigned order = 2 * n - 1;
  const unsigned power = 2 * n + k - 2;
  const auto binom = binomial_row(order);
  BigInt sum = 0;
  for (unsigned i = 0; i <= order; ++i) {
    BigInt term = binom[i] * ipow(BigInt(static_cast<long long>(i) - n + 1), power);
    if ((order - i) % 2 == 1) term = -term;
    sum += term;
  }
  return exact_div(sum, factorial(order),
                   "todd_finite_difference(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

inline BigInt todd_stirling(unsigned n, unsigned k) {
  detail::require_todd_index(n, k, "todd_stirling");
  const unsigned power = 2 * n + k - 2;
  const unsigned blocks = 2 * n - 1;
  const auto binom = binomial_row(power);
  const BigInt shift = BigInt(1 - static_cast<long long>(n));
  BigInt sum = 0;
  for (unsigned j = blocks; j <= power; ++j) {
    sum += binom[j] * ipow(shift, power - j) * stirling2(j, blocks);
  }
  return sum;
}

inline std::vector<BigInt> todd_row(unsigned n, unsigned count) {
  detail::require_todd_index(n, count, "todd_row");
  ToddGrid grid(n, count);
  return grid.row(n);
}

inline std::vector<BigInt> todd_column(unsigned k, unsigned count) {
  detail::require_todd_index(count, k, "todd_column");
  ToddGrid grid(count, k);
  std::vector<BigInt> col;
  col.reserve(count);
  for (unsigned n = 1; n <= count; ++n) col.push_back(grid.at(n, k));
  return col;
}

/// Recurrence, finite-difference and Stirling forms agree on 1..max_n x 1..max_k.
inline CheckResult todd_triple_check(unsigned max_n, unsigned max_k) {
  ToddGrid grid(max_n, max_k);
  for (unsigned n = 1; n <= max_n; ++n) {
    for (unsigned k = 1; k <= max_k; ++k) {
      const BigInt& rec = grid.at(n, k);
      const BigInt fd = todd_finite_difference(n, k);
      const BigInt st = todd_stirling(n, k);
      if (rec != fd || rec != st) {
        return CheckResult::fail("Todd(" + std::to_string(n) + "," + std::to_string(k) +
                                 "): recurrence=" + to_string(rec) + " fd=" + to_string(fd) +
                                 " stirling=" + to_string(st));
      }
    }
  }
  return CheckResult::pass();
}

/// Todd(m,k) == T(2m+k-2, 2m-1) on 1..max_m x 1..max_k.
inline CheckResult subgrid_check(unsigned max_m, unsigned max_k) {
  ToddGrid grid(max_m, max_k);
  for (unsigned m = 1; m <= max_m; ++m) {
    for (unsigned k = 1; k <= max_k; ++k) {
      const BigInt t = triangle_entry_recurrence(2 * m + k - 2, 2 * m - 1);
      if (grid.at(m, k) != t) {
        return CheckResult::fail("Todd(" + std::to_string(m) + "," + std::to_string(k) +
                                 ")=" + to_string(grid.at(m, k)) + " vs T(" +
                                 std::to_string(2 * m + k - 2) + "," + std::to_string(2 * m - 1) +
                                 ")=" + to_string(t));
      }
    }
  }
  return CheckResult::pass();
}

/// Todd(n,2m+1) - Todd(n-1,2m+1) == n^2 Todd(n,2m-1).
inline CheckResult column_transition_check(unsigned max_n, unsigned max_m) {
  ToddGrid grid(max_n, 2 * max_m + 1);
  for (unsigned n = 2; n <= max_n; ++n) {
    for (unsigned m = 1; m <= max_m; ++m) {
      const BigInt lhs = grid.at(n, 2 * m + 1) - grid.at(n - 1, 2 * m + 1);
      const BigInt rhs = BigInt(n) * n * grid.at(n, 2 * m - 1);
      if (lhs != rhs) {
        return CheckResult::fail("n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Closed-form polynomials for the odd columns.

/// T_m(n) = prod_{i=0..m} (n+i) * prod_{j=1..m} (2n+2j-1), expanded.
inline PolyZ base_poly(unsigned m) {
  PolyZ p = PolyZ::constant(1);
  for (unsigned i = 0; i <= m; ++i) p *= PolyZ{BigInt(i), BigInt(1)};
  for (unsigned j = 1; j <= m; ++j) p *= PolyZ{BigInt(2 * j - 1), BigInt(2)};
  return p;
}

/// Todd(n, 2m+1) = base_poly(n) * u_numerator(n) / denominator.
struct ColumnFactorization {
  unsigned m = 0;
  PolyZ base_poly;
  PolyZ u_numerator;
  BigInt denominator;
  std::vector<unsigned> sample_points;  // the n values used by the fit

  /// The factorized value at n; throws internal_error if it is not integral.
  BigInt evaluate(const BigInt& n) const {
    return exact_div(base_poly(n) * u_numerator(n), denominator, "column factorization");
  }
};

/// Divided-difference interpolation of U_m(n) = Todd(n,2m+1) / T_m(n).
/// Samples n = 1, 2, ... (skipping roots of T_m) until the divided differences
/// of some order d+1 vanish on at least two entries, which fixes deg U_m = d.
/// Throws std::runtime_error if no degree <= degree_cap is found.
inline ColumnFactorization fit_column_polynomial(unsigned m, std::optional<unsigned> degree_cap = {}) {
  if (m == 0) throw std::invalid_argument("fit_column_polynomial: m must be >= 1");
  const unsigned cap = degree_cap.value_or(4 * m);
  const unsigned col = 2 * m + 1;
  const PolyZ base = base_poly(m);

  std::vector<unsigned> xs;
  std::vector<Rational> ys;
  ToddGrid grid;
  unsigned next_n = 1;

  // table[d] holds the order-d divided differences over consecutive samples.
  std::optional<unsigned> degree;
  while (!degree) {
    const BigInt tm = base(BigInt(next_n));
    if (tm != 0) {
      xs.push_back(next_n);
      ys.push_back(Rational(grid.get(next_n, col), tm));
    }
    ++next_n;
    const std::size_t count = xs.size();
    if (count < 3) continue;

    std::vector<std::vector<Rational>> table{ys};
    for (std::size_t d = 1; d < count; ++d) {
      const auto& prev = table.back();
      std::vector<Rational> next(prev.size() - 1);
      for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
        next[i] = (prev[i + 1] - prev[i]) / Rational(static_cast<long long>(xs[i + d]) - xs[i]);
      }
      table.push_back(std::move(next));
    }
    for (std::size_t d = 0; d + 2 < count; ++d) {
      const auto& higher = table[d + 1];
      if (std::all_of(higher.begin(), higher.end(), [](const Rational& v) { return v == 0; })) {
        degree = static_cast<unsigned>(d);
        break;
      }
    }
    if (!degree && count >= cap + 3) {
      throw std::runtime_error("fit_column_polynomial: U_" + std::to_string(m) +
                               " is not a polynomial of degree <= " + std::to_string(cap));
    }
  }

  // Newton form over the first deg+1 samples, expanded to monomials.
  const unsigned d = *degree;
  std::vector<Rational> newton(ys.begin(), ys.begin() + d + 1);
  for (unsigned level = 1; level <= d; ++level) {
    for (unsigned i = d; i >= level; --i) {
      newton[i] = (newton[i] - newton[i - 1]) /
                  Rational(static_cast<long long>(xs[i]) - xs[i - level]);
    }
  }
  PolyQ u;
  PolyQ basis = PolyQ::constant(1);
  for (unsigned i = 0; i <= d; ++i) {
    u += basis * newton[i];
    basis *= PolyQ{Rational(-static_cast<long long>(xs[i])), Rational(1)};
  }

  BigInt lcd = 1;
  for (const auto& c : u.coeffs()) lcd = boost::multiprecision::lcm(lcd, boost::multiprecision::denominator(c));
  std::vector<BigInt> numer;
  numer.reserve(u.coeffs().size());
  for (const auto& c : u.coeffs()) numer.push_back(exact_integer(c * Rational(lcd), "fit_column_polynomial"));

  ColumnFactorization out;
  out.m = m;
  out.base_poly = base;
  out.u_numerator = PolyZ(std::move(numer));
  out.denominator = lcd;
  out.sample_points = xs;
  return out;
}

/// The fitted factorization reproduces Todd(n,2m+1) at `fresh` points past the
/// fitting samples, for every 1 <= m <= max_m.
inline CheckResult refit_check(unsigned max_m, unsigned fresh = 20) {
  for (unsigned m = 1; m <= max_m; ++m) {
    const auto fit = fit_column_polynomial(m);
    const unsigned first = fit.sample_points.back() + 1;
    ToddGrid grid(first + fresh, 2 * m + 1);
    for (unsigned n = first; n < first + fresh; ++n) {
      if (fit.evaluate(BigInt(n)) != grid.at(n, 2 * m + 1)) {
        return CheckResult::fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  return CheckResult::pass();
}

/// With U_m = P_m/D_m from the fits (and T_0 U_0 = Todd(n,1) = 1):
///   T_m(n)U_m(n) - T_m(n-1)U_m(n-1) == n^2 T_{m-1}(n)U_{m-1}(n).
inline CheckResult u_recurrence_check(unsigned max_m, unsigned max_n) {
  std::optional<ColumnFactorization> lower;
  for (unsigned m = 1; m <= max_m; ++m) {
    auto fit = fit_column_polynomial(m);
    auto value = [](const ColumnFactorization& f, unsigned n) {
      const Rational x(n);
      return f.base_poly(x) * f.u_numerator(x) / Rational(f.denominator);
    };
    for (unsigned n = 2; n <= max_n; ++n) {
      const Rational lhs = value(fit, n) - value(fit, n - 1);
      const Rational prev_col = lower ? value(*lower, n) : Rational(1);
      if (lhs != Rational(static_cast<long long>(n) * n) * prev_col) {
        return CheckResult::fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
    lower = std::move(fit);
  }
  return CheckResult::pass();
}

}  // namespace flick

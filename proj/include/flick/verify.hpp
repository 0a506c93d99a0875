#pragma once

// The bounded property suite behind `flick verify`. Each property is checked up
// to min(its own bound, max_n) in its leading index.

#include "flick/bell.hpp"
#include "flick/bigint.hpp"
#include "flick/genfunc.hpp"
#include "flick/known_values.hpp"
#include "flick/powersum.hpp"
#include "flick/series.hpp"
#include "flick/stirling.hpp"
#include "flick/todd.hpp"
#include "flick/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace flick {

/// Number of partitions of {1..n} into exactly k blocks, by walking all
/// restricted growth strings.
inline std::uint64_t count_set_partitions(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<unsigned> rgs(n, 0);
  std::uint64_t count = 0;
  std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned used) {
    if (used + (n - pos) < k) return;
    if (pos == n) {
      if (used == k) ++count;
      return;
    }
    for (unsigned b = 0; b <= used && b < k; ++b) {
      rgs[pos] = b;
      walk(pos + 1, b == used ? used + 1 : used);
    }
  };
  rgs[0] = 0;
  walk(1, 1);
  return count;
}

struct PropertyOutcome {
  std::string name;
  std::string scope;
  CheckResult result;
  std::chrono::milliseconds elapsed{0};
};

namespace detail {

inline std::vector<BigInt> int_range(long long lo, long long hi) {
  std::vector<BigInt> out;
  for (long long v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

inline CheckResult stirling_brute_force_check(unsigned max_n) {
  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      if (stirling2(n, k) != count_set_partitions(n, k)) {
        return CheckResult::fail("S2(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult todd_grid_prefix_check() {
  ToddGrid grid(5, 8);
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned k = 1; k <= 8; ++k) {
      if (grid.at(n, k) != known::todd_table[n - 1][k - 1]) {
        return CheckResult::fail("Todd(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult column_prefix_check() {
  for (unsigned k = 1; k <= 9; ++k) {
    const auto col = todd_column(k, 5);
    for (unsigned i = 0; i < 5; ++i) {
      if (col[i] != known::todd_columns[k - 1][i]) {
        return CheckResult::fail("column " + std::to_string(k) + " term " + std::to_string(i + 1));
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult triangle_prefix_check() {
  const auto tri = triangle_rows(10, Method::recurrence);
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      if (tri.at(n, k) != known::triangle_rows[n - 1][k - 1]) {
        return CheckResult::fail("T(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult bell_paths_check(unsigned max_n) {
  const auto rows = row_sums(max_n);
  const auto anti = antidiagonal_sums(max_n);
  const auto ogf = bell_ogf_coefficients(max_n + 1);
  for (unsigned n = 1; n <= max_n; ++n) {
    const BigInt& a = rows.values[n - 1];
    if (anti.values[n - 1] != a || ogf[n - 1] != a || bell_closed_form(n) != a) {
      return CheckResult::fail("a(" + std::to_string(n) + ")");
    }
    if (n <= known::bell_prefix.size() && a != known::bell_prefix[n - 1]) {
      return CheckResult::fail("a(" + std::to_string(n) + ") vs published prefix");
    }
  }
  return CheckResult::pass();
}

inline CheckResult kernel_lists_check() {
  for (const auto& list : known::kernels) {
    const auto g = kernel(list.p - 1, 7);
    for (unsigned i = 0; i < 7; ++i) {
      if (g.values[i] != list.values[i]) {
        return CheckResult::fail("G_" + std::to_string(list.p) + "[" + std::to_string(i) + "]");
      }
    }
  }
  return CheckResult::pass();
}

inline CheckResult binomial_inversion_check(unsigned max_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
  for (unsigned len = 0; len <= max_len; ++len) {
    IntSeq g{{}, 0};
    for (unsigned i = 0; i < len; ++i) g.values.emplace_back(dist(rng));
    if (binomial_transform(inverse_binomial_transform(g)) != g ||
        inverse_binomial_transform(binomial_transform(g)) != g) {
      return CheckResult::fail("length " + std::to_string(len));
    }
  }
  return CheckResult::pass();
}

inline SeriesQ random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  SeriesQ s(order);
  for (std::size_t i = 0; i < order; ++i) s[i] = Rational(num(rng), den(rng));
  return s;
}

inline CheckResult series_algebra_check(unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> ord(1, 9);
  for (unsigned t = 0; t < trials; ++t) {
    const auto f = random_series(rng, ord(rng));
    const auto g = random_series(rng, ord(rng));
    const auto h = random_series(rng, ord(rng));
    if ((f * g) * h != f * (g * h)) return CheckResult::fail("associativity, trial " + std::to_string(t));
    if (f * SeriesQ::one(f.order()) != f) return CheckResult::fail("unit, trial " + std::to_string(t));
  }
  return CheckResult::pass();
}

inline CheckResult oracle_equivalence_check(unsigned max_m, unsigned max_n) {
  std::vector<BigInt> points;
  for (unsigned n = 1; n <= max_n; ++n) points.emplace_back(n);
  points.emplace_back(1000);
  points.emplace_back(10000);
  for (unsigned m = 1; m <= max_m; ++m) {
    for (const auto& n : points) {
      if (power_sum(m, n).value != power_sum_naive(m, n)) {
        return CheckResult::fail("m=" + std::to_string(m) + " n=" + to_string(n));
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace detail

/// Runs every property, in a fixed order.
inline std::vector<PropertyOutcome> run_property_suite(unsigned max_n) {
  const auto cap = [max_n](unsigned bound) { return std::min(bound, max_n); };
  std::vector<PropertyOutcome> out;
  auto run = [&out](std::string name, std::string scope, const std::function<CheckResult()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = CheckResult::fail(std::string("exception: ") + e.what());
    }
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    out.push_back({std::move(name), std::move(scope), std::move(r), dt});
  };
  const auto n_str = [](unsigned v) { return std::to_string(v); };

  run("triangle.published_rows", "n<=10", [] { return detail::triangle_prefix_check(); });
  run("triangle.method_equivalence", "n<=" + n_str(cap(60)),
      [&] { return method_equivalence_check(cap(60)); });
  run("triangle.integrality", "n<=" + n_str(cap(200)), [&] { return integrality_check(cap(200)); });
  run("triangle.zero_pattern", "n<=" + n_str(cap(200)), [&] { return zero_pattern_check(cap(200)); });
  run("triangle.collapse", "n<=" + n_str(cap(200)), [&] { return collapse_identity_check(cap(200)); });
  run("triangle.basis_expansion", "m<=" + n_str(cap(25)) + ", n in [-10,10]", [&] {
    const auto range = detail::int_range(-10, 10);
    for (unsigned m = 1; m <= cap(25); ++m) {
      if (auto r = expand_power_check(m, range); !r) return r;
    }
    return CheckResult::pass();
  });

  run("todd.grid_prefix", "n<=5, k<=8", [] { return detail::todd_grid_prefix_check(); });
  run("todd.column_prefixes", "k<=9, 5 terms", [] { return detail::column_prefix_check(); });
  run("todd.triple_method", "n<=" + n_str(cap(8)) + ", k<=10", [&] { return todd_triple_check(cap(8), 10); });
  run("todd.subgrid", "m<=" + n_str(cap(8)) + ", k<=10", [&] { return subgrid_check(cap(8), 10); });
  run("todd.column_transition", "n<=" + n_str(cap(30)) + ", m<=6",
      [&] { return column_transition_check(cap(30), 6); });
  run("todd.refit", "m<=" + n_str(cap(5)) + ", 20 held-out n", [&] { return refit_check(cap(5), 20); });
  run("todd.u_recurrence", "m<=" + n_str(cap(5)) + ", n<=20", [&] { return u_recurrence_check(cap(5), 20); });

  run("stirling.brute_force", "n<=" + n_str(cap(8)), [&] { return detail::stirling_brute_force_check(cap(8)); });
  run("stirling.a008957_identities", "n<=" + n_str(cap(15)), [&] { return a008957_identity_check(cap(15)); });

  run("genfunc.row_series", "n<=" + n_str(cap(6)) + ", 20 terms", [&] { return row_gf_check(cap(6), 20); });
  run("genfunc.series_algebra", "200 random triples", [] { return detail::series_algebra_check(200, 7); });

  run("bell.four_paths", "n<=" + n_str(cap(20)), [&] { return detail::bell_paths_check(cap(20)); });
  run("bell.ogf_vs_row_sums", "n<=" + n_str(cap(24)), [&] {
    const auto rows = row_sums(cap(24));
    const auto ogf = bell_ogf_coefficients(cap(24) + 1);
    return std::equal(ogf.begin(), ogf.end(), rows.values.begin()) ? CheckResult::pass()
                                                                   : CheckResult::fail("prefix differs");
  });
  run("bell.binomial_inversion", "length<=30", [] { return detail::binomial_inversion_check(30, 11); });
  run("bell.kernel_lists", "p=1,3,5,7,9", [] { return detail::kernel_lists_check(); });
  run("bell.kernel_recovery", "q=2,4,6,8", [] {
    for (unsigned q : {2U, 4U, 6U, 8U}) {
      if (auto r = kernel_recovery_check(q, 20); !r) return r;
    }
    return CheckResult::pass();
  });
  run("bell.kernel_signs", "q=2..8, 12 terms", [] {
    for (unsigned q = 2; q <= 8; ++q) {
      if (auto r = kernel_sign_check(q, 12); !r) return r;
    }
    return CheckResult::pass();
  });

  run("powersum.divisibility", "k<=15, n in [-50,50]", [] { return basis_divisibility_check(15, 50); });
  run("powersum.basis_difference", "k<=12, j in [-20,20]", [] {
    const auto range = detail::int_range(-20, 20);
    for (unsigned k = 1; k <= 12; ++k) {
      if (auto r = basis_difference_check(k, range); !r) return r;
    }
    return CheckResult::pass();
  });
  run("powersum.telescoping", "k<=10, n<=" + n_str(cap(50)), [&] { return telescoping_check(10, cap(50)); });
  run("powersum.closed_forms", "n<=" + n_str(cap(200)), [&] { return classical_closed_forms_check(cap(200)); });
  run("powersum.oracle", "m<=" + n_str(cap(30)) + ", n<=" + n_str(cap(100)) + " and 10^3, 10^4",
      [&] { return detail::oracle_equivalence_check(cap(30), cap(100)); });
  return out;
}

}  // namespace flick

#pragma once

// The flickering Bell sequence a(n) = sum_k T(n,k) (OEIS A395022), its
// anti-diagonal reading, and binomial-transform kernels.

#include "flick/bigint.hpp"
#include "flick/todd.hpp"
#include "flick/triangle.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flick {

/// A finite integer sequence whose first element has index `offset`.
struct IntSeq {
  std::vector<BigInt> values;
  std::size_t offset = 0;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const IntSeq&, const IntSeq&) = default;
};

inline IntSeq row_sums(unsigned count) {
  if (count == 0) throw std::invalid_argument("row_sums: count must be >= 1");
  IntSeq out{{}, 1};
  out.values.reserve(count);
  for (unsigned n = 1; n <= count; ++n) {
    BigInt sum = 0;
    for (const auto& v : shared_recurrence().row(n)) sum += v;
    out.values.push_back(sum);
  }
  return out;
}

/// Reads a(n) off the Todd array instead of the triangle. Entry Todd(m,k) is the
/// normalized selection-path value of difference order 2m-1 in power 2m+k-2, so
/// the anti-diagonal D(p) = sum_{2m+k-2 = p} Todd(m,k) collects the odd orders of
/// power p. Even orders vanish for odd p and, for even p, repeat the odd orders
/// of p-1 (T(p,k) = T(p-1,k-1)), giving a(p) = D(p) + [p even] D(p-1).
inline IntSeq antidiagonal_sums(unsigned count) {
  if (count == 0) throw std::invalid_argument("antidiagonal_sums: count must be >= 1");
  ToddGrid grid((count + 1) / 2, count);
  auto diagonal = [&grid](unsigned p) {
    BigInt sum = 0;
    for (unsigned m = 1; 2 * m - 1 <= p; ++m) sum += grid.at(m, p + 2 - 2 * m);
    return sum;
  };
  IntSeq out{{}, 1};
  out.values.reserve(count);
  for (unsigned p = 1; p <= count; ++p) {
    BigInt sum = diagonal(p);
    if (p % 2 == 0) sum += diagonal(p - 1);
    out.values.push_back(sum);
  }
  return out;
}

/// a_n = sum_{i<=n} C(n,i) g_i. The offset is carried through unchanged.
inline IntSeq binomial_transform(const IntSeq& g) {
  IntSeq out{std::vector<BigInt>(g.size()), g.offset};
  for (std::size_t n = 0; n < g.size(); ++n) {
    const auto binom = binomial_row(static_cast<unsigned>(n));
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += binom[i] * g.values[i];
    out.values[n] = acc;
  }
  return out;
}

/// g_n = sum_{i<=n} (-1)^{n-i} C(n,i) a_i.
inline IntSeq inverse_binomial_transform(const IntSeq& a) {
  IntSeq out{std::vector<BigInt>(a.size()), a.offset};
  for (std::size_t n = 0; n < a.size(); ++n) {
    const auto binom = binomial_row(static_cast<unsigned>(n));
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if ((n - i) % 2 == 0) {
        acc += binom[i] * a.values[i];
      } else {
        acc -= binom[i] * a.values[i];
      }
    }
    out.values[n] = acc;
  }
  return out;
}

/// 1, a(1), a(2), ...: the Bell sequence with a(0) = 1 prepended, offset 0.
inline IntSeq bell_with_unit(unsigned count) {
  if (count == 0) throw std::invalid_argument("bell_with_unit: count must be >= 1");
  IntSeq out{{BigInt(1)}, 0};
  if (count > 1) {
    const auto sums = row_sums(count - 1);
    out.values.insert(out.values.end(), sums.values.begin(), sums.values.end());
  }
  return out;
}

/// B^{-q} applied to the unit-prefixed Bell sequence; the first `count` terms.
/// The kernel usually labelled G_p is kernel(p - 1).
inline IntSeq kernel(unsigned q, unsigned count) {
  IntSeq g = bell_with_unit(count);
  for (unsigned i = 0; i < q; ++i) g = inverse_binomial_transform(g);
  return g;
}

/// Forward transform applied q times to kernel(q) recovers the prefixed sequence.
inline CheckResult kernel_recovery_check(unsigned q, unsigned count) {
  IntSeq g = kernel(q, count);
  for (unsigned i = 0; i < q; ++i) g = binomial_transform(g);
  if (g != bell_with_unit(count)) return CheckResult::fail("q=" + std::to_string(q));
  return CheckResult::pass();
}

/// kernel(q) alternates in sign from index 1 on, over `count` terms.
inline CheckResult kernel_sign_check(unsigned q, unsigned count) {
  const IntSeq g = kernel(q, count);
  for (std::size_t i = 1; i < g.size(); ++i) {
    const bool want_negative = i % 2 == 1;
    if (want_negative ? g.values[i] >= 0 : g.values[i] <= 0) {
      return CheckResult::fail("q=" + std::to_string(q) + " index " + std::to_string(i));
    }
  }
  return CheckResult::pass();
}

}  // namespace flick

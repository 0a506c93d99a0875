#pragma once

// Rational generating functions with integer coefficients, their Maclaurin
// expansion, and the two series representations of the flickering Bell sequence.

#include "flick/bigint.hpp"
#include "flick/poly.hpp"
#include "flick/series.hpp"
#include "flick/todd.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flick {

/// num(x) / den(x) over Z. den(0) must be +1 or -1 so that integer numerators
/// expand to integer series.
class RationalFunctionZ {
 public:
  RationalFunctionZ(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    const BigInt d0 = den_.coeff(0);
    if (d0 == 0) throw std::invalid_argument("RationalFunctionZ: denominator has a pole at 0");
    if (d0 != 1 && d0 != -1) {
      throw std::invalid_argument("RationalFunctionZ: den(0) = " + flick::to_string(d0) +
                                  " is not a unit in Z");
    }
  }

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }

  std::string to_string(char var = 'x') const {
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
  }

 private:
  PolyZ num_;
  PolyZ den_;
};

/// c_0 ... c_{order-1} of num/den by exact long division:
///   c_j = (num_j - sum_{i>=1} den_i c_{j-i}) / den_0.
inline std::vector<BigInt> expand_rational(const RationalFunctionZ& f, std::size_t order) {
  const auto& den = f.den().coeffs();
  const BigInt& d0 = den[0];
  std::vector<BigInt> c(order);
  for (std::size_t j = 0; j < order; ++j) {
    BigInt acc = f.num().coeff(j);
    for (std::size_t i = 1; i < den.size() && i <= j; ++i) acc -= den[i] * c[j - i];
    c[j] = d0 == 1 ? acc : BigInt(-acc);
  }
  return c;
}

/// x / prod_{j=1..n} (1 - j^2 x): odd-indexed entries of Todd row n.
inline RationalFunctionZ row_gf_odd(unsigned n) {
  if (n == 0) throw std::invalid_argument("row_gf_odd: n must be >= 1");
  return {PolyZ::monomial(1, 1), square_factor_product(n, 1)};
}

/// x (1 + n x) / prod_{j=1..n} (1 - j^2 x^2): the full Todd row n.
inline RationalFunctionZ row_gf_full(unsigned n) {
  if (n == 0) throw std::invalid_argument("row_gf_full: n must be >= 1");
  return {PolyZ{BigInt(0), BigInt(1), BigInt(n)}, square_factor_product(n, 2)};
}

/// Coefficients of x^1 .. x^{order-1} of
///   A(x) = sum_{k>=1} (x^{2k-1} + (k+1) x^{2k}) / prod_{j=1..k} (1 - j^2 x^2).
/// Term k starts at x^{2k-1}, so only k with 2k-1 < order contribute.
inline std::vector<BigInt> bell_ogf_coefficients(std::size_t order) {
  if (order == 0) throw std::invalid_argument("bell_ogf_coefficients: order must be >= 1");
  std::vector<BigInt> total(order);
  for (unsigned k = 1; 2 * static_cast<std::size_t>(k) - 1 < order; ++k) {
    const PolyZ num = PolyZ::monomial(1, 2 * k - 1) + PolyZ::monomial(BigInt(k + 1), 2 * k);
    const auto part = expand_rational({num, square_factor_product(k, 2)}, order);
    for (std::size_t i = 0; i < order; ++i) total[i] += part[i];
  }
  return {total.begin() + 1, total.end()};
}

/// a(n) = (2k)! [x^k] (cosh(2s) + [n even] s sinh(2s)), s = sinh(sqrt(x)/2),
/// k = floor((n+1)/2). Computed in t = sqrt(x), where s is an odd series and
/// both summands are even, so [x^k] is the t^{2k} coefficient.
inline BigInt bell_closed_form(unsigned n) {
  if (n == 0) throw std::invalid_argument("bell_closed_form: n must be >= 1");
  const unsigned k = (n + 1) / 2;
  const std::size_t order = 2 * static_cast<std::size_t>(k) + 1;

  SeriesQ s(order);
  BigInt odd_factorial = 1;  // (2i+1)!
  BigInt pow2 = 2;           // 2^(2i+1)
  for (std::size_t i = 0; 2 * i + 1 < order; ++i) {
    if (i > 0) {
      odd_factorial *= (2 * i) * (2 * i + 1);
      pow2 *= 4;
    }
    s[2 * i + 1] = Rational(BigInt(1), pow2 * odd_factorial);
  }

  const SeriesQ two_s = s * Rational(2);
  SeriesQ f = two_s.cosh();
  if (n % 2 == 0) f = f + s * two_s.sinh();
  return exact_integer(f[2 * k] * Rational(factorial(2 * k)),
                       "bell_closed_form(" + std::to_string(n) + ")");
}

/// Series of row_gf_full(n) / row_gf_odd(n) reproduce the Todd rows for n <= max_n,
/// checking `terms` coefficients each.
inline CheckResult row_gf_check(unsigned max_n, unsigned terms = 20) {
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto row = todd_row(n, 2 * terms);
    const auto full = expand_rational(row_gf_full(n), terms + 1);
    const auto odd = expand_rational(row_gf_odd(n), terms + 1);
    if (full[0] != 0 || odd[0] != 0) return CheckResult::fail("n=" + std::to_string(n) + " c0");
    for (unsigned k = 1; k <= terms; ++k) {
      if (full[k] != row[k - 1]) {
        return CheckResult::fail("full G_" + std::to_string(n) + " at x^" + std::to_string(k));
      }
      if (odd[k] != row[2 * k - 2]) {
        return CheckResult::fail("odd G_" + std::to_string(n) + " at x^" + std::to_string(k));
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace flick

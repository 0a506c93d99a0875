#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flick {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an identity that must hold exactly (a division that has to
/// leave no remainder, a coefficient that has to be integral) is violated.
/// Seeing one means a bug in this library, never bad user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

/// num / den, throwing internal_error if den does not divide num.
inline BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view context) {
  if (den == 0) throw internal_error(std::string(context) + ": division by zero");
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw internal_error(std::string(context) + ": " + num.str() + " is not divisible by " +
                         den.str());
  }
  return q;
}

/// The integer value of a rational, throwing internal_error if it has a
/// nontrivial denominator.
inline BigInt exact_integer(const Rational& x, std::string_view context) {
  if (boost::multiprecision::denominator(x) != 1) {
    throw internal_error(std::string(context) + ": " + to_string(x) + " is not an integer");
  }
  return boost::multiprecision::numerator(x);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// C(n,0) ... C(n,n).
inline std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned i = 0; i < n; ++i) row[i + 1] = row[i] * (n - i) / (i + 1);
  return row;
}

/// base^exp with 0^0 = 1.
inline BigInt ipow(const BigInt& base, unsigned exp) {
  if (exp == 0) return 1;
  return boost::multiprecision::pow(base, exp);
}

/// Parses an optionally signed decimal integer; rejects anything else.
inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  // A leading zero would make the string constructor read octal.
  const auto nonzero = digits.find_first_not_of('0');
  if (nonzero == std::string_view::npos) return 0;
  BigInt value{std::string(digits.substr(nonzero))};
  return text.front() == '-' ? BigInt(-value) : value;
}

/// Outcome of a bounded identity check. A failed check carries the first
/// counterexample it found.
struct CheckResult {
  bool ok = true;
  std::string first_mismatch;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string where) { return {false, std::move(where)}; }
};

}  // namespace flick

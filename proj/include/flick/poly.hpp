#pragma once

#include "flick/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace flick {

/// Dense univariate polynomial, coefficients in ascending degree. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  /// c * x^degree
  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  /// Horner evaluation in the ring of x.
  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "2n^3 + 3n^2 + n".
  std::string to_string(char var = 'n') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
      const Coeff& c = coeffs_[idx];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Coeff mag = negative ? Coeff(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (idx == 0 || mag != 1) out += flick::to_string(mag);
      if (idx >= 1) out += var;
      if (idx >= 2) out += "^" + std::to_string(idx);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using PolyZ = Polynomial<BigInt>;
using PolyQ = Polynomial<Rational>;

/// gcd of all coefficients (nonnegative; 0 for the zero polynomial).
inline BigInt content(const PolyZ& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

/// Product of (1 - j^2 x^step) for j = 1..n.
inline PolyZ square_factor_product(unsigned n, unsigned step) {
  PolyZ out = PolyZ::constant(1);
  for (unsigned j = 1; j <= n; ++j) {
    out *= PolyZ::constant(1) - PolyZ::monomial(BigInt(j) * j, step);
  }
  return out;
}

}  // namespace flick

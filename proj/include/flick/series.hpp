#pragma once

#include "flick/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flick {

/// Truncated formal power series over Q. Holds exactly `order` coefficients
/// (degrees 0 .. order-1); everything from x^order on is unknown. Binary
/// operations truncate to the smaller of the two orders.
class SeriesQ {
 public:
  explicit SeriesQ(std::size_t order = 0) : coeffs_(order, Rational(0)) {}

  /// Pads with zeros or drops terms so that exactly `order` coefficients remain.
  SeriesQ(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order, Rational(0));
  }

  static SeriesQ one(std::size_t order) {
    SeriesQ s(order);
    if (order > 0) s.coeffs_[0] = 1;
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  const Rational& operator[](std::size_t i) const {
    if (i >= coeffs_.size()) {
      throw std::out_of_range("SeriesQ: coefficient " + std::to_string(i) +
                              " is beyond truncation order " + std::to_string(coeffs_.size()));
    }
    return coeffs_[i];
  }
  Rational& operator[](std::size_t i) {
    return const_cast<Rational&>(static_cast<const SeriesQ&>(*this)[i]);
  }

  friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    SeriesQ out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
    SeriesQ out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }

  friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    SeriesQ out(std::min(a.order(), b.order()));
    const std::size_t n = out.order();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend SeriesQ operator*(SeriesQ a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  SeriesQ operator-() const { return *this * Rational(-1); }

  friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.coeffs_ == b.coeffs_; }

  /// exp of a series with zero constant term, from E' = f' E:
  /// n E_n = sum_{k=1..n} k f_k E_{n-k}.
  SeriesQ exp() const {
    if (order() > 0 && coeffs_[0] != 0) {
      throw std::invalid_argument("SeriesQ::exp: constant term must be zero");
    }
    SeriesQ e(order());
    if (order() == 0) return e;
    e.coeffs_[0] = 1;
    for (std::size_t n = 1; n < order(); ++n) {
      Rational acc = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (coeffs_[k] != 0) acc += Rational(static_cast<long long>(k)) * coeffs_[k] * e.coeffs_[n - k];
      }
      e.coeffs_[n] = acc / Rational(static_cast<long long>(n));
    }
    return e;
  }

  SeriesQ cosh() const {
    return (exp() + (-*this).exp()) * Rational(1, 2);
  }

  SeriesQ sinh() const {
    return (exp() - (-*this).exp()) * Rational(1, 2);
  }

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace flick

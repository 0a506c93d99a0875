#include "flick/bell.hpp"
#include "flick/genfunc.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using flick::BigInt;
using flick::PolyZ;
using flick::testing::big;

TEST(ExpandRational, Examples) {
  const flick::RationalFunctionZ a{PolyZ{0, 1}, PolyZ{1, -1} * PolyZ{1, -4}};
  EXPECT_EQ(flick::expand_rational(a, 5), big({0, 1, 5, 21, 85}));

  const flick::RationalFunctionZ b{PolyZ{0, 1, 2}, PolyZ{1, 0, -1} * PolyZ{1, 0, -4}};
  EXPECT_EQ(flick::expand_rational(b, 9), big({0, 1, 2, 5, 10, 21, 42, 85, 170}));

  EXPECT_EQ(flick::expand_rational({PolyZ{1}, PolyZ{1, -1}}, 4), big({1, 1, 1, 1}));
}

TEST(ExpandRational, NegativeUnitDenominator) {
  // 1 / (-1 + x) = -(1 + x + x^2 + ...)
  EXPECT_EQ(flick::expand_rational({PolyZ{1}, PolyZ{-1, 1}}, 4), big({-1, -1, -1, -1}));
}

TEST(ExpandRational, RejectsPoleAndNonUnitDenominator) {
  EXPECT_THROW(flick::RationalFunctionZ(PolyZ{1}, PolyZ{0, 1}), std::invalid_argument);
  EXPECT_THROW(flick::RationalFunctionZ(PolyZ{1}, PolyZ{}), std::invalid_argument);
  EXPECT_THROW(flick::RationalFunctionZ(PolyZ{1}, PolyZ{2, 1}), std::invalid_argument);
}

TEST(RowGf, Construction) {
  EXPECT_EQ(flick::row_gf_odd(2).den(), (PolyZ{1, -5, 4}));
  EXPECT_EQ(flick::row_gf_full(3).num(), (PolyZ{0, 1, 3}));
  EXPECT_EQ(flick::expand_rational(flick::row_gf_odd(1), 6), big({0, 1, 1, 1, 1, 1}));
  EXPECT_THROW(flick::row_gf_odd(0), std::invalid_argument);
  EXPECT_THROW(flick::row_gf_full(0), std::invalid_argument);
}

TEST(RowGf, ReproducesToddRows) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto row = flick::todd_row(n, 20);
    const auto full = flick::expand_rational(flick::row_gf_full(n), 21);
    for (unsigned k = 1; k <= 20; ++k) EXPECT_EQ(full[k], row[k - 1]) << "n=" << n << " k=" << k;
    const auto odd = flick::expand_rational(flick::row_gf_odd(n), 11);
    for (unsigned k = 1; k <= 10; ++k) EXPECT_EQ(odd[k], flick::todd_recurrence(n, 2 * k - 1));
  }
  EXPECT_TRUE(flick::row_gf_check(6, 20));
}

TEST(BellOgf, Coefficients) {
  EXPECT_EQ(flick::bell_ogf_coefficients(5), big({1, 2, 2, 5}));
  EXPECT_EQ(flick::bell_ogf_coefficients(11), big({1, 2, 2, 5, 7, 21, 37, 126, 264, 1001}));
  EXPECT_EQ(flick::bell_ogf_coefficients(2), big({1}));
  EXPECT_TRUE(flick::bell_ogf_coefficients(1).empty());
}

TEST(BellOgf, MatchesRowSumsTo24) {
  const auto ogf = flick::bell_ogf_coefficients(25);
  EXPECT_EQ(ogf, flick::row_sums(24).values);
}

TEST(BellClosedForm, Values) {
  EXPECT_EQ(flick::bell_closed_form(1), 1);
  EXPECT_EQ(flick::bell_closed_form(2), 2);
  const std::vector<long long> expected{1, 2, 2, 5, 7, 21, 37, 126, 264, 1001};
  for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(flick::bell_closed_form(n), expected[n - 1]);
  EXPECT_THROW(flick::bell_closed_form(0), std::invalid_argument);
}

TEST(BellClosedForm, MatchesRowSumsTo20) {
  const auto sums = flick::row_sums(20);
  for (unsigned n = 1; n <= 20; ++n) EXPECT_EQ(flick::bell_closed_form(n), sums.values[n - 1]);
}

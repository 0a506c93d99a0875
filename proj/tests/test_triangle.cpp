#include "flick/known_values.hpp"
#include "flick/triangle.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using flick::BigInt;
using flick::testing::big;

TEST(DiffTable, LevelsAreForwardDifferences) {
  const auto t = flick::build_diff_table(4);
  ASSERT_EQ(t.values.size(), 13U);  // j = -6 .. 6
  EXPECT_EQ(t.values.front(), 1296);
  ASSERT_EQ(t.levels.size(), 5U);
  EXPECT_EQ(t.levels[0], t.values);
  for (unsigned k = 1; k <= 4; ++k) {
    ASSERT_EQ(t.levels[k].size(), t.values.size() - k);
    for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
      EXPECT_EQ(t.levels[k][i], t.levels[k - 1][i + 1] - t.levels[k - 1][i]);
    }
  }
}

TEST(DiffTable, FirstDifferenceOfIdentityIsOne) {
  const auto t = flick::build_diff_table(1);
  for (const auto& v : t.levels[1]) EXPECT_EQ(v, 1);
}

TEST(DiffTable, TopLevelIsFactorial) {
  const auto t = flick::build_diff_table(3);
  for (const auto& v : t.levels[3]) EXPECT_EQ(v, 6);
}

TEST(DiffTable, RejectsPowerZero) {
  EXPECT_THROW(flick::build_diff_table(0), std::invalid_argument);
}

TEST(Extraction, PublishedRows) {
  EXPECT_EQ(flick::triangle_row_extraction(1), big({1}));
  EXPECT_EQ(flick::triangle_row_extraction(6), big({1, 1, 10, 5, 3, 1}));
  EXPECT_EQ(flick::triangle_row_extraction(7), big({1, 0, 21, 0, 14, 0, 1}));
  EXPECT_EQ(flick::triangle_row_extraction(10), big({1, 1, 170, 85, 441, 147, 120, 30, 5, 1}));
  EXPECT_THROW(flick::triangle_row_extraction(0), std::invalid_argument);
}

// Rows 20 and 21 as produced by an independent run of the published extraction listing.
TEST(Extraction, LargerRowsMatchListingRun) {
  EXPECT_EQ(flick::triangle_row_extraction(20),
            big({1, 1, 174762, 87381, 29004108, 9668036, 212628316, 53157079, 232939525, 46587905,
                 64723386, 10787231, 5923820, 846260, 201552, 25194, 2565, 285, 10, 1}));
  EXPECT_EQ(flick::triangle_row_extraction(21),
            big({1, 0, 349525, 0, 87099705, 0, 860181300, 0, 1217854704, 0, 434928221, 0, 52253971, 0,
                 2458676, 0, 48279, 0, 385, 0, 1}));
}

TEST(Recurrence, Entries) {
  EXPECT_EQ(flick::triangle_entry_recurrence(5, 3), 5);
  EXPECT_EQ(flick::triangle_entry_recurrence(8, 5), 42);
  for (unsigned n = 1; n <= 30; ++n) {
    EXPECT_EQ(flick::triangle_entry_recurrence(n, n), 1);
    EXPECT_EQ(flick::triangle_entry_recurrence(n, 1), 1);
  }
}

TEST(Recurrence, OutOfRangeIsZero) {
  EXPECT_EQ(flick::triangle_entry_recurrence(5, 0), 0);
  EXPECT_EQ(flick::triangle_entry_recurrence(5, 6), 0);
  EXPECT_EQ(flick::triangle_entry_recurrence(0, 0), 0);
}

TEST(Recurrence, InstanceCachesRows) {
  flick::FlickerRecurrence rec;
  EXPECT_EQ(rec.cached_rows(), 0U);
  EXPECT_EQ(rec.entry(9, 3), 85);
  EXPECT_EQ(rec.cached_rows(), 9U);
  EXPECT_EQ(rec.row(4), big({1, 1, 2, 1}));
  EXPECT_EQ(rec.cached_rows(), 9U);
}

TEST(TriangleRows, SmallAndPublished) {
  const flick::FlickerTriangle two{{big({1}), big({1, 1})}};
  EXPECT_EQ(flick::triangle_rows(2, flick::Method::extraction), two);
  EXPECT_EQ(flick::triangle_rows(2, flick::Method::recurrence), two);

  const auto tri = flick::triangle_rows(10, flick::Method::recurrence);
  EXPECT_EQ(tri.rows[8], big({1, 0, 85, 0, 147, 0, 30, 0, 1}));
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned k = 1; k <= n; ++k) EXPECT_EQ(tri.at(n, k), flick::known::triangle_rows[n - 1][k - 1]);
  }
  EXPECT_EQ(tri, flick::triangle_rows(10, flick::Method::extraction));
  EXPECT_THROW(flick::triangle_rows(0, flick::Method::recurrence), std::invalid_argument);
}

TEST(TriangleProperties, MethodsAgreeUpTo60) { EXPECT_TRUE(flick::method_equivalence_check(60)); }

TEST(TriangleProperties, RecurrenceDivisionsExactUpTo200) { EXPECT_TRUE(flick::integrality_check(200)); }

TEST(TriangleProperties, ZeroPatternUpTo200) { EXPECT_TRUE(flick::zero_pattern_check(200)); }

TEST(TriangleProperties, EvenEvenCollapseUpTo200) { EXPECT_TRUE(flick::collapse_identity_check(200)); }

TEST(TriangleProperties, EntriesNonnegative) {
  for (unsigned n = 1; n <= 80; ++n) {
    for (const auto& v : flick::shared_recurrence().row(n)) EXPECT_GE(v, 0);
  }
}

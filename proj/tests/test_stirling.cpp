#include "flick/stirling.hpp"
#include "flick/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

TEST(Stirling2, Values) {
  for (unsigned n = 0; n <= 20; ++n) EXPECT_EQ(flick::stirling2(n, n), 1);
  EXPECT_EQ(flick::stirling2(4, 2), 7);
  EXPECT_EQ(flick::stirling2(3, 3), 1);
  EXPECT_EQ(flick::stirling2(10, 4), 34105);
  EXPECT_EQ(flick::stirling2(0, 0), 1);
  EXPECT_EQ(flick::stirling2(5, 0), 0);
  EXPECT_EQ(flick::stirling2(3, 7), 0);
}

TEST(Stirling2, TableRecurrence) {
  for (unsigned n = 1; n <= 25; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      EXPECT_EQ(flick::stirling2(n, k), k * flick::stirling2(n - 1, k) + flick::stirling2(n - 1, k - 1));
    }
  }
}

TEST(Stirling2, MatchesSurjectionEnumeration) {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(flick::stirling2(n, k), flick::testing::set_partitions_by_surjections(n, k))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Stirling2, LibraryPartitionCounterAgreesWithSurjections) {
  for (unsigned n = 0; n <= 7; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(flick::count_set_partitions(n, k), flick::testing::set_partitions_by_surjections(n, k));
    }
  }
}

TEST(A008957, FiniteDifferenceForm) {
  EXPECT_EQ(flick::a008957_fd(2, 1), 1);
  EXPECT_EQ(flick::a008957_fd(3, 2), 5);
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(flick::a008957_fd(n, n), 1);
}

TEST(A008957, StirlingForm) {
  EXPECT_EQ(flick::a008957_stirling(2, 1), 1);
  EXPECT_EQ(flick::a008957_stirling(4, 2), 14);
  EXPECT_EQ(flick::a008957_stirling(3, 3), 1);
}

TEST(A008957, RejectsOutOfRange) {
  EXPECT_THROW(flick::a008957_fd(0, 0), std::invalid_argument);
  EXPECT_THROW(flick::a008957_fd(3, 4), std::invalid_argument);
  EXPECT_THROW(flick::a008957_stirling(3, 0), std::invalid_argument);
}

TEST(A008957, IdentityTripleUpTo15) { EXPECT_TRUE(flick::a008957_identity_check(15)); }

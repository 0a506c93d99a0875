#include "flick/verify.hpp"

#include <gtest/gtest.h>

#include <set>

TEST(CountSetPartitions, SmallValues) {
  EXPECT_EQ(flick::count_set_partitions(0, 0), 1U);
  EXPECT_EQ(flick::count_set_partitions(4, 2), 7U);
  EXPECT_EQ(flick::count_set_partitions(5, 3), 25U);
  EXPECT_EQ(flick::count_set_partitions(3, 5), 0U);
}

namespace {

void expect_all_pass(unsigned max_n) {
  const auto outcomes = flick::run_property_suite(max_n);
  EXPECT_GE(outcomes.size(), 25U);
  std::set<std::string> names;
  for (const auto& o : outcomes) {
    EXPECT_TRUE(o.result.ok) << o.name << " (" << o.scope << "): " << o.result.first_mismatch;
    EXPECT_TRUE(names.insert(o.name).second) << "duplicate property " << o.name;
  }
}

}  // namespace

TEST(PropertySuite, PassesAtSmallBound) { expect_all_pass(15); }

TEST(PropertySuite, PassesAtDefaultBound) { expect_all_pass(200); }

TEST(PropertySuite, OrderIsDeterministic) {
  const auto a = flick::run_property_suite(10);
  const auto b = flick::run_property_suite(10);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].name, b[i].name);
}

#include "flick/io.hpp"
#include "oracles.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

using flick::BigInt;
using flick::IntSeq;
using flick::OutputFormat;
using flick::testing::big;

TEST(Format, Parse) {
  EXPECT_EQ(flick::parse_format("csv"), OutputFormat::csv);
  EXPECT_EQ(flick::parse_format("bfile"), OutputFormat::bfile);
  EXPECT_THROW(flick::parse_format("xml"), flick::usage_error);
}

TEST(RenderSequence, AllFormats) {
  const IntSeq seq{big({1, 5, 14}), 1};
  EXPECT_EQ(flick::render_sequence("c", seq, OutputFormat::table), "1, 5, 14\n");
  EXPECT_EQ(flick::render_sequence("c", seq, OutputFormat::csv), "1,5,14\n");
  EXPECT_EQ(flick::render_sequence("c", seq, OutputFormat::bfile), "1 1\n2 5\n3 14\n");
  const auto doc = nlohmann::json::parse(flick::render_sequence("c", seq, OutputFormat::json));
  EXPECT_EQ(doc["name"], "c");
  EXPECT_EQ(doc["offset"], 1);
  EXPECT_EQ(doc["values"], nlohmann::json({"1", "5", "14"}));
}

TEST(RenderSequence, LargeValuesStayExact) {
  const IntSeq seq{{BigInt("123456789012345678901234567890")}, 0};
  EXPECT_EQ(flick::render_sequence("x", seq, OutputFormat::bfile), "0 123456789012345678901234567890\n");
  const auto doc = nlohmann::json::parse(flick::render_sequence("x", seq, OutputFormat::json));
  EXPECT_EQ(doc["values"][0], "123456789012345678901234567890");
}

TEST(RenderGrid, Formats) {
  const std::vector<std::vector<BigInt>> rows{big({1}), big({1, 1}), big({1, 0, 1})};
  EXPECT_EQ(flick::render_grid("t", rows, 1, OutputFormat::csv), "1\n1,1\n1,0,1\n");
  EXPECT_EQ(flick::render_grid("t", rows, 1, OutputFormat::table), "1 | 1\n2 | 1 1\n3 | 1 0 1\n");
  const auto doc = nlohmann::json::parse(flick::render_grid("t", rows, 1, OutputFormat::json));
  EXPECT_EQ(doc["values"][2], nlohmann::json({"1", "0", "1"}));
  EXPECT_THROW(flick::render_grid("t", rows, 1, OutputFormat::bfile), flick::usage_error);
}

TEST(Bfile, ParseSkipsCommentsAndBlanks) {
  const auto seq = flick::parse_bfile("# header\n\n0 1\n1 -1\n  \n2 2\n");
  EXPECT_EQ(seq.offset, 0U);
  EXPECT_EQ(seq.values, big({1, -1, 2}));
}

TEST(Bfile, ParseErrors) {
  EXPECT_THROW(flick::parse_bfile("1 1\n3 2\n"), std::invalid_argument);
  EXPECT_THROW(flick::parse_bfile("1 x\n"), std::invalid_argument);
  EXPECT_THROW(flick::parse_bfile("1 2 3\n"), std::invalid_argument);
  EXPECT_THROW(flick::parse_bfile("1\n"), std::invalid_argument);
  EXPECT_TRUE(flick::parse_bfile("").values.empty());
}

TEST(Bfile, RoundTripRandomSequences) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned> len(0, 40);
  std::uniform_int_distribution<unsigned> off(0, 3);
  std::uniform_int_distribution<long long> val(-(1LL << 62), 1LL << 62);
  for (int trial = 0; trial < 200; ++trial) {
    IntSeq seq{{}, off(rng)};
    const unsigned n = len(rng);
    for (unsigned i = 0; i < n; ++i) seq.values.push_back(BigInt(val(rng)) * val(rng));
    const auto back = flick::parse_bfile(flick::write_bfile(seq));
    if (n > 0) ASSERT_EQ(back, seq) << "trial " << trial;
    else ASSERT_TRUE(back.values.empty());
  }
}

class RowCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("flick-cache-test-" + std::to_string(std::random_device{}()));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(RowCacheTest, StoreThenLoad) {
  flick::RowCache cache(dir_);
  EXPECT_FALSE(cache.load("recurrence", 3));
  cache.store("recurrence", 3, big({1, 0, 1}));
  const auto row = cache.load("recurrence", 3);
  ASSERT_TRUE(row);
  EXPECT_EQ(*row, big({1, 0, 1}));
  EXPECT_FALSE(cache.load("extraction", 3));
  EXPECT_TRUE(std::filesystem::exists(cache.shard("recurrence", 3)));
}

TEST_F(RowCacheTest, RejectsCorruptShards) {
  flick::RowCache cache(dir_);
  cache.store("recurrence", 4, big({1, 1, 2}));  // wrong length for row 4
  EXPECT_FALSE(cache.load("recurrence", 4));
  std::ofstream(cache.shard("recurrence", 2)) << "1 1\nnot a number\n";
  EXPECT_FALSE(cache.load("recurrence", 2));
}

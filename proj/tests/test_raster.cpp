#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "coreseg/errors.hpp"
#include "coreseg/raster.hpp"
#include "oracles.hpp"

namespace coreseg {
namespace {

using testing::from_ascii;

TEST(RowCounts, EmptyImage) {
  EXPECT_EQ(row_counts(BinaryImage(3, 2)), (std::vector<int>{0, 0}));
}

TEST(RowCounts, SolidImage) {
  EXPECT_EQ(row_counts(BinaryImage(3, 2, true)), (std::vector<int>{3, 3}));
}

TEST(RowCounts, HandCounted) {
  EXPECT_EQ(row_counts(from_ascii({"#.#", "..."})), (std::vector<int>{2, 0}));
}

TEST(ColumnCounts, FullBandOverSolid) {
  EXPECT_EQ(column_counts(BinaryImage(3, 2, true), 0, 1), (std::vector<int>{2, 2, 2}));
}

TEST(ColumnCounts, SingleEmptyRowBand) {
  const auto img = from_ascii({"###", "...", "###"});
  EXPECT_EQ(column_counts(img, 1, 1), (std::vector<int>{0, 0, 0}));
}

TEST(ColumnCounts, DiagonalTopTwoRows) {
  const auto img = from_ascii({"#..", ".#.", "..#"});
  EXPECT_EQ(column_counts(img, 0, 1), (std::vector<int>{1, 1, 0}));
}

TEST(ColumnCounts, BadBandThrows) {
  const BinaryImage img(3, 3);
  EXPECT_THROW(column_counts(img, 2, 1), BoundsError);
  EXPECT_THROW(column_counts(img, -1, 1), BoundsError);
  EXPECT_THROW(column_counts(img, 0, 3), BoundsError);
}

TEST(Raster, ConstructorRejectsMismatchedData) {
  EXPECT_ANY_THROW(BinaryImage(2, 2, std::vector<std::uint8_t>(3)));
  EXPECT_ANY_THROW(GrayImage(2, 2, std::vector<std::uint8_t>(5)));
}

TEST(Raster, InkColumnExtent) {
  const auto img = from_ascii({"..#..", ".#...", "....."});
  const auto e = ink_column_extent(img);
  EXPECT_EQ(e.left, 1);
  EXPECT_EQ(e.right, 2);
  EXPECT_TRUE(ink_column_extent(BinaryImage(4, 4)).empty());
}

TEST(Raster, GetOrBackgroundOutside) {
  const BinaryImage img(2, 2, true);
  EXPECT_TRUE(img.get_or_background(1, 1));
  EXPECT_FALSE(img.get_or_background(-1, 0));
  EXPECT_FALSE(img.get_or_background(0, 2));
}

class RasterProperty : public ::testing::TestWithParam<int> {};

TEST_P(RasterProperty, Conservation) {
  std::mt19937 rng(GetParam());
  const int w = 1 + static_cast<int>(rng() % 70), h = 1 + static_cast<int>(rng() % 70);
  const auto img = testing::random_binary(rng, w, h, 35);
  const auto rows = row_counts(img);
  const auto cols = column_counts(img, 0, h - 1);
  const long total = static_cast<long>(img.foreground_count());
  EXPECT_EQ(std::accumulate(rows.begin(), rows.end(), 0L), total);
  EXPECT_EQ(std::accumulate(cols.begin(), cols.end(), 0L), total);
}

TEST_P(RasterProperty, TransposeConsistency) {
  std::mt19937 rng(1000 + GetParam());
  const int w = 1 + static_cast<int>(rng() % 70), h = 1 + static_cast<int>(rng() % 70);
  const auto img = testing::random_binary(rng, w, h, 50);
  EXPECT_EQ(column_counts(img, 0, h - 1), row_counts(transpose(img)));
  EXPECT_EQ(transpose(transpose(img)), img);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RasterProperty, ::testing::Range(0, 40));

}  // namespace
}  // namespace coreseg

#include <gtest/gtest.h>

#include <random>

#include "coreseg/corezone.hpp"
#include "coreseg/errors.hpp"
#include "oracles.hpp"

namespace coreseg {
namespace {

BinaryImage rectangle(int w, int h, int top, int bottom, int left, int right) {
  BinaryImage img(w, h);
  for (int r = top; r <= bottom; ++r)
    for (int c = left; c <= right; ++c) img.set(r, c, true);
  return img;
}

BinaryImage pad_top(const BinaryImage& img, int k) {
  BinaryImage out(img.width(), img.height() + k);
  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) out.set(r + k, c, img.at(r, c));
  return out;
}

TEST(ChangeProfile, SingleJump) {
  const std::vector<int> counts{0, 0, 5, 5};
  const auto p = change_profile(counts, ScanDirection::top_down, 0.5);
  EXPECT_EQ(p.deltas, (std::vector<int>{0, 0, 5, 0}));
  ASSERT_TRUE(p.big_change_index.has_value());
  EXPECT_EQ(*p.big_change_index, 2);
  EXPECT_EQ(p.contributing_rows, (std::vector<int>{2}));
}

TEST(ChangeProfile, SmallChangeBeforeBigOne) {
  const std::vector<int> counts{2, 2, 30, 30, 30};
  const auto p = change_profile(counts, ScanDirection::top_down, 0.5);
  EXPECT_EQ(p.deltas, (std::vector<int>{2, 0, 28, 0, 0}));
  EXPECT_EQ(*p.big_change_index, 2);
  EXPECT_EQ(p.contributing_rows, (std::vector<int>{0, 2}));
}

TEST(ChangeProfile, BottomUpReportsOriginalRows) {
  const std::vector<int> counts{30, 30, 30, 2, 2};
  const auto p = change_profile(counts, ScanDirection::bottom_up, 0.5);
  EXPECT_EQ(p.deltas, (std::vector<int>{2, 0, 28, 0, 0}));
  EXPECT_EQ(p.contributing_rows, (std::vector<int>{4, 2}));
}

TEST(ChangeProfile, Errors) {
  const std::vector<int> zeros(6, 0);
  EXPECT_THROW(change_profile(zeros, ScanDirection::top_down, 0.5), EmptyInk);
  EXPECT_THROW(change_profile(std::vector<int>{}, ScanDirection::top_down, 0.5), EmptyInk);
  const std::vector<int> counts{1, 2};
  EXPECT_THROW(change_profile(counts, ScanDirection::top_down, 0.0), BoundsError);
  EXPECT_THROW(change_profile(counts, ScanDirection::top_down, 1.5), BoundsError);
}

TEST(RoundHalfUpMean, Values) {
  EXPECT_EQ(round_half_up_mean(5, 2), 3);
  EXPECT_EQ(round_half_up_mean(4, 2), 2);
  EXPECT_EQ(round_half_up_mean(7, 3), 2);
  EXPECT_EQ(round_half_up_mean(8, 3), 3);
}

TEST(DetectCoreZone, SolidRectangle) {
  const auto z = detect_core_zone(rectangle(12, 16, 5, 10, 2, 9));
  EXPECT_EQ(z.upper, 5);
  EXPECT_EQ(z.lower, 10);
  EXPECT_FALSE(z.fallback_used);
}

TEST(DetectCoreZone, AscenderPullsUpperBaseline) {
  // Body rows 5..10 span all 30 columns; two strokes at columns 3 and 20
  // rise from row 0.
  BinaryImage img = rectangle(30, 11, 5, 10, 0, 29);
  for (int r = 0; r < 5; ++r) {
    img.set(r, 3, true);
    img.set(r, 20, true);
  }
  const auto counts = row_counts(img);
  EXPECT_EQ(counts[0], 2);
  EXPECT_EQ(counts[5], 30);
  const auto p = change_profile(counts, ScanDirection::top_down, kDefaultBeta);
  EXPECT_EQ(p.contributing_rows, (std::vector<int>{0, 5}));
  const auto z = detect_core_zone(img);
  EXPECT_EQ(z.upper, 3);
  EXPECT_EQ(z.lower, 10);
}

TEST(DetectCoreZone, BottomUpFirstChangeIsBig) {
  BinaryImage img = rectangle(20, 14, 3, 9, 0, 19);
  for (int r = 0; r < 3; ++r) img.set(r, 4, true);
  EXPECT_EQ(detect_core_zone(img).lower, 9);
}

TEST(DetectCoreZone, EmptyImageThrows) {
  EXPECT_THROW(detect_core_zone(BinaryImage(5, 5)), EmptyInk);
}

struct Rect {
  int w, h, top, bottom, left, right;
};

std::vector<Rect> plateau_suite() {
  std::vector<Rect> out;
  std::mt19937 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const int h = 4 + static_cast<int>(rng() % 60);
    const int w = 2 + static_cast<int>(rng() % 60);
    const int top = static_cast<int>(rng() % h);
    const int bottom = top + static_cast<int>(rng() % (h - top));
    const int left = static_cast<int>(rng() % w);
    const int right = left + static_cast<int>(rng() % (w - left));
    out.push_back({w, h, top, bottom, left, right});
  }
  return out;
}

class Plateau : public ::testing::TestWithParam<Rect> {};

TEST_P(Plateau, ExactBaselines) {
  const auto r = GetParam();
  const auto z = detect_core_zone(rectangle(r.w, r.h, r.top, r.bottom, r.left, r.right));
  EXPECT_EQ(z.upper, r.top);
  EXPECT_EQ(z.lower, r.bottom);
}

TEST_P(Plateau, TranslationEquivariant) {
  const auto r = GetParam();
  const auto img = rectangle(r.w, r.h, r.top, r.bottom, r.left, r.right);
  const auto z = detect_core_zone(img);
  for (int k : {1, 3, 17}) {
    const auto zk = detect_core_zone(pad_top(img, k));
    EXPECT_EQ(zk.upper, z.upper + k);
    EXPECT_EQ(zk.lower, z.lower + k);
  }
}

TEST_P(Plateau, FlipInvariant) {
  const auto r = GetParam();
  const auto img = rectangle(r.w, r.h, r.top, r.bottom, r.left, r.right);
  EXPECT_EQ(detect_core_zone(flip_horizontal(img)), detect_core_zone(img));
}

INSTANTIATE_TEST_SUITE_P(Rectangles, Plateau, ::testing::ValuesIn(plateau_suite()));

class RandomInk : public ::testing::TestWithParam<int> {};

// Blob on paper: a blank one-pixel border, so padding above adds no new
// row-count change.
BinaryImage on_paper(const BinaryImage& blob) {
  BinaryImage img(blob.width() + 2, blob.height() + 2);
  for (int r = 0; r < blob.height(); ++r)
    for (int c = 0; c < blob.width(); ++c) img.set(r + 1, c + 1, blob.at(r, c));
  return img;
}

TEST_P(RandomInk, OrderedAndInBounds) {
  std::mt19937 rng(GetParam());
  const auto img = on_paper(testing::random_blob(rng));
  if (img.foreground_count() == 0) GTEST_SKIP();
  const auto z = detect_core_zone(img);
  EXPECT_LE(0, z.upper);
  EXPECT_LE(z.upper, z.lower);
  EXPECT_LE(z.lower, img.height() - 1);
  EXPECT_EQ(detect_core_zone(flip_horizontal(img)), z);
  const auto zp = detect_core_zone(pad_top(img, 5));
  if (!z.fallback_used && !zp.fallback_used) {
    EXPECT_EQ(zp.upper, z.upper + 5);
    EXPECT_EQ(zp.lower, z.lower + 5);
  }
}

INSTANTIATE_TEST_SUITE_P(Blobs, RandomInk, ::testing::Range(0, 100));

}  // namespace
}  // namespace coreseg

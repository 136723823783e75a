#include <gtest/gtest.h>

#include <random>

#include "coreseg/kernels.hpp"
#include "coreseg/preprocess.hpp"
#include "oracles.hpp"

namespace coreseg {
namespace {

struct Shape {
  int w, h;
};

class KernelEquality : public ::testing::TestWithParam<Shape> {};

TEST_P(KernelEquality, SerialMatchesParallel) {
  const auto [w, h] = GetParam();
  std::mt19937 rng(w * 131 + h);
  const auto img = testing::random_binary(rng, w, h, 40);

  std::vector<int> a(h), b(h);
  kernels::serial::row_counts(img, a);
  kernels::parallel::row_counts(img, b);
  EXPECT_EQ(a, b);

  const int lo = h / 4, hi = h - 1 - h / 5;
  std::vector<int> ca(w), cb(w);
  kernels::serial::column_counts(img, lo, hi, ca);
  kernels::parallel::column_counts(img, lo, hi, cb);
  EXPECT_EQ(ca, cb);

  std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
  for (auto& v : px) v = static_cast<std::uint8_t>(rng());
  const GrayImage gray(w, h, px);
  kernels::Histogram ha{}, hb{};
  kernels::serial::histogram(gray, ha);
  kernels::parallel::histogram(gray, hb);
  EXPECT_EQ(ha, hb);

  for (auto pass : {kernels::ThinPass::first, kernels::ThinPass::second}) {
    std::vector<std::uint8_t> ma, mb;
    const auto na = kernels::serial::mark_thin_candidates(img, pass, ma);
    const auto nb = kernels::parallel::mark_thin_candidates(img, pass, mb);
    EXPECT_EQ(na, nb);
    EXPECT_EQ(ma, mb);
  }

  EXPECT_EQ(thin(img), thin_serial(img));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquality,
                         ::testing::Values(Shape{1, 1}, Shape{3, 2}, Shape{17, 33}, Shape{64, 64},
                                           Shape{65, 300}, Shape{512, 128}, Shape{1000, 40},
                                           Shape{7, 4000}));

TEST(Kernels, MaxThreadsPositive) { EXPECT_GE(kernels::max_threads(), 1); }

}  // namespace
}  // namespace coreseg

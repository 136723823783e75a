#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coreseg/raster.hpp"

namespace coreseg {

struct Histogram256 {
  std::array<std::uint64_t, 256> bins{};
  std::uint64_t total = 0;
};

struct OtsuResult {
  int threshold = 0;
  double between_class_variance = 0.0;
  // All mass in a single bin; threshold is that bin's value.
  bool degenerate = false;
};

Histogram256 histogram(const GrayImage& img);

// Otsu's threshold over the split {v <= t} vs {v > t}. Comparisons are
// exact (integer cross-multiplication), and the lowest maximising t wins.
// Requires hist.total >= 1.
OtsuResult otsu_threshold(const Histogram256& hist);

// Intensity <= t becomes foreground (dark ink on light paper). With
// invert, intensity > t becomes foreground instead.
BinaryImage binarize(const GrayImage& img, int t, bool invert = false);

// Zhang-Suen thinning. Candidates for each sub-iteration are marked
// against the unmodified image as in the original algorithm, then
// removed in raster order, each removal re-checked against the current
// image so that no removal breaks 8-connectivity or erases a component
// (plain Zhang-Suen deletes 2x2 squares outright). Stops after a full
// pass removes nothing, so thin(thin(x)) == thin(x).
BinaryImage thin(const BinaryImage& img);

// Same algorithm with the serial reference kernel; for tests/benchmarks.
BinaryImage thin_serial(const BinaryImage& img);

struct PreprocessOptions {
  bool do_thin = true;
  bool invert = false;
};

struct PreprocessResult {
  BinaryImage binary;    // after binarization
  BinaryImage skeleton;  // equals binary when do_thin is false
  OtsuResult otsu;
  std::vector<std::string> warnings;
};

// Binarize at the Otsu threshold, then thin. A degenerate histogram is a
// warning, not an error: a uniform image is all ink when its single level
// is darker than mid-gray (128), otherwise all paper (swapped by invert).
PreprocessResult preprocess_word(const GrayImage& img, const PreprocessOptions& opts = {});

}  // namespace coreseg

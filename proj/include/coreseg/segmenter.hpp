#pragma once

#include <span>
#include <string>
#include <vector>

#include "coreseg/corezone.hpp"
#include "coreseg/raster.hpp"

namespace coreseg {

// Default minimum spacing between accepted cuts, chosen as the
// character-level valid-rate maximiser of the min_gap sweep over the
// seed-42 difficult synthetic corpus (see docs/min_gap_sweep.csv).
inline constexpr int kDefaultMinGap = 8;

struct SegmenterConfig {
  bool use_core_zone = true;
  bool do_thin = true;
  bool invert = false;
  double beta = kDefaultBeta;
  int min_gap = kDefaultMinGap;
  int min_segment_width = kDefaultMinGap;
  bool trim_outer = true;

  // Throws BoundsError when a field is out of range.
  void validate() const;
  friend bool operator==(const SegmenterConfig&, const SegmenterConfig&) = default;
};

struct Segment {
  int left = 0;
  int right = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentationResult {
  int width = 0;
  int height = 0;
  CoreZone core_zone;
  std::vector<int> column_sums;  // over the zone band
  std::vector<int> candidates;   // columns with zone sum <= 1
  std::vector<int> cuts;
  std::vector<Segment> segments;
  ColumnExtent ink;
  SegmenterConfig config;
  std::vector<std::string> warnings;
};

std::vector<int> candidate_columns(std::span<const int> col_sums);

// Collapses each run of consecutive indices to its round-half-up midpoint.
std::vector<int> merge_runs(std::span<const int> candidates);

// Greedy left to right: keep a representative iff it lies at least
// min_gap columns after the last kept one.
std::vector<int> prune_cuts(std::span<const int> reps, int min_gap);

// Removes cuts until every span between adjacent boundaries (ink edges
// included) is at least min_segment_width wide. The narrowest span goes
// first, leftmost on ties; its right boundary is dropped unless that is
// the ink edge, in which case its left boundary is.
std::vector<int> suppress_narrow_segments(std::span<const int> cuts, int ink_left, int ink_right,
                                          int min_segment_width);

// Runs the whole pipeline. Empty ink yields empty cuts and a warning.
SegmentationResult segment_word(const GrayImage& img, const SegmenterConfig& cfg = {});

}  // namespace coreseg

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coreseg/raster.hpp"

namespace coreseg {

// Rows bounding the x-height band: upper baseline on top, lower baseline
// below, both inclusive.
struct CoreZone {
  int upper = 0;
  int lower = 0;
  bool fallback_used = false;
  friend bool operator==(const CoreZone&, const CoreZone&) = default;
};

enum class ScanDirection { top_down, bottom_up };

struct ChangeProfile {
  std::vector<int> deltas;                // scan order
  std::optional<int> big_change_index;    // scan order
  std::vector<int> contributing_rows;     // original (top-origin) row indices
};

inline constexpr double kDefaultBeta = 0.5;

// Row-to-row count changes in scan order, with a virtual empty row before
// the first scanned row. The big change is the first delta with
// |delta| >= beta * max|delta|; contributing rows are those with a nonzero
// delta up to and including it. Throws EmptyInk if every count is zero.
ChangeProfile change_profile(std::span<const int> counts, ScanDirection dir, double beta);

// Each baseline is the round-half-up mean of the contributing rows of the
// scan from its side. Crossed baselines fall back to the full height.
CoreZone detect_core_zone(const BinaryImage& img, double beta = kDefaultBeta);

// Same, from precomputed row counts.
CoreZone core_zone_from_counts(std::span<const int> counts, double beta = kDefaultBeta);

// floor(sum / n + 1/2) for non-negative sum, n > 0.
long round_half_up_mean(long sum, long n);

}  // namespace coreseg

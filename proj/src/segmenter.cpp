#include "coreseg/segmenter.hpp"

#include <algorithm>
#include <string>

#include "coreseg/errors.hpp"
#include "coreseg/preprocess.hpp"

namespace coreseg {

void SegmenterConfig::validate() const {
  if (min_gap < 1) throw BoundsError("min_gap must be >= 1");
  if (min_segment_width < 1) throw BoundsError("min_segment_width must be >= 1");
  if (!(beta > 0.0 && beta <= 1.0)) throw BoundsError("beta must lie in (0,1]");
}

std::vector<int> candidate_columns(std::span<const int> col_sums) {
  std::vector<int> out;
  for (std::size_t j = 0; j < col_sums.size(); ++j)
    if (col_sums[j] <= 1) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> merge_runs(std::span<const int> candidates) {
  std::vector<int> reps;
  std::size_t i = 0;
  while (i < candidates.size()) {
    std::size_t j = i;
    while (j + 1 < candidates.size() && candidates[j + 1] == candidates[j] + 1) ++j;
    reps.push_back((candidates[i] + candidates[j] + 1) / 2);
    i = j + 1;
  }
  return reps;
}

std::vector<int> prune_cuts(std::span<const int> reps, int min_gap) {
  std::vector<int> out;
  for (int r : reps)
    if (out.empty() || r - out.back() >= min_gap) out.push_back(r);
  return out;
}

std::vector<int> suppress_narrow_segments(std::span<const int> cuts, int ink_left, int ink_right,
                                          int min_segment_width) {
  std::vector<int> b;
  b.reserve(cuts.size() + 2);
  b.push_back(ink_left);
  b.insert(b.end(), cuts.begin(), cuts.end());
  b.push_back(ink_right);

  // b[0] and b.back() are the virtual ink-edge boundaries.
  while (b.size() > 2) {
    std::size_t narrow = 0;
    int narrow_w = b[1] - b[0];
    for (std::size_t k = 1; k + 1 < b.size(); ++k) {
      if (b[k + 1] - b[k] < narrow_w) {
        narrow = k;
        narrow_w = b[k + 1] - b[k];
      }
    }
    if (narrow_w >= min_segment_width) break;
    const std::size_t drop = (narrow + 1 == b.size() - 1) ? narrow : narrow + 1;
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return {b.begin() + 1, b.end() - 1};
}

SegmentationResult segment_word(const GrayImage& img, const SegmenterConfig& cfg) {
  cfg.validate();
  SegmentationResult res;
  res.width = img.width();
  res.height = img.height();
  res.config = cfg;

  auto pre = preprocess_word(img, PreprocessOptions{cfg.do_thin, cfg.invert});
  res.warnings = std::move(pre.warnings);
  const BinaryImage& work = pre.skeleton;
  res.ink = ink_column_extent(pre.binary);

  const CoreZone full{0, img.height() - 1, false};
  if (res.ink.empty()) {
    res.core_zone = CoreZone{0, img.height() - 1, true};
    res.warnings.emplace_back("empty ink: no foreground after binarization");
    res.segments.push_back(Segment{0, img.width() - 1});
    return res;
  }

  res.core_zone = cfg.use_core_zone ? detect_core_zone(work, cfg.beta) : full;
  if (res.core_zone.fallback_used)
    res.warnings.emplace_back("core zone degenerate: using full image height");

  res.column_sums = column_counts(work, res.core_zone.upper, res.core_zone.lower);
  res.candidates = candidate_columns(res.column_sums);

  std::vector<int> kept;
  if (cfg.trim_outer) {
    for (int c : res.candidates)
      if (c >= res.ink.left && c <= res.ink.right) kept.push_back(c);
  } else {
    kept = res.candidates;
  }

  const auto reps = merge_runs(kept);
  const auto pruned = prune_cuts(reps, cfg.min_gap);
  const int left = cfg.trim_outer ? res.ink.left : 0;
  const int right = cfg.trim_outer ? res.ink.right : img.width() - 1;
  res.cuts = suppress_narrow_segments(pruned, left, right, cfg.min_segment_width);

  int from = 0;
  for (int c : res.cuts) {
    res.segments.push_back(Segment{from, c});
    from = c;
  }
  res.segments.push_back(Segment{from, img.width() - 1});
  return res;
}

}  // namespace coreseg

#include "coreseg/corezone.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "coreseg/errors.hpp"

namespace coreseg {

long round_half_up_mean(long sum, long n) { return (2 * sum + n) / (2 * n); }

ChangeProfile change_profile(std::span<const int> counts, ScanDirection dir, double beta) {
  if (counts.empty()) throw EmptyInk("change_profile: no rows");
  if (!(beta > 0.0 && beta <= 1.0)) throw BoundsError("beta must lie in (0,1]");
  if (std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; }))
    throw EmptyInk("change_profile: no foreground rows");

  const int n = static_cast<int>(counts.size());
  auto row_of = [&](int i) { return dir == ScanDirection::top_down ? i : n - 1 - i; };

  ChangeProfile p;
  p.deltas.resize(n);
  int prev = 0;
  int max_abs = 0;
  for (int i = 0; i < n; ++i) {
    const int cur = counts[row_of(i)];
    p.deltas[i] = cur - prev;
    max_abs = std::max(max_abs, std::abs(p.deltas[i]));
    prev = cur;
  }

  const double bar = beta * max_abs;
  for (int i = 0; i < n; ++i) {
    if (p.deltas[i] != 0) p.contributing_rows.push_back(row_of(i));
    if (std::abs(p.deltas[i]) >= bar) {
      p.big_change_index = i;
      break;
    }
  }
  return p;
}

CoreZone core_zone_from_counts(std::span<const int> counts, double beta) {
  auto baseline = [&](ScanDirection dir) {
    const auto p = change_profile(counts, dir, beta);
    const long sum = std::accumulate(p.contributing_rows.begin(), p.contributing_rows.end(), 0L);
    return static_cast<int>(
        round_half_up_mean(sum, static_cast<long>(p.contributing_rows.size())));
  };
  CoreZone z{baseline(ScanDirection::top_down), baseline(ScanDirection::bottom_up), false};
  if (z.upper > z.lower) return CoreZone{0, static_cast<int>(counts.size()) - 1, true};
  return z;
}

CoreZone detect_core_zone(const BinaryImage& img, double beta) {
  const auto counts = row_counts(img);
  return core_zone_from_counts(counts, beta);
}

}  // namespace coreseg

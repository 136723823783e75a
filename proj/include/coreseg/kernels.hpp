#pragma once

// Pixel-loop kernels in two flavours. `serial` is the reference
// implementation kept for tests and benchmarks; `parallel` is the
// OpenMP version used by the public API. Both must produce identical
// output for every input.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "coreseg/raster.hpp"

namespace coreseg::kernels {

using Histogram = std::array<std::uint64_t, 256>;

// Zhang-Suen sub-iteration selector.
enum class ThinPass { first, second };

namespace serial {

void row_counts(const BinaryImage& img, std::span<int> out);
void column_counts(const BinaryImage& img, int row_lo, int row_hi, std::span<int> out);
void histogram(const GrayImage& img, Histogram& out);
// Writes 1 into marks[i] for every pixel deletable in the given
// sub-iteration, evaluated against the unmodified image. Returns the
// number of marked pixels.
std::size_t mark_thin_candidates(const BinaryImage& img, ThinPass pass,
                                 std::vector<std::uint8_t>& marks);

}  // namespace serial

namespace parallel {

void row_counts(const BinaryImage& img, std::span<int> out);
void column_counts(const BinaryImage& img, int row_lo, int row_hi, std::span<int> out);
void histogram(const GrayImage& img, Histogram& out);
std::size_t mark_thin_candidates(const BinaryImage& img, ThinPass pass,
                                 std::vector<std::uint8_t>& marks);

}  // namespace parallel

// Number of OpenMP threads the parallel kernels will use (1 when built
// without OpenMP).
int max_threads();

}  // namespace coreseg::kernels

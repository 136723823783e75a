#include "coreseg/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zhang_suen_lut.hpp"

namespace coreseg::kernels {

namespace {

// Below this many pixels the fork/join cost outweighs the loop.
constexpr std::size_t kParallelMinPixels = 1u << 14;

bool worth_parallel(std::size_t pixels) { return pixels >= kParallelMinPixels; }

const std::array<std::uint8_t, 256>& lut_for(ThinPass pass) {
  return pass == ThinPass::first ? detail::kFirstPassLut : detail::kSecondPassLut;
}

// Interior pixels read neighbours directly; the border ring goes through
// the bounds-checked path.
inline std::uint8_t mask_fast(const std::uint8_t* p, int w) {
  std::uint8_t m = 0;
  if (p[-w]) m |= detail::kP2;
  if (p[-w + 1]) m |= detail::kP3;
  if (p[1]) m |= detail::kP4;
  if (p[w + 1]) m |= detail::kP5;
  if (p[w]) m |= detail::kP6;
  if (p[w - 1]) m |= detail::kP7;
  if (p[-1]) m |= detail::kP8;
  if (p[-w - 1]) m |= detail::kP9;
  return m;
}

std::size_t mark_row(const BinaryImage& img, int r, const std::array<std::uint8_t, 256>& lut,
                     std::uint8_t* marks) {
  const int w = img.width();
  const int h = img.height();
  const std::uint8_t* row = img.data().data() + static_cast<std::size_t>(r) * w;
  std::size_t n = 0;
  const bool interior_row = r > 0 && r < h - 1;
  for (int c = 0; c < w; ++c) {
    if (!row[c]) {
      marks[c] = 0;
      continue;
    }
    const std::uint8_t m = (interior_row && c > 0 && c < w - 1)
                               ? mask_fast(row + c, w)
                               : detail::neighbour_mask(img, r, c);
    marks[c] = lut[m];
    n += marks[c];
  }
  return n;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

void row_counts(const BinaryImage& img, std::span<int> out) {
  for (int r = 0; r < img.height(); ++r) {
    int n = 0;
    for (int c = 0; c < img.width(); ++c) n += img.at(r, c) ? 1 : 0;
    out[r] = n;
  }
}

void column_counts(const BinaryImage& img, int row_lo, int row_hi, std::span<int> out) {
  std::fill(out.begin(), out.end(), 0);
  for (int r = row_lo; r <= row_hi; ++r)
    for (int c = 0; c < img.width(); ++c) out[c] += img.at(r, c) ? 1 : 0;
}

void histogram(const GrayImage& img, Histogram& out) {
  out.fill(0);
  for (std::uint8_t v : img.data()) ++out[v];
}

std::size_t mark_thin_candidates(const BinaryImage& img, ThinPass pass,
                                 std::vector<std::uint8_t>& marks) {
  marks.assign(img.data().size(), 0);
  const auto& lut = lut_for(pass);
  std::size_t n = 0;
  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) {
      if (!img.at(r, c)) continue;
      const auto idx = static_cast<std::size_t>(r) * img.width() + c;
      marks[idx] = lut[detail::neighbour_mask(img, r, c)];
      n += marks[idx];
    }
  return n;
}

}  // namespace serial

namespace parallel {

void row_counts(const BinaryImage& img, std::span<int> out) {
  const int h = img.height();
  const int w = img.width();
  const std::uint8_t* data = img.data().data();
#pragma omp parallel for schedule(static) if (worth_parallel(img.data().size()))
  for (int r = 0; r < h; ++r) {
    const std::uint8_t* row = data + static_cast<std::size_t>(r) * w;
    int n = 0;
    for (int c = 0; c < w; ++c) n += row[c];
    out[r] = n;
  }
}

void column_counts(const BinaryImage& img, int row_lo, int row_hi, std::span<int> out) {
  const int w = img.width();
  const std::uint8_t* data = img.data().data();
  constexpr int kBlock = 64;
  const int blocks = (w + kBlock - 1) / kBlock;
  const std::size_t band = static_cast<std::size_t>(row_hi - row_lo + 1) * w;
#pragma omp parallel for schedule(static) if (worth_parallel(band))
  for (int b = 0; b < blocks; ++b) {
    const int c0 = b * kBlock;
    const int c1 = std::min(w, c0 + kBlock);
    for (int c = c0; c < c1; ++c) out[c] = 0;
    for (int r = row_lo; r <= row_hi; ++r) {
      const std::uint8_t* row = data + static_cast<std::size_t>(r) * w;
      for (int c = c0; c < c1; ++c) out[c] += row[c];
    }
  }
}

void histogram(const GrayImage& img, Histogram& out) {
  std::uint64_t bins[256] = {};
  const std::uint8_t* data = img.data().data();
  const auto n = static_cast<std::ptrdiff_t>(img.data().size());
#pragma omp parallel for schedule(static) reduction(+ : bins[:256]) \
    if (worth_parallel(img.data().size()))
  for (std::ptrdiff_t i = 0; i < n; ++i) ++bins[data[i]];
  std::copy(std::begin(bins), std::end(bins), out.begin());
}

std::size_t mark_thin_candidates(const BinaryImage& img, ThinPass pass,
                                 std::vector<std::uint8_t>& marks) {
  marks.resize(img.data().size());
  const auto& lut = lut_for(pass);
  const int h = img.height();
  const int w = img.width();
  std::size_t n = 0;
#pragma omp parallel for schedule(static) reduction(+ : n) if (worth_parallel(img.data().size()))
  for (int r = 0; r < h; ++r) n += mark_row(img, r, lut, marks.data() + static_cast<std::size_t>(r) * w);
  return n;
}

}  // namespace parallel

}  // namespace coreseg::kernels

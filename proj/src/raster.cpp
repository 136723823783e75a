#include "coreseg/raster.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coreseg/errors.hpp"
#include "coreseg/kernels.hpp"

namespace coreseg {

namespace {

void check_dims(int width, int height, std::size_t n) {
  if (width < 1 || height < 1) {
    throw BoundsError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
  if (n != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw BoundsError("pixel buffer length " + std::to_string(n) + " does not match " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height, static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0));
  data_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dims(width, height, data_.size());
}

BinaryImage::BinaryImage(int width, int height, bool fill) : width_(width), height_(height) {
  check_dims(width, height, static_cast<std::size_t>(std::max(width, 0)) * std::max(height, 0));
  data_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  check_dims(width, height, data_.size());
  for (auto& v : data_) v = v ? 1 : 0;
}

std::size_t BinaryImage::foreground_count() const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

std::vector<int> row_counts(const BinaryImage& img) {
  std::vector<int> out(static_cast<std::size_t>(img.height()), 0);
  kernels::parallel::row_counts(img, out);
  return out;
}

std::vector<int> column_counts(const BinaryImage& img, int row_lo, int row_hi) {
  if (row_lo < 0 || row_lo > row_hi || row_hi >= img.height()) {
    throw BoundsError("row band [" + std::to_string(row_lo) + "," + std::to_string(row_hi) +
                      "] outside image of height " + std::to_string(img.height()));
  }
  std::vector<int> out(static_cast<std::size_t>(img.width()), 0);
  kernels::parallel::column_counts(img, row_lo, row_hi, out);
  return out;
}

BinaryImage transpose(const BinaryImage& img) {
  BinaryImage t(img.height(), img.width());
  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) t.set(c, r, img.at(r, c));
  return t;
}

BinaryImage flip_horizontal(const BinaryImage& img) {
  BinaryImage f(img.width(), img.height());
  for (int r = 0; r < img.height(); ++r)
    for (int c = 0; c < img.width(); ++c) f.set(r, img.width() - 1 - c, img.at(r, c));
  return f;
}

ColumnExtent ink_column_extent(const BinaryImage& img) {
  const auto cols = column_counts(img, 0, img.height() - 1);
  ColumnExtent e;
  for (int c = 0; c < img.width(); ++c) {
    if (cols[c] > 0) {
      if (e.left < 0) e.left = c;
      e.right = c;
    }
  }
  return e;
}

}  // namespace coreseg

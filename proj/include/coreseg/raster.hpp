#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coreseg {

struct PixelPoint {
  int row = 0;
  int col = 0;
  friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

// 8-bit intensity raster, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 255);
  GrayImage(int width, int height, std::vector<std::uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }

  std::uint8_t at(int row, int col) const { return data_[index(row, col)]; }
  std::uint8_t& at(int row, int col) { return data_[index(row, col)]; }

  std::span<const std::uint8_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * width_, static_cast<std::size_t>(width_)};
  }
  const std::vector<std::uint8_t>& data() const { return data_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

// Two-level raster. A stored 1 is foreground (ink), 0 is background,
// independent of the polarity of the image it was derived from.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int width, int height, bool fill = false);
  BinaryImage(int width, int height, std::vector<std::uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int row, int col) const { return data_[index(row, col)] != 0; }
  void set(int row, int col, bool v) { data_[index(row, col)] = v ? 1 : 0; }

  // Out-of-bounds reads are background.
  bool get_or_background(int row, int col) const {
    if (row < 0 || col < 0 || row >= height_ || col >= width_) return false;
    return at(row, col);
  }

  bool contains(PixelPoint p) const {
    return p.row >= 0 && p.col >= 0 && p.row < height_ && p.col < width_;
  }

  std::span<const std::uint8_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * width_, static_cast<std::size_t>(width_)};
  }
  const std::vector<std::uint8_t>& data() const { return data_; }
  std::vector<std::uint8_t>& mutable_data() { return data_; }

  std::size_t foreground_count() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

// Foreground pixels per row; length == height.
std::vector<int> row_counts(const BinaryImage& img);

// Foreground pixels per column restricted to the inclusive row band
// [row_lo, row_hi]; length == width. Throws BoundsError on a bad band.
std::vector<int> column_counts(const BinaryImage& img, int row_lo, int row_hi);

BinaryImage transpose(const BinaryImage& img);
BinaryImage flip_horizontal(const BinaryImage& img);

// Inclusive column extent of the foreground; {-1, -1} when empty.
struct ColumnExtent {
  int left = -1;
  int right = -1;
  bool empty() const { return left < 0; }
};
ColumnExtent ink_column_extent(const BinaryImage& img);

}  // namespace coreseg

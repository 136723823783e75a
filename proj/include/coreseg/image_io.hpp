#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "coreseg/raster.hpp"

namespace coreseg {

// Interleaved 8-bit RGB, used for diagnostic overlays only.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 3 * width * height

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

  void put(int row, int col, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    auto* p = &data[(static_cast<std::size_t>(row) * width + col) * 3];
    p[0] = r;
    p[1] = g;
    p[2] = b;
  }
};

// Loads PNG (gray, gray+alpha, RGB, RGBA) or PGM (P2/P5). Colour is
// reduced to luma with integer-rounded Rec.601 weights; alpha is
// composited over white. Throws IoError or FormatError.
GrayImage load_gray(const std::filesystem::path& path);

// Foreground is written black (0), background white (255).
void save_binary_png(const BinaryImage& img, const std::filesystem::path& path);
void save_gray_png(const GrayImage& img, const std::filesystem::path& path);
void save_rgb_png(const RgbImage& img, const std::filesystem::path& path);
void save_gray_pgm(const GrayImage& img, const std::filesystem::path& path);

// Rec.601 luma, (299 R + 587 G + 114 B) / 1000 rounded half up.
std::uint8_t rec601_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Converts display polarity (dark = ink) back to the internal convention.
BinaryImage to_binary_display(const GrayImage& img, std::uint8_t threshold = 128);
GrayImage to_display(const BinaryImage& img);

}  // namespace coreseg

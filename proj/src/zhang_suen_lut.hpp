#pragma once

// 8-neighbourhood encoding shared by the thinning kernels. Bit k of the
// mask holds neighbour P(k+2) in the usual Zhang-Suen numbering:
//
//   P9 P2 P3
//   P8 P1 P4
//   P7 P6 P5

#include <array>
#include <bit>
#include <cstdint>

#include "coreseg/raster.hpp"

namespace coreseg::detail {

enum : std::uint8_t {
  kP2 = 1u << 0,
  kP3 = 1u << 1,
  kP4 = 1u << 2,
  kP5 = 1u << 3,
  kP6 = 1u << 4,
  kP7 = 1u << 5,
  kP8 = 1u << 6,
  kP9 = 1u << 7,
};

// Number of 0->1 transitions in the cyclic sequence P2..P9,P2.
constexpr int transitions(std::uint8_t m) {
  int a = 0;
  for (int k = 0; k < 8; ++k) {
    const bool cur = (m >> k) & 1u;
    const bool next = (m >> ((k + 1) % 8)) & 1u;
    if (!cur && next) ++a;
  }
  return a;
}

// 2 <= B <= 6 and A == 1: removing the centre pixel changes neither the
// foreground nor the background topology and does not erase an endpoint.
constexpr bool removable(std::uint8_t m) {
  const int b = std::popcount(m);
  return b >= 2 && b <= 6 && transitions(m) == 1;
}

constexpr bool deletable_first(std::uint8_t m) {
  const bool p2 = m & kP2, p4 = m & kP4, p6 = m & kP6, p8 = m & kP8;
  return removable(m) && !(p2 && p4 && p6) && !(p4 && p6 && p8);
}

constexpr bool deletable_second(std::uint8_t m) {
  const bool p2 = m & kP2, p4 = m & kP4, p6 = m & kP6, p8 = m & kP8;
  return removable(m) && !(p2 && p4 && p8) && !(p2 && p6 && p8);
}

template <bool (*Pred)(std::uint8_t)>
constexpr std::array<std::uint8_t, 256> make_lut() {
  std::array<std::uint8_t, 256> lut{};
  for (int m = 0; m < 256; ++m) lut[m] = Pred(static_cast<std::uint8_t>(m)) ? 1 : 0;
  return lut;
}

inline constexpr auto kRemovableLut = make_lut<removable>();
inline constexpr auto kFirstPassLut = make_lut<deletable_first>();
inline constexpr auto kSecondPassLut = make_lut<deletable_second>();

// Neighbour mask of (r, c); pixels outside the image are background.
inline std::uint8_t neighbour_mask(const BinaryImage& img, int r, int c) {
  std::uint8_t m = 0;
  if (img.get_or_background(r - 1, c)) m |= kP2;
  if (img.get_or_background(r - 1, c + 1)) m |= kP3;
  if (img.get_or_background(r, c + 1)) m |= kP4;
  if (img.get_or_background(r + 1, c + 1)) m |= kP5;
  if (img.get_or_background(r + 1, c)) m |= kP6;
  if (img.get_or_background(r + 1, c - 1)) m |= kP7;
  if (img.get_or_background(r, c - 1)) m |= kP8;
  if (img.get_or_background(r - 1, c - 1)) m |= kP9;
  return m;
}

}  // namespace coreseg::detail

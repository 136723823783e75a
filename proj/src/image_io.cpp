#include "coreseg/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "coreseg/errors.hpp"

namespace coreseg {

namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

class PgmReader {
 public:
  PgmReader(const std::vector<std::uint8_t>& bytes, const fs::path& path)
      : bytes_(bytes), path_(path) {}

  GrayImage read() {
    const bool binary = bytes_[1] == '5';
    pos_ = 2;
    const long width = next_int();
    const long height = next_int();
    const long maxval = next_int();
    if (width < 1 || height < 1 || width > (1 << 20) || height > (1 << 20))
      fail("bad dimensions");
    if (maxval < 1 || maxval > 65535) fail("bad maxval");

    const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> data(n);
    if (binary) {
      // Exactly one whitespace byte separates the header from the raster.
      if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) fail("missing raster separator");
      ++pos_;
      const std::size_t bpp = maxval > 255 ? 2 : 1;
      if (bytes_.size() - pos_ < n * bpp) fail("truncated raster");
      for (std::size_t i = 0; i < n; ++i) {
        long v = bytes_[pos_ + i * bpp];
        if (bpp == 2) v = (v << 8) | bytes_[pos_ + i * bpp + 1];
        data[i] = scale(v, maxval);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) data[i] = scale(next_int(), maxval);
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(data));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("PGM " + path_.string() + ": " + what);
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long next_int() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) fail("expected integer");
    long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > (1L << 30)) fail("integer overflow");
      ++pos_;
    }
    return v;
  }

  std::uint8_t scale(long v, long maxval) const {
    if (v > maxval) fail("sample exceeds maxval");
    if (maxval == 255) return static_cast<std::uint8_t>(v);
    return static_cast<std::uint8_t>((v * 255 * 2 + maxval) / (2 * maxval));
  }

  const std::vector<std::uint8_t>& bytes_;
  const fs::path& path_;
  std::size_t pos_ = 0;
};

GrayImage decode_png(const std::vector<std::uint8_t>& bytes, const fs::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw FormatError("PNG " + path.string() + ": " + image.message);
  }
  image.format = PNG_FORMAT_RGBA;
  std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, rgba.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw FormatError("PNG " + path.string() + ": " + msg);
  }
  const int w = static_cast<int>(image.width);
  const int h = static_cast<int>(image.height);
  std::vector<std::uint8_t> gray(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    const std::uint8_t* p = &rgba[i * 4];
    const unsigned a = p[3];
    auto over_white = [a](unsigned c) {
      return static_cast<std::uint8_t>((c * a + 255u * (255u - a) + 127u) / 255u);
    };
    gray[i] = rec601_luma(over_white(p[0]), over_white(p[1]), over_white(p[2]));
  }
  return GrayImage(w, h, std::move(gray));
}

void write_png(const fs::path& path, int width, int height, png_uint_32 format,
               const std::uint8_t* pixels) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = format;
  if (!png_image_write_to_file(&image, path.string().c_str(), 0, pixels, 0, nullptr)) {
    throw IoError("cannot write " + path.string() + ": " + image.message);
  }
}

}  // namespace

std::uint8_t rec601_luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

GrayImage load_gray(const fs::path& path) {
  const auto bytes = read_file(path);
  static constexpr std::uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0) {
    return decode_png(bytes, path);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
    return PgmReader(bytes, path).read();
  }
  throw FormatError("unsupported image format: " + path.string());
}

GrayImage to_display(const BinaryImage& img) {
  std::vector<std::uint8_t> px(img.data().size());
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = img.data()[i] ? 0 : 255;
  return GrayImage(img.width(), img.height(), std::move(px));
}

BinaryImage to_binary_display(const GrayImage& img, std::uint8_t threshold) {
  std::vector<std::uint8_t> px(img.data().size());
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = img.data()[i] < threshold ? 1 : 0;
  return BinaryImage(img.width(), img.height(), std::move(px));
}

void save_binary_png(const BinaryImage& img, const fs::path& path) {
  save_gray_png(to_display(img), path);
}

void save_gray_png(const GrayImage& img, const fs::path& path) {
  write_png(path, img.width(), img.height(), PNG_FORMAT_GRAY, img.data().data());
}

void save_rgb_png(const RgbImage& img, const fs::path& path) {
  write_png(path, img.width, img.height, PNG_FORMAT_RGB, img.data.data());
}

void save_gray_pgm(const GrayImage& img, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data().data()),
            static_cast<std::streamsize>(img.data().size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace coreseg

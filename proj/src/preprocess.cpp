#include "coreseg/preprocess.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "coreseg/errors.hpp"
#include "coreseg/kernels.hpp"
#include "zhang_suen_lut.hpp"

namespace coreseg {

namespace {

using Wide = boost::multiprecision::int256_t;

template <typename MarkFn>
BinaryImage thin_with(const BinaryImage& input, MarkFn mark) {
  BinaryImage img = input;
  std::vector<std::uint8_t> marks;
  const int w = img.width();
  for (;;) {
    std::size_t removed = 0;
    for (auto pass : {kernels::ThinPass::first, kernels::ThinPass::second}) {
      if (mark(img, pass, marks) == 0) continue;
      for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < w; ++c) {
          if (!marks[static_cast<std::size_t>(r) * w + c]) continue;
          if (!detail::kRemovableLut[detail::neighbour_mask(img, r, c)]) continue;
          img.set(r, c, false);
          ++removed;
        }
      }
    }
    if (removed == 0) break;
  }
  return img;
}

}  // namespace

Histogram256 histogram(const GrayImage& img) {
  Histogram256 h;
  kernels::parallel::histogram(img, h.bins);
  h.total = img.data().size();
  return h;
}

OtsuResult otsu_threshold(const Histogram256& hist) {
  if (hist.total == 0) throw EmptyInk("otsu_threshold: empty histogram");

  int nonzero = 0;
  int only = 0;
  Wide total_sum = 0;
  for (int v = 0; v < 256; ++v) {
    if (hist.bins[v]) {
      ++nonzero;
      only = v;
    }
    total_sum += Wide(hist.bins[v]) * v;
  }
  if (nonzero == 1) return OtsuResult{only, 0.0, true};

  // sigma_B^2 * N^2 = (S0*N - S*w0)^2 / (w0 * w1), with w0/S0 the count and
  // intensity sum of the lower class. Compare candidates as exact fractions.
  const Wide n = hist.total;
  Wide best_num = 0;
  Wide best_den = 1;
  int best_t = 0;
  Wide w0 = 0;
  Wide s0 = 0;
  for (int t = 0; t < 256; ++t) {
    w0 += hist.bins[t];
    s0 += Wide(hist.bins[t]) * t;
    const Wide w1 = n - w0;
    if (w0 == 0 || w1 == 0) continue;
    const Wide d = s0 * n - total_sum * w0;
    const Wide num = d * d;
    const Wide den = w0 * w1;
    if (num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      best_t = t;
    }
  }
  const double nn = static_cast<double>(hist.total);
  const double variance =
      best_num.convert_to<double>() / best_den.convert_to<double>() / (nn * nn);
  return OtsuResult{best_t, variance, false};
}

BinaryImage binarize(const GrayImage& img, int t, bool invert) {
  if (t < 0 || t > 255) throw BoundsError("threshold out of [0,255]: " + std::to_string(t));
  std::vector<std::uint8_t> px(img.data().size());
  const auto& src = img.data();
  for (std::size_t i = 0; i < px.size(); ++i) {
    const bool dark = src[i] <= t;
    px[i] = (dark != invert) ? 1 : 0;
  }
  return BinaryImage(img.width(), img.height(), std::move(px));
}

BinaryImage thin(const BinaryImage& img) {
  return thin_with(img, [](const BinaryImage& im, kernels::ThinPass p, std::vector<std::uint8_t>& m) {
    return kernels::parallel::mark_thin_candidates(im, p, m);
  });
}

BinaryImage thin_serial(const BinaryImage& img) {
  return thin_with(img, [](const BinaryImage& im, kernels::ThinPass p, std::vector<std::uint8_t>& m) {
    return kernels::serial::mark_thin_candidates(im, p, m);
  });
}

PreprocessResult preprocess_word(const GrayImage& img, const PreprocessOptions& opts) {
  PreprocessResult out;
  out.otsu = otsu_threshold(histogram(img));
  if (out.otsu.degenerate) {
    const bool ink = (out.otsu.threshold < 128) != opts.invert;
    out.binary = BinaryImage(img.width(), img.height(), ink);
    out.warnings.push_back("degenerate histogram: uniform intensity " +
                           std::to_string(out.otsu.threshold));
  } else {
    out.binary = binarize(img, out.otsu.threshold, opts.invert);
  }
  out.skeleton = opts.do_thin ? thin(out.binary) : out.binary;
  return out;
}

}  // namespace coreseg

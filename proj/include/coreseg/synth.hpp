#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "coreseg/eval.hpp"
#include "coreseg/raster.hpp"

namespace coreseg::synth {

// Point in glyph units: x grows right, y grows up from the baseline, the
// x-height is 1.0.
struct GlyphPoint {
  double x = 0;
  double y = 0;
};

using Polyline = std::vector<GlyphPoint>;

struct GlyphSpec {
  char id = '?';
  std::vector<Polyline> strokes;
  double advance = 1.0;  // nominal horizontal step, glyph units
  GlyphPoint entry;      // where the incoming ligature attaches
  GlyphPoint exit;       // where the outgoing ligature leaves
};

inline constexpr double kAscender = 1.7;
inline constexpr double kDescender = -0.7;

const std::vector<GlyphSpec>& glyph_set();
const GlyphSpec& glyph(char id);  // throws SpecError for an unknown id
std::string glyph_alphabet();

struct SynthSpec {
  std::string text;
  double slant_deg = 0.0;     // [0, 45]
  double overlap_frac = 0.0;  // [0, 0.4]
  int stroke_px = 4;
  double scale = 16.0;        // pixels per x-height
  std::uint64_t seed = 0;
  int jitter_px = 1;

  // Throws SpecError.
  void validate() const;
};

struct GlyphExtent {
  int left = 0;
  int right = 0;
};

struct SynthWord {
  GrayImage image;  // ink 0 on 255
  WordTruth truth;
  std::vector<GlyphExtent> extents;       // post-shear ink extent per glyph
  std::vector<GlyphExtent> core_extents;  // same, restricted to the x-height band
  int baseline_row = 0;
  int xheight_row = 0;
  SynthSpec spec;
};

SynthWord render_word(const SynthSpec& spec);

enum class Difficulty { normal, difficult };

const char* to_string(Difficulty d);
Difficulty parse_difficulty(const std::string& s);  // throws SpecError

struct CorpusOptions {
  int n_words = 1;
  Difficulty difficulty = Difficulty::difficult;
  std::uint64_t seed = 42;
  std::string alphabet;  // empty = whole glyph set
};

// normal: slant in [0,10] deg, overlap in [0,0.05]; difficult: slant in
// [20,40] deg, overlap in [0.15,0.35]. 3 to 8 glyphs per word. Word i uses
// its own generator seeded from seed ^ i. Images are named w%04d.png,
// starting at w0001.png.
std::vector<SynthWord> generate_corpus(const CorpusOptions& opts);

// Writes w%04d.png files, truth.json and manifest.json into dir, creating
// it if needed. Returns the manifest path. Throws IoError.
std::filesystem::path write_corpus(const std::vector<SynthWord>& words, const CorpusOptions& opts,
                                   const std::filesystem::path& dir);

std::string truth_json(const std::vector<WordTruth>& truths);

}  // namespace coreseg::synth

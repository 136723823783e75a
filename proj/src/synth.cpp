#include "coreseg/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "coreseg/errors.hpp"
#include "coreseg/image_io.hpp"

namespace coreseg::synth {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Horizontal room around a glyph body, in glyph units. Ligatures live here.
constexpr double kBearing = 0.6;
// Every ligature attaches at this height, low in the x-height band, so the
// connecting strokes stay inside the core zone.
constexpr double kLigatureHeight = 0.3;
constexpr int kMargin = 6;

Polyline arc(double cx, double cy, double rx, double ry, double a0_deg, double a1_deg,
             int steps = 24) {
  Polyline p;
  for (int i = 0; i <= steps; ++i) {
    const double a = (a0_deg + (a1_deg - a0_deg) * i / steps) * std::numbers::pi / 180.0;
    p.push_back({cx + rx * std::cos(a), cy + ry * std::sin(a)});
  }
  return p;
}

GlyphPoint on_ellipse(double cx, double cy, double rx, double ry, double deg) {
  const double a = deg * std::numbers::pi / 180.0;
  return {cx + rx * std::cos(a), cy + ry * std::sin(a)};
}

Polyline concat(Polyline a, const Polyline& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GlyphSpec make(char id, double body_width, std::vector<Polyline> strokes, GlyphPoint entry,
               GlyphPoint exit) {
  entry.y = kLigatureHeight;
  exit.y = kLigatureHeight;
  return GlyphSpec{id, std::move(strokes), body_width + kBearing, entry, exit};
}

std::vector<GlyphSpec> build_glyphs() {
  // Bodies occupy x in [0, width]; callers shift by half the bearing.
  const double bw = 0.6;
  const double cx = bw / 2, cy = 0.5, rx = bw / 2, ry = 0.5;
  const auto bowl = arc(cx, cy, rx, ry, 0, 360, 32);
  const GlyphPoint bowl_in = on_ellipse(cx, cy, rx, ry, 210);
  const GlyphPoint bowl_out = on_ellipse(cx, cy, rx, ry, 330);

  std::vector<GlyphSpec> g;
  g.push_back(make('a', bw, {bowl, {{bw, 1.0}, {bw, 0.0}}}, bowl_in, {bw, 0.0}));
  g.push_back(make('b', bw, {{{0, kAscender}, {0, 0}}, bowl}, {0, 0.3}, bowl_out));
  g.push_back(make('c', bw, {arc(cx, cy, rx, ry, 45, 320)}, bowl_in, on_ellipse(cx, cy, rx, ry, 320)));
  g.push_back(make('d', bw, {bowl, {{bw, kAscender}, {bw, 0}}}, bowl_in, {bw, 0.0}));
  g.push_back(make('e', bw, {concat({{0.02, 0.5}, {bw, 0.5}}, arc(cx, cy, rx, ry, 0, 320))},
                   {0.02, 0.5}, on_ellipse(cx, cy, rx, ry, 320)));
  g.push_back(make('g', bw,
                   {bowl, concat({{bw, 1.0}, {bw, -0.4}}, arc(cx, -0.4, rx, 0.3, 0, -160, 12))},
                   bowl_in, {bw, 0.3}));
  g.push_back(make('h', 0.55,
                   {{{0, kAscender}, {0, 0}},
                    concat(arc(0.275, 0.72, 0.275, 0.28, 180, 0, 16), {{0.55, 0.0}})},
                   {0, 0.3}, {0.55, 0.0}));
  g.push_back(make('i', 0.1, {{{0.05, 1.0}, {0.05, 0}}, {{0.05, 1.4}, {0.05, 1.5}}}, {0.05, 0.3},
                   {0.05, 0.0}));
  g.push_back(make('k', 0.5,
                   {{{0, kAscender}, {0, 0}}, {{0.5, 1.0}, {0.0, 0.45}, {0.5, 0.0}}}, {0, 0.3},
                   {0.5, 0.0}));
  g.push_back(make('l', 0.1, {{{0.05, kAscender}, {0.05, 0}}}, {0.05, 0.3}, {0.05, 0.0}));
  g.push_back(make('m', 0.9,
                   {{{0, 1.0}, {0, 0}},
                    concat(arc(0.225, 0.72, 0.225, 0.28, 180, 0, 12), {{0.45, 0.0}}),
                    concat(arc(0.675, 0.72, 0.225, 0.28, 180, 0, 12), {{0.9, 0.0}})},
                   {0, 0.3}, {0.9, 0.0}));
  g.push_back(make('n', 0.55,
                   {{{0, 1.0}, {0, 0}},
                    concat(arc(0.275, 0.72, 0.275, 0.28, 180, 0, 16), {{0.55, 0.0}})},
                   {0, 0.3}, {0.55, 0.0}));
  g.push_back(make('o', bw, {bowl}, bowl_in, on_ellipse(cx, cy, rx, ry, 20)));
  g.push_back(make('p', bw, {{{0, 1.0}, {0, kDescender}}, bowl}, {0, 0.8}, bowl_out));
  g.push_back(make('r', 0.4, {{{0, 1.0}, {0, 0}}, arc(0.25, 0.72, 0.25, 0.28, 180, 60, 10)},
                   {0, 0.3}, on_ellipse(0.25, 0.72, 0.25, 0.28, 60)));
  g.push_back(make('t', 0.4, {concat({{0.1, 1.4}, {0.1, 0.25}}, arc(0.3, 0.25, 0.2, 0.25, 180, 300, 8)),
                               {{0.0, 1.0}, {0.4, 1.0}}},
                   {0.1, 0.3}, on_ellipse(0.3, 0.25, 0.2, 0.25, 300)));
  g.push_back(make('u', 0.55,
                   {concat(concat({{0, 1.0}}, arc(0.275, 0.28, 0.275, 0.28, 180, 360, 16)), {{0.55, 1.0}}),
                    {{0.55, 1.0}, {0.55, 0.0}}},
                   {0, 1.0}, {0.55, 0.0}));
  g.push_back(make('v', 0.6, {{{0, 1.0}, {0.3, 0.0}, {0.6, 1.0}}}, {0, 1.0}, {0.6, 1.0}));
  g.push_back(make('w', 0.9, {{{0, 1.0}, {0.22, 0.0}, {0.45, 0.8}, {0.68, 0.0}, {0.9, 1.0}}},
                   {0, 1.0}, {0.9, 1.0}));
  g.push_back(make('y', 0.6, {{{0, 1.0}, {0.3, 0.0}}, {{0.6, 1.0}, {0.15, kDescender}}}, {0, 1.0},
                   {0.6, 1.0}));
  return g;
}

// splitmix64 finaliser; spreads nearby seeds across the state space.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Portable draws: std::mt19937_64's sequence is fixed by the standard, the
// <random> distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int uniform_int(int lo, int hi) {  // inclusive
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen_() % span);
  }

 private:
  std::mt19937_64 gen_;
};

struct Ink {
  int row;
  int col;
};

// Pixels whose centre lies within stroke/2 of the segment a-b.
void stamp_segment(double ax, double ay, double bx, double by, double radius,
                   std::vector<Ink>& out) {
  const int c0 = static_cast<int>(std::floor(std::min(ax, bx) - radius));
  const int c1 = static_cast<int>(std::ceil(std::max(ax, bx) + radius));
  const int r0 = static_cast<int>(std::floor(std::min(ay, by) - radius));
  const int r1 = static_cast<int>(std::ceil(std::max(ay, by) + radius));
  const double dx = bx - ax, dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  const double r2 = radius * radius;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      double t = len2 > 0 ? ((c - ax) * dx + (r - ay) * dy) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const double ex = ax + t * dx - c, ey = ay + t * dy - r;
      if (ex * ex + ey * ey <= r2) out.push_back({r, c});
    }
  }
}

void stamp_polyline(const std::vector<std::pair<double, double>>& pts, double radius,
                    std::vector<Ink>& out) {
  if (pts.size() == 1) stamp_segment(pts[0].first, pts[0].second, pts[0].first, pts[0].second,
                                     radius, out);
  for (std::size_t i = 1; i < pts.size(); ++i)
    stamp_segment(pts[i - 1].first, pts[i - 1].second, pts[i].first, pts[i].second, radius, out);
}

long round_half_up(double v) { return static_cast<long>(std::floor(v + 0.5)); }

}  // namespace

const std::vector<GlyphSpec>& glyph_set() {
  static const std::vector<GlyphSpec> glyphs = build_glyphs();
  return glyphs;
}

const GlyphSpec& glyph(char id) {
  for (const auto& g : glyph_set())
    if (g.id == id) return g;
  throw SpecError(std::string("unknown glyph '") + id + "'");
}

std::string glyph_alphabet() {
  std::string s;
  for (const auto& g : glyph_set()) s.push_back(g.id);
  return s;
}

void SynthSpec::validate() const {
  if (text.empty()) throw SpecError("text must contain at least one glyph");
  for (char c : text) glyph(c);
  if (!(slant_deg >= 0.0 && slant_deg <= 45.0)) throw SpecError("slant_deg outside [0,45]");
  if (!(overlap_frac >= 0.0 && overlap_frac <= 0.4)) throw SpecError("overlap_frac outside [0,0.4]");
  if (stroke_px < 1 || stroke_px > 16) throw SpecError("stroke_px outside [1,16]");
  if (!(scale >= 8.0 && scale <= 256.0)) throw SpecError("scale outside [8,256]");
  if (jitter_px < 0 || jitter_px > 16) throw SpecError("jitter_px outside [0,16]");
}

SynthWord render_word(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const double s = spec.scale;
  const double radius = spec.stroke_px / 2.0;

  // Unsheared layout; rows measured from the baseline (row 0), growing down.
  const std::size_t n = spec.text.size();
  std::vector<std::vector<Ink>> glyph_ink(n);
  std::vector<Ink> ligatures;
  std::vector<std::pair<double, double>> entry(n), exit(n);

  double pen = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const GlyphSpec& g = glyph(spec.text[i]);
    const double ox = (pen + kBearing / 2) * s + rng.uniform_int(-spec.jitter_px, spec.jitter_px);
    const double oy = rng.uniform_int(-spec.jitter_px, spec.jitter_px);
    auto to_px = [&](GlyphPoint p) { return std::pair{ox + p.x * s, oy - p.y * s}; };
    for (const auto& stroke : g.strokes) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : stroke) pts.push_back(to_px(p));
      stamp_polyline(pts, radius, glyph_ink[i]);
    }
    entry[i] = to_px(g.entry);
    exit[i] = to_px(g.exit);
    pen += g.advance * (1.0 - spec.overlap_frac);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) stamp_polyline({exit[i], entry[i + 1]}, radius, ligatures);

  // Shear about the middle of the x-height band: rows above lean right.
  const double pivot = -0.5 * s;
  const double shear = std::tan(spec.slant_deg * std::numbers::pi / 180.0);
  auto shear_col = [&](const Ink& p) {
    return p.col + static_cast<int>(round_half_up((pivot - p.row) * shear));
  };

  int min_r = INT32_MAX, max_r = INT32_MIN, min_c = INT32_MAX, max_c = INT32_MIN;
  auto extend = [&](const Ink& p) {
    const int c = shear_col(p);
    min_r = std::min(min_r, p.row);
    max_r = std::max(max_r, p.row);
    min_c = std::min(min_c, c);
    max_c = std::max(max_c, c);
  };
  for (const auto& gi : glyph_ink) std::for_each(gi.begin(), gi.end(), extend);
  std::for_each(ligatures.begin(), ligatures.end(), extend);

  // Fixed vertical frame so every word shares the same baseline position.
  const int top = std::min(min_r, static_cast<int>(std::floor(-kAscender * s - radius)) -
                                      spec.jitter_px);
  const int bottom = std::max(max_r, static_cast<int>(std::ceil(-kDescender * s + radius)) +
                                         spec.jitter_px);
  const int row_off = kMargin - top;
  const int col_off = kMargin - min_c;
  const int width = max_c - min_c + 1 + 2 * kMargin;
  const int height = bottom - top + 1 + 2 * kMargin;

  SynthWord word;
  word.spec = spec;
  word.image = GrayImage(width, height, 255);
  auto plot = [&](const Ink& p) { word.image.at(p.row + row_off, shear_col(p) + col_off) = 0; };

  word.baseline_row = row_off;
  word.xheight_row = row_off - static_cast<int>(round_half_up(s));
  word.extents.resize(n);
  word.core_extents.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    GlyphExtent e{INT32_MAX, INT32_MIN};
    GlyphExtent core{INT32_MAX, INT32_MIN};
    for (const auto& p : glyph_ink[i]) {
      plot(p);
      const int c = shear_col(p) + col_off;
      e.left = std::min(e.left, c);
      e.right = std::max(e.right, c);
      const int r = p.row + row_off;
      if (r >= word.xheight_row && r <= word.baseline_row) {
        core.left = std::min(core.left, c);
        core.right = std::max(core.right, c);
      }
    }
    word.extents[i] = e;
    word.core_extents[i] = core.left <= core.right ? core : e;
  }
  std::for_each(ligatures.begin(), ligatures.end(), plot);

  WordTruth& t = word.truth;
  t.text = spec.text;
  t.n_chars = static_cast<int>(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int cut = static_cast<int>(
        round_half_up((word.extents[i].right + word.extents[i + 1].left) / 2.0));
    // Narrow glyphs swallowed by a leaning neighbour can invert the order.
    if (!t.true_cuts.empty()) cut = std::max(cut, t.true_cuts.back() + 1);
    t.true_cuts.push_back(cut);
  }
  t.ink_left = kMargin;
  t.ink_right = width - 1 - kMargin;
  if (!t.true_cuts.empty()) t.ink_right = std::max(*t.ink_right, t.true_cuts.back());
  return word;
}

const char* to_string(Difficulty d) { return d == Difficulty::normal ? "normal" : "difficult"; }

Difficulty parse_difficulty(const std::string& s) {
  if (s == "normal") return Difficulty::normal;
  if (s == "difficult") return Difficulty::difficult;
  throw SpecError("difficulty must be 'normal' or 'difficult', got '" + s + "'");
}

std::vector<SynthWord> generate_corpus(const CorpusOptions& opts) {
  if (opts.n_words < 1) throw SpecError("n_words must be >= 1");
  const std::string alphabet = opts.alphabet.empty() ? glyph_alphabet() : opts.alphabet;
  for (char c : alphabet) glyph(c);

  std::vector<SynthWord> words;
  words.reserve(static_cast<std::size_t>(opts.n_words));
  for (int i = 0; i < opts.n_words; ++i) {
    Rng rng(opts.seed ^ static_cast<std::uint64_t>(i));
    SynthSpec spec;
    const int len = rng.uniform_int(3, 8);
    for (int k = 0; k < len; ++k)
      spec.text.push_back(alphabet[rng.uniform_int(0, static_cast<int>(alphabet.size()) - 1)]);
    if (opts.difficulty == Difficulty::normal) {
      spec.slant_deg = rng.uniform(0.0, 10.0);
      spec.overlap_frac = rng.uniform(0.0, 0.05);
    } else {
      spec.slant_deg = rng.uniform(20.0, 40.0);
      spec.overlap_frac = rng.uniform(0.15, 0.35);
    }
    spec.seed = mix(opts.seed ^ static_cast<std::uint64_t>(i)) ^ 0x5eedULL;
    SynthWord w = render_word(spec);
    char name[32];
    std::snprintf(name, sizeof name, "w%04d.png", i + 1);
    w.truth.image = name;
    words.push_back(std::move(w));
  }
  return words;
}

std::string truth_json(const std::vector<WordTruth>& truths) {
  ordered_json words = ordered_json::array();
  for (const auto& t : truths) {
    ordered_json w;
    w["image"] = t.image;
    if (t.text) w["text"] = *t.text;
    w["true_cuts"] = t.true_cuts;
    w["n_chars"] = t.n_chars;
    if (t.ink_left) w["ink_left"] = *t.ink_left;
    if (t.ink_right) w["ink_right"] = *t.ink_right;
    words.push_back(std::move(w));
  }
  ordered_json doc;
  doc["words"] = std::move(words);
  return doc.dump(2) + "\n";
}

fs::path write_corpus(const std::vector<SynthWord>& words, const CorpusOptions& opts,
                      const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::vector<WordTruth> truths;
  ordered_json specs = ordered_json::array();
  for (const auto& w : words) {
    save_gray_png(w.image, dir / w.truth.image);
    truths.push_back(w.truth);
    ordered_json s;
    s["image"] = w.truth.image;
    s["text"] = w.spec.text;
    s["slant_deg"] = w.spec.slant_deg;
    s["overlap_frac"] = w.spec.overlap_frac;
    s["stroke_px"] = w.spec.stroke_px;
    s["scale"] = w.spec.scale;
    s["seed"] = w.spec.seed;
    s["jitter_px"] = w.spec.jitter_px;
    specs.push_back(std::move(s));
  }

  auto write_text = [](const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out << text;
    if (!out) throw IoError("write failed: " + p.string());
  };
  write_text(dir / "truth.json", truth_json(truths));

  ordered_json manifest;
  manifest["generator"] = "coreseg synthesize";
  manifest["n_words"] = opts.n_words;
  manifest["difficulty"] = to_string(opts.difficulty);
  manifest["seed"] = opts.seed;
  manifest["alphabet"] = opts.alphabet.empty() ? glyph_alphabet() : opts.alphabet;
  manifest["words"] = std::move(specs);
  const fs::path mpath = dir / "manifest.json";
  write_text(mpath, manifest.dump(2) + "\n");
  return mpath;
}

}  // namespace coreseg::synth

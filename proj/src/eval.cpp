#include "coreseg/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "coreseg/errors.hpp"

namespace coreseg {

using nlohmann::json;

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::valid:
      return "VALID";
    case Outcome::missed:
      return "MISSED";
    case Outcome::over:
      return "OVER";
  }
  return "?";
}

std::vector<CharOutcome> match_cuts(std::span<const int> predicted, const WordTruth& truth,
                                    int tol) {
  if (tol < 0) throw BoundsError("tolerance must be >= 0");
  const auto& cuts = truth.true_cuts;
  std::vector<int> match(cuts.size(), -1);  // index into predicted
  std::vector<bool> used(predicted.size(), false);

  // Nearest pairs first: (distance, true cut, predicted cut), so ties go
  // to the leftmost true cut and then the leftmost predicted cut. The
  // order does not depend on tol, which only truncates it.
  struct Pair {
    int d;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < predicted.size(); ++j) {
      const int d = std::abs(predicted[j] - cuts[i]);
      if (d <= tol) pairs.push_back({d, i, j});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j);
  });
  for (const auto& p : pairs) {
    if (match[p.i] >= 0 || used[p.j]) continue;
    match[p.i] = static_cast<int>(p.j);
    used[p.j] = true;
  }

  const long lo_edge = truth.ink_left ? *truth.ink_left : std::numeric_limits<long>::min();
  const long hi_edge = truth.ink_right ? *truth.ink_right : std::numeric_limits<long>::max();

  std::vector<CharOutcome> out;
  out.reserve(static_cast<std::size_t>(truth.n_chars));
  for (int k = 0; k < truth.n_chars; ++k) {
    CharOutcome co;
    co.char_index = k;
    bool missed = false;
    // Character k lies between true cut k-1 and true cut k.
    const long lo = k == 0 ? lo_edge : cuts[k - 1];
    const long hi = k == truth.n_chars - 1 ? hi_edge : cuts[k];
    for (int b : {k - 1, k}) {
      if (b < 0 || b >= static_cast<int>(cuts.size())) continue;
      if (match[b] < 0) {
        missed = true;
      } else {
        co.matched_cut_columns.push_back(predicted[match[b]]);
      }
    }
    bool over = false;
    for (std::size_t j = 0; j < predicted.size(); ++j)
      if (!used[j] && predicted[j] > lo && predicted[j] < hi) over = true;
    co.outcome = missed ? Outcome::missed : over ? Outcome::over : Outcome::valid;
    out.push_back(std::move(co));
  }
  return out;
}

WordScore score_word(const std::string& image, std::span<const CharOutcome> outcomes) {
  WordScore s;
  s.image = image;
  s.n_chars = static_cast<int>(outcomes.size());
  for (const auto& o : outcomes) {
    switch (o.outcome) {
      case Outcome::valid:
        ++s.valid;
        break;
      case Outcome::missed:
        ++s.missed;
        break;
      case Outcome::over:
        ++s.over;
        break;
    }
  }
  return s;
}

double percent(int count, int total) {
  if (total <= 0) return 0.0;
  return std::round(10000.0 * count / total) / 100.0;
}

EvalReport report_from_counts(int valid, int missed, int over, int n_chars) {
  EvalReport r;
  r.n_chars = n_chars;
  r.valid_chars = valid;
  r.missed_chars = missed;
  r.over_chars = over;
  r.valid_rate = percent(valid, n_chars);
  r.miss_rate = percent(missed, n_chars);
  r.over_rate = percent(over, n_chars);
  return r;
}

EvalReport aggregate(std::span<const WordScore> words) {
  int valid = 0, missed = 0, over = 0, n = 0, valid_words = 0;
  for (const auto& w : words) {
    valid += w.valid;
    missed += w.missed;
    over += w.over;
    n += w.n_chars;
    if (w.n_chars > 0 && w.valid == w.n_chars) ++valid_words;
  }
  EvalReport r = report_from_counts(valid, missed, over, n);
  r.n_words = static_cast<int>(words.size());
  r.valid_words = valid_words;
  r.word_valid_rate = percent(valid_words, r.n_words);
  return r;
}

EvalReport aggregate(std::span<const std::vector<CharOutcome>> words) {
  std::vector<WordScore> scores;
  scores.reserve(words.size());
  for (const auto& w : words) scores.push_back(score_word({}, w));
  return aggregate(std::span<const WordScore>(scores));
}

int boundaries_without_candidate(std::span<const int> candidates, std::span<const int> true_cuts,
                                 int tol) {
  int n = 0;
  for (int t : true_cuts) {
    const auto it = std::lower_bound(candidates.begin(), candidates.end(), t - tol);
    if (it == candidates.end() || *it > t + tol) ++n;
  }
  return n;
}

void validate_truth(const WordTruth& w, std::size_t index) {
  auto fail = [&](const std::string& what) {
    throw SchemaError("record " + std::to_string(index) + " (" + w.image + "): " + what);
  };
  if (w.image.empty()) fail("missing image");
  if (w.n_chars < 1) fail("n_chars must be >= 1");
  for (std::size_t i = 1; i < w.true_cuts.size(); ++i)
    if (w.true_cuts[i] <= w.true_cuts[i - 1]) fail("true_cuts not strictly increasing");
  if (w.n_chars != static_cast<int>(w.true_cuts.size()) + 1)
    fail("n_chars " + std::to_string(w.n_chars) + " != |true_cuts|+1 = " +
         std::to_string(w.true_cuts.size() + 1));
  if (w.ink_left && w.ink_right && *w.ink_left > *w.ink_right) fail("ink_left > ink_right");
  for (int c : w.true_cuts) {
    if ((w.ink_left && c < *w.ink_left) || (w.ink_right && c > *w.ink_right))
      fail("true cut " + std::to_string(c) + " outside ink extent");
  }
}

std::vector<WordTruth> parse_truth(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("truth file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("words") || !doc["words"].is_array())
    throw SchemaError("truth file must be an object with a \"words\" array");

  std::vector<WordTruth> out;
  std::size_t index = 0;
  for (const auto& rec : doc["words"]) {
    auto fail = [&](const std::string& what) {
      throw SchemaError("record " + std::to_string(index) + ": " + what);
    };
    if (!rec.is_object()) fail("not an object");
    WordTruth w;
    if (!rec.contains("image") || !rec["image"].is_string()) fail("\"image\" must be a string");
    w.image = rec["image"].get<std::string>();
    if (rec.contains("text")) {
      if (!rec["text"].is_string()) fail("\"text\" must be a string");
      w.text = rec["text"].get<std::string>();
    }
    if (!rec.contains("true_cuts") || !rec["true_cuts"].is_array())
      fail("\"true_cuts\" must be an array");
    for (const auto& c : rec["true_cuts"]) {
      if (!c.is_number_integer()) fail("\"true_cuts\" entries must be integers");
      w.true_cuts.push_back(c.get<int>());
    }
    if (rec.contains("n_chars")) {
      if (!rec["n_chars"].is_number_integer()) fail("\"n_chars\" must be an integer");
      w.n_chars = rec["n_chars"].get<int>();
    } else {
      w.n_chars = static_cast<int>(w.true_cuts.size()) + 1;
    }
    for (const char* key : {"ink_left", "ink_right"}) {
      if (!rec.contains(key)) continue;
      if (!rec[key].is_number_integer()) fail(std::string("\"") + key + "\" must be an integer");
      (std::string(key) == "ink_left" ? w.ink_left : w.ink_right) = rec[key].get<int>();
    }
    validate_truth(w, index);
    out.push_back(std::move(w));
    ++index;
  }
  return out;
}

std::vector<WordTruth> load_truth(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open truth file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_truth(ss.str());
}

}  // namespace coreseg

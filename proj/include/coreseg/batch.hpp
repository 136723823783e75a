#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "coreseg/eval.hpp"
#include "coreseg/segmenter.hpp"

namespace coreseg {

struct Corpus {
  std::vector<WordTruth> truths;
  std::vector<GrayImage> images;  // parallel to truths
};

// Loads truth_path and every image it names (relative to images_dir).
// Throws IoError, FormatError or SchemaError.
Corpus load_corpus(const std::filesystem::path& images_dir, const std::filesystem::path& truth_path);

struct WordRun {
  std::string image;
  std::vector<int> predicted;
  std::vector<int> candidates;
  std::vector<CharOutcome> outcomes;
  WordScore score;
};

struct CorpusRun {
  std::vector<WordRun> words;  // sorted by image name
  EvalReport report;
};

// Segments every word (OpenMP over words, `jobs` threads; 0 = all
// processors) and scores it against its truth.
CorpusRun evaluate_corpus(const Corpus& corpus, const SegmenterConfig& cfg, int tol, int jobs = 0);

// Same scoring applied to externally produced cuts keyed by image name.
// Throws SchemaError if a truth image has no prediction.
CorpusRun evaluate_predictions(const std::vector<WordTruth>& truths,
                               const std::map<std::string, std::vector<int>>& predictions,
                               int tol);

// {"predictions":[{"image":..,"cuts":[..]}]} or a truth file (true_cuts).
std::map<std::string, std::vector<int>> load_predictions(const std::filesystem::path& path);

enum class SweepParam { min_gap, beta, min_segment_width };

SweepParam parse_sweep_param(const std::string& name);  // throws SchemaError
const char* to_string(SweepParam p);

// Sets one parameter. min_gap also moves min_segment_width, which defaults
// to it, unless the caller pinned the width.
SegmenterConfig with_param(SegmenterConfig cfg, SweepParam p, double value, bool width_pinned);

struct SweepRow {
  double value = 0;
  EvalReport report;
  bool argmax = false;  // first value reaching the best valid rate
};

std::vector<SweepRow> sweep(const Corpus& corpus, const SegmenterConfig& base, SweepParam p,
                            const std::vector<double>& values, int tol, bool width_pinned,
                            int jobs = 0);

std::string sweep_csv(SweepParam p, const std::vector<SweepRow>& rows);

}  // namespace coreseg

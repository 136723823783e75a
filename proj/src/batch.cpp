#include "coreseg/batch.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coreseg/errors.hpp"
#include "coreseg/image_io.hpp"

namespace coreseg {

namespace {

int resolve_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_num_procs();
#else
  (void)jobs;
  return 1;
#endif
}

void finish(CorpusRun& run) {
  std::sort(run.words.begin(), run.words.end(),
            [](const WordRun& a, const WordRun& b) { return a.image < b.image; });
  std::vector<WordScore> scores;
  scores.reserve(run.words.size());
  for (const auto& w : run.words) scores.push_back(w.score);
  run.report = aggregate(std::span<const WordScore>(scores));
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& images_dir,
                   const std::filesystem::path& truth_path) {
  Corpus c;
  c.truths = load_truth(truth_path);
  c.images.reserve(c.truths.size());
  for (const auto& t : c.truths) c.images.push_back(load_gray(images_dir / t.image));
  return c;
}

CorpusRun evaluate_corpus(const Corpus& corpus, const SegmenterConfig& cfg, int tol, int jobs) {
  cfg.validate();
  const int n = static_cast<int>(corpus.truths.size());
  CorpusRun run;
  run.words.resize(static_cast<std::size_t>(n));
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
  for (int i = 0; i < n; ++i) {
    try {
      const auto& truth = corpus.truths[i];
      auto res = segment_word(corpus.images[i], cfg);
      WordRun w;
      w.image = truth.image;
      w.outcomes = match_cuts(res.cuts, truth, tol);
      w.score = score_word(truth.image, w.outcomes);
      w.predicted = std::move(res.cuts);
      w.candidates = std::move(res.candidates);
      run.words[i] = std::move(w);
    } catch (...) {
#pragma omp critical(coreseg_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  finish(run);
  return run;
}

CorpusRun evaluate_predictions(const std::vector<WordTruth>& truths,
                               const std::map<std::string, std::vector<int>>& predictions,
                               int tol) {
  CorpusRun run;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const auto& t = truths[i];
    const auto it = predictions.find(t.image);
    if (it == predictions.end())
      throw SchemaError("record " + std::to_string(i) + " (" + t.image + "): no prediction");
    WordRun w;
    w.image = t.image;
    w.predicted = it->second;
    w.outcomes = match_cuts(w.predicted, t, tol);
    w.score = score_word(t.image, w.outcomes);
    run.words.push_back(std::move(w));
  }
  finish(run);
  return run;
}

std::map<std::string, std::vector<int>> load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open predictions file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("predictions file is not valid JSON: ") + e.what());
  }
  const char* list_key = doc.contains("predictions") ? "predictions" : "words";
  if (!doc.contains(list_key) || !doc[list_key].is_array())
    throw SchemaError("predictions file needs a \"predictions\" or \"words\" array");

  std::map<std::string, std::vector<int>> out;
  std::size_t index = 0;
  for (const auto& rec : doc[list_key]) {
    const char* cuts_key = rec.contains("cuts") ? "cuts" : "true_cuts";
    if (!rec.contains("image") || !rec["image"].is_string() || !rec.contains(cuts_key) ||
        !rec[cuts_key].is_array())
      throw SchemaError("prediction record " + std::to_string(index) + ": needs image and cuts");
    std::vector<int> cuts;
    for (const auto& c : rec[cuts_key]) {
      if (!c.is_number_integer())
        throw SchemaError("prediction record " + std::to_string(index) + ": non-integer cut");
      cuts.push_back(c.get<int>());
    }
    std::sort(cuts.begin(), cuts.end());
    out[rec["image"].get<std::string>()] = std::move(cuts);
    ++index;
  }
  return out;
}

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "min_gap") return SweepParam::min_gap;
  if (name == "beta") return SweepParam::beta;
  if (name == "min_segment_width") return SweepParam::min_segment_width;
  throw SchemaError("unknown sweep parameter '" + name +
                    "' (expected min_gap, beta or min_segment_width)");
}

const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::min_gap:
      return "min_gap";
    case SweepParam::beta:
      return "beta";
    case SweepParam::min_segment_width:
      return "min_segment_width";
  }
  return "?";
}

SegmenterConfig with_param(SegmenterConfig cfg, SweepParam p, double value, bool width_pinned) {
  switch (p) {
    case SweepParam::min_gap:
      cfg.min_gap = static_cast<int>(value);
      if (!width_pinned) cfg.min_segment_width = cfg.min_gap;
      break;
    case SweepParam::beta:
      cfg.beta = value;
      break;
    case SweepParam::min_segment_width:
      cfg.min_segment_width = static_cast<int>(value);
      break;
  }
  return cfg;
}

std::vector<SweepRow> sweep(const Corpus& corpus, const SegmenterConfig& base, SweepParam p,
                            const std::vector<double>& values, int tol, bool width_pinned,
                            int jobs) {
  std::vector<SweepRow> rows;
  for (double v : values) {
    const auto cfg = with_param(base, p, v, width_pinned);
    rows.push_back(SweepRow{v, evaluate_corpus(corpus, cfg, tol, jobs).report, false});
  }
  if (!rows.empty()) {
    auto best = rows.begin();
    for (auto it = rows.begin(); it != rows.end(); ++it)
      if (it->report.valid_chars > best->report.valid_chars) best = it;
    best->argmax = true;
  }
  return rows;
}

std::string sweep_csv(SweepParam p, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << to_string(p) << ",valid_chars,missed_chars,over_chars,n_chars,valid_rate,miss_rate,"
                        "over_rate,argmax\n";
  for (const auto& r : rows) {
    os << r.value << ',' << r.report.valid_chars << ',' << r.report.missed_chars << ','
       << r.report.over_chars << ',' << r.report.n_chars << ',' << r.report.valid_rate << ','
       << r.report.miss_rate << ',' << r.report.over_rate << ',' << (r.argmax ? "*" : "") << '\n';
  }
  return os.str();
}

}  // namespace coreseg

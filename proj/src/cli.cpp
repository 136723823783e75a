#include "coreseg/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "coreseg/batch.hpp"
#include "coreseg/errors.hpp"
#include "coreseg/image_io.hpp"
#include "coreseg/preprocess.hpp"
#include "coreseg/report.hpp"
#include "coreseg/segmenter.hpp"
#include "coreseg/synth.hpp"

namespace coreseg::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct SegmentFlags {
  SegmenterConfig cfg;
  bool no_core_zone = false;
  bool no_thin = false;
  bool no_trim = false;
  bool width_set = false;

  void add_to(CLI::App* app) {
    app->add_flag("--no-core-zone", no_core_zone, "Column sums over the full image height");
    app->add_flag("--no-thin", no_thin, "Skip skeletonization");
    app->add_flag("--invert", cfg.invert, "Treat light strokes on dark paper as ink");
    app->add_flag("--no-trim", no_trim, "Keep candidate columns in the blank margins");
    app->add_option("--beta", cfg.beta, "Core-zone big-change fraction in (0,1]")
        ->capture_default_str();
    app->add_option("--min-gap", cfg.min_gap, "Minimum columns between accepted cuts")
        ->capture_default_str();
    app->add_option("--min-segment-width", cfg.min_segment_width,
                    "Minimum character width (defaults to --min-gap)");
  }

  SegmenterConfig resolve(CLI::App* app) {
    width_set = app->count("--min-segment-width") > 0;
    SegmenterConfig c = cfg;
    c.use_core_zone = !no_core_zone;
    c.do_thin = !no_thin;
    c.trim_outer = !no_trim;
    if (!width_set) c.min_segment_width = c.min_gap;
    c.validate();
    return c;
  }
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_text(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
  if (!out) throw IoError("write failed: " + p.string());
}

void write_manifest(const fs::path& path, const std::vector<std::string>& args,
                    const ordered_json& config, const std::vector<std::string>& inputs) {
  ordered_json m;
  m["command_line"] = args;
  m["config"] = config;
  m["inputs"] = inputs;
  m["tool_version"] = kToolVersion;
  m["schema_version"] = kSchemaVersion;
  m["timestamp"] = utc_timestamp();
  write_text(path, m.dump(2) + "\n");
}

fs::path manifest_for(const fs::path& artifact) {
  fs::path p = artifact;
  p += ".manifest.json";
  return p;
}

RgbImage overlay(const GrayImage& img, const SegmentationResult& res, bool invert,
                 bool show_candidates) {
  const auto pre = preprocess_word(img, PreprocessOptions{false, invert});
  const int w = img.width(), h = img.height();
  RgbImage out(w, h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const std::uint8_t v = pre.binary.at(r, c) ? 0 : 255;
      out.put(r, c, v, v, v);
    }
  if (show_candidates) {
    for (int c : res.candidates)
      for (int r = 0; r < h; ++r)
        if (!pre.binary.at(r, c)) out.put(r, c, 215, 225, 255);
  }
  for (int row : {res.core_zone.upper, res.core_zone.lower})
    for (int c = 0; c < w; ++c) out.put(row, c, 230, 0, 0);
  for (int c : res.cuts)
    for (int r = 0; r < h; ++r) out.put(r, c, 0, 170, 0);
  return out;
}

std::vector<double> sweep_values(double from, double to, double step) {
  if (!(step > 0)) throw CLI::ValidationError("--step", "must be positive");
  if (to < from) throw CLI::ValidationError("--to", "must be >= --from");
  std::vector<double> v;
  const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  for (long i = 0; i <= n; ++i) v.push_back(from + static_cast<double>(i) * step);
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core-zone character segmentation for slanted cursive word images", "coreseg"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print tool and schema versions");

  // segment
  auto* seg = app.add_subcommand("segment", "Segment one word image into characters");
  SegmentFlags seg_flags;
  seg_flags.add_to(seg);
  std::string seg_image, seg_out = "-", seg_overlay;
  bool show_candidates = false;
  seg->add_option("image", seg_image, "Word image (PNG or PGM)")->required();
  seg->add_option("-o,--out", seg_out, "Result JSON path ('-' for stdout)")->capture_default_str();
  seg->add_option("--overlay", seg_overlay, "Write a PNG with zone lines and cuts");
  seg->add_flag("--show-candidates", show_candidates, "Tint candidate columns in the overlay");

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "Score the segmenter against ground truth");
  SegmentFlags ev_flags;
  ev_flags.add_to(ev);
  std::string ev_images, ev_truth, ev_predictions, ev_report = "report.json", ev_csv = "words.csv";
  int tolerance = kDefaultTolerance;
  int jobs = 0;
  ev->add_option("--images", ev_images, "Directory holding the word images");
  ev->add_option("--truth", ev_truth, "Ground-truth JSON")->required();
  ev->add_option("--predictions-file", ev_predictions,
                 "Score these cuts instead of running the segmenter");
  ev->add_option("--report", ev_report, "Report JSON path")->capture_default_str();
  ev->add_option("--csv", ev_csv, "Per-word CSV path")->capture_default_str();
  ev->add_option("--tolerance", tolerance, "Matching tolerance in columns")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ev->add_option("--jobs", jobs, "Worker threads (0 = all processors)");

  // synthesize
  auto* syn = app.add_subcommand("synthesize", "Generate a synthetic word corpus");
  int syn_n = 0;
  std::string syn_difficulty = "difficult", syn_out, syn_alphabet;
  std::uint64_t syn_seed = 42;
  syn->add_option("-n,--n", syn_n, "Number of words")->required();
  syn->add_option("--difficulty", syn_difficulty, "normal or difficult")
      ->check(CLI::IsMember({"normal", "difficult"}))
      ->capture_default_str();
  syn->add_option("--seed", syn_seed, "Random seed")->capture_default_str();
  syn->add_option("--alphabet", syn_alphabet, "Restrict glyphs to these letters");
  syn->add_option("-o,--out", syn_out, "Output directory")->required();

  // sweep
  auto* sw = app.add_subcommand("sweep", "Evaluate a range of one parameter");
  SegmentFlags sw_flags;
  sw_flags.add_to(sw);
  std::string sw_param, sw_images, sw_truth, sw_out = "sweep.csv";
  double sw_from = 0, sw_to = 0, sw_step = 1;
  int sw_tol = kDefaultTolerance, sw_jobs = 0;
  sw->add_option("--param", sw_param, "min_gap, beta or min_segment_width")->required();
  sw->add_option("--from", sw_from, "First value")->required();
  sw->add_option("--to", sw_to, "Last value (inclusive)")->required();
  sw->add_option("--step", sw_step, "Increment")->capture_default_str();
  sw->add_option("--images", sw_images, "Directory holding the word images")->required();
  sw->add_option("--truth", sw_truth, "Ground-truth JSON")->required();
  sw->add_option("-o,--out", sw_out, "CSV path")->capture_default_str();
  sw->add_option("--tolerance", sw_tol, "Matching tolerance in columns")->capture_default_str();
  sw->add_option("--jobs", sw_jobs, "Worker threads (0 = all processors)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  std::vector<std::string> full_cmd = {"coreseg"};
  full_cmd.insert(full_cmd.end(), args.begin(), args.end());

  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "coreseg: " << e.what() << "\n";
    return kUsage;
  }

  if (show_version) {
    out << "coreseg " << kToolVersion << " (schema " << kSchemaVersion << ")\n";
    return kOk;
  }

  try {
    if (seg->parsed()) {
      const SegmenterConfig cfg = seg_flags.resolve(seg);
      const GrayImage img = load_gray(seg_image);
      const auto res = segment_word(img, cfg);
      const std::string doc = result_json(res, fs::path(seg_image).filename().string()).dump(2) + "\n";
      if (seg_out == "-") {
        out << doc;
      } else {
        write_text(seg_out, doc);
        write_manifest(manifest_for(seg_out), full_cmd, config_json(cfg), {seg_image});
      }
      if (!seg_overlay.empty()) save_rgb_png(overlay(img, res, cfg.invert, show_candidates), seg_overlay);
      for (const auto& w : res.warnings) err << "warning: " << w << "\n";
      return kOk;
    }

    if (ev->parsed()) {
      const SegmenterConfig cfg = ev_flags.resolve(ev);
      CorpusRun run;
      std::vector<std::string> inputs = {ev_truth};
      if (!ev_predictions.empty()) {
        const auto truths = load_truth(ev_truth);
        if (truths.empty()) {
          err << "coreseg: empty corpus in " << ev_truth << "\n";
          return kIo;
        }
        run = evaluate_predictions(truths, load_predictions(ev_predictions), tolerance);
        inputs.push_back(ev_predictions);
      } else {
        if (ev_images.empty()) {
          err << "coreseg: evaluate needs --images or --predictions-file\n";
          return kUsage;
        }
        const Corpus corpus = load_corpus(ev_images, ev_truth);
        if (corpus.truths.empty()) {
          err << "coreseg: empty corpus in " << ev_truth << "\n";
          return kIo;
        }
        run = evaluate_corpus(corpus, cfg, tolerance, jobs);
        inputs.push_back(ev_images);
      }
      ordered_json report = report_json(run.report);
      ordered_json snapshot = config_json(cfg);
      snapshot["tolerance"] = tolerance;
      report["config"] = snapshot;
      write_text(ev_report, report.dump(2) + "\n");
      std::vector<WordScore> scores;
      for (const auto& w : run.words) scores.push_back(w.score);
      write_text(ev_csv, per_word_csv(scores, run.report));
      write_manifest(manifest_for(ev_report), full_cmd, snapshot, inputs);
      out << headline(run.report);
      return kOk;
    }

    if (syn->parsed()) {
      if (syn_n < 1) {
        err << "coreseg: --n must be at least 1\n";
        return kUsage;
      }
      synth::CorpusOptions opts{syn_n, synth::parse_difficulty(syn_difficulty), syn_seed,
                                syn_alphabet};
      const auto words = synth::generate_corpus(opts);
      const auto manifest = synth::write_corpus(words, opts, syn_out);
      out << manifest.string() << "\n";
      return kOk;
    }

    if (sw->parsed()) {
      SweepParam param;
      try {
        param = parse_sweep_param(sw_param);
      } catch (const SchemaError& e) {
        err << "coreseg: " << e.what() << "\n";
        return kUsage;
      }
      std::vector<double> values;
      try {
        values = sweep_values(sw_from, sw_to, sw_step);
      } catch (const CLI::ValidationError& e) {
        err << "coreseg: " << e.what() << "\n";
        return kUsage;
      }
      const SegmenterConfig cfg = sw_flags.resolve(sw);
      const Corpus corpus = load_corpus(sw_images, sw_truth);
      if (corpus.truths.empty()) {
        err << "coreseg: empty corpus in " << sw_truth << "\n";
        return kIo;
      }
      const auto rows = sweep(corpus, cfg, param, values, sw_tol, sw_flags.width_set, sw_jobs);
      write_text(sw_out, sweep_csv(param, rows));
      ordered_json snapshot = config_json(cfg);
      snapshot["tolerance"] = sw_tol;
      write_manifest(manifest_for(sw_out), full_cmd, snapshot, {sw_images, sw_truth});
      for (const auto& r : rows)
        if (r.argmax) out << "argmax " << to_string(param) << " = " << r.value << " (valid "
                          << std::fixed << std::setprecision(2) << r.report.valid_rate << "%)\n";
      return kOk;
    }
  } catch (const BoundsError& e) {
    err << "coreseg: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    err << "coreseg: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "coreseg: " << e.what() << "\n";
    return kIo;
  } catch (const FormatError& e) {
    err << "coreseg: " << e.what() << "\n";
    return kIo;
  } catch (const SchemaError& e) {
    err << "coreseg: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "coreseg: " << e.what() << "\n";
    return kProcessing;
  }

  out << app.help();
  return kUsage;
}

}  // namespace coreseg::cli

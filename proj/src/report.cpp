#include "coreseg/report.hpp"

#include <cstdio>
#include <sstream>

namespace coreseg {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json config_json(const SegmenterConfig& cfg) {
  ordered_json j;
  j["use_core_zone"] = cfg.use_core_zone;
  j["do_thin"] = cfg.do_thin;
  j["invert"] = cfg.invert;
  j["beta"] = cfg.beta;
  j["min_gap"] = cfg.min_gap;
  j["min_segment_width"] = cfg.min_segment_width;
  j["trim_outer"] = cfg.trim_outer;
  return j;
}

SegmenterConfig config_from_json(const json& j) {
  SegmenterConfig cfg;
  cfg.use_core_zone = j.value("use_core_zone", cfg.use_core_zone);
  cfg.do_thin = j.value("do_thin", cfg.do_thin);
  cfg.invert = j.value("invert", cfg.invert);
  cfg.beta = j.value("beta", cfg.beta);
  cfg.min_gap = j.value("min_gap", cfg.min_gap);
  cfg.min_segment_width = j.value("min_segment_width", cfg.min_segment_width);
  cfg.trim_outer = j.value("trim_outer", cfg.trim_outer);
  cfg.validate();
  return cfg;
}

ordered_json result_json(const SegmentationResult& res, const std::string& image) {
  ordered_json j;
  j["image"] = image;
  j["width"] = res.width;
  j["height"] = res.height;
  j["core_zone"] = {{"upper", res.core_zone.upper},
                    {"lower", res.core_zone.lower},
                    {"fallback", res.core_zone.fallback_used}};
  j["candidates"] = res.candidates;
  j["cuts"] = res.cuts;
  j["config"] = config_json(res.config);
  j["warnings"] = res.warnings;
  return j;
}

ordered_json report_json(const EvalReport& r) {
  ordered_json j;
  j["n_words"] = r.n_words;
  j["n_chars"] = r.n_chars;
  j["valid_chars"] = r.valid_chars;
  j["missed_chars"] = r.missed_chars;
  j["over_chars"] = r.over_chars;
  j["valid_rate"] = r.valid_rate;
  j["miss_rate"] = r.miss_rate;
  j["over_rate"] = r.over_rate;
  j["valid_words"] = r.valid_words;
  j["word_valid_rate"] = r.word_valid_rate;
  return j;
}

std::string per_word_csv(std::span<const WordScore> words, const EvalReport& totals) {
  std::ostringstream os;
  os << "image,n_chars,valid,missed,over\n";
  for (const auto& w : words)
    os << w.image << ',' << w.n_chars << ',' << w.valid << ',' << w.missed << ',' << w.over << '\n';
  os << "TOTAL," << totals.n_chars << ',' << totals.valid_chars << ',' << totals.missed_chars << ','
     << totals.over_chars << '\n';
  return os.str();
}

std::string headline(const EvalReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Valid segmented characters\t%.2f%%\n"
                "Miss segmentation\t%.2f%%\n"
                "Over-segmentation\t%.2f%%\n"
                "Valid segmented words\t%.2f%% (%d of %d)\n",
                r.valid_rate, r.miss_rate, r.over_rate, r.word_valid_rate, r.valid_words,
                r.n_words);
  return buf;
}

}  // namespace coreseg

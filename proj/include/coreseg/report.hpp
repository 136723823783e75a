#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "coreseg/eval.hpp"
#include "coreseg/segmenter.hpp"

namespace coreseg {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json config_json(const SegmenterConfig& cfg);
SegmenterConfig config_from_json(const nlohmann::json& j);

// {image, width, height, core_zone:{upper,lower,fallback}, candidates,
//  cuts, config, warnings}
nlohmann::ordered_json result_json(const SegmentationResult& res, const std::string& image);

nlohmann::ordered_json report_json(const EvalReport& r);

// One row per word plus a TOTAL row.
std::string per_word_csv(std::span<const WordScore> words, const EvalReport& totals);

// "Valid segmented characters 92.06%" style summary, one rate per line.
std::string headline(const EvalReport& r);

}  // namespace coreseg

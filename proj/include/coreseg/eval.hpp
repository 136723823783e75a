#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coreseg {

struct WordTruth {
  std::string image;
  std::optional<std::string> text;
  std::vector<int> true_cuts;  // interior boundaries, strictly increasing
  int n_chars = 1;             // == true_cuts.size() + 1
  std::optional<int> ink_left;
  std::optional<int> ink_right;
};

enum class Outcome { valid, missed, over };

const char* to_string(Outcome o);

struct CharOutcome {
  Outcome outcome = Outcome::valid;
  int char_index = 0;
  std::vector<int> matched_cut_columns;
};

struct WordScore {
  std::string image;
  int n_chars = 0;
  int valid = 0;
  int missed = 0;
  int over = 0;
};

struct EvalReport {
  int n_words = 0;
  int n_chars = 0;
  int valid_chars = 0;
  int missed_chars = 0;
  int over_chars = 0;
  double valid_rate = 0.0;  // percent of n_chars, two decimals
  double miss_rate = 0.0;
  double over_rate = 0.0;
  int valid_words = 0;
  double word_valid_rate = 0.0;
};

inline constexpr int kDefaultTolerance = 3;

// One-to-one greedy matching, nearest pairs within +-tol first (ties go
// to the left). A character is MISSED if one of its bounding true cuts
// went unmatched, else OVER if an unmatched predicted cut lies strictly
// inside it, else VALID. Outer characters are bounded by the ink extent
// when the truth carries one.
std::vector<CharOutcome> match_cuts(std::span<const int> predicted, const WordTruth& truth,
                                    int tol = kDefaultTolerance);

WordScore score_word(const std::string& image, std::span<const CharOutcome> outcomes);

EvalReport aggregate(std::span<const std::vector<CharOutcome>> words);
EvalReport aggregate(std::span<const WordScore> words);

// Builds a report straight from counts; word figures are left at zero.
EvalReport report_from_counts(int valid, int missed, int over, int n_chars);

// 100 * count / total rounded to two decimals (0 when total is 0).
double percent(int count, int total);

// True cuts with no candidate column within +-tol.
int boundaries_without_candidate(std::span<const int> candidates, std::span<const int> true_cuts,
                                 int tol);

// Throws IoError or SchemaError (message names the record index).
std::vector<WordTruth> load_truth(const std::filesystem::path& path);
std::vector<WordTruth> parse_truth(const std::string& json_text);
// Throws SchemaError for a record violating the WordTruth invariants.
void validate_truth(const WordTruth& w, std::size_t index);

}  // namespace coreseg

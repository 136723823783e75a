#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "coreseg/errors.hpp"
#include "coreseg/eval.hpp"

namespace coreseg {
namespace {

using V = std::vector<int>;

WordTruth truth(V cuts, std::optional<int> left = {}, std::optional<int> right = {}) {
  WordTruth w;
  w.image = "w.png";
  w.n_chars = static_cast<int>(cuts.size()) + 1;
  w.true_cuts = std::move(cuts);
  w.ink_left = left;
  w.ink_right = right;
  return w;
}

std::vector<Outcome> outcomes(const std::vector<CharOutcome>& cs) {
  std::vector<Outcome> out;
  for (const auto& c : cs) out.push_back(c.outcome);
  return out;
}

TEST(MatchCuts, AllWithinTolerance) {
  const auto r = match_cuts(V{11, 30}, truth({12, 29}), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>(3, Outcome::valid)));
}

TEST(MatchCuts, NothingPredicted) {
  const auto r = match_cuts(V{}, truth({12}), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>(2, Outcome::missed)));
}

TEST(MatchCuts, ExtraCutInsideFirstCharacter) {
  const auto r = match_cuts(V{5, 12}, truth({12}, 0, 25), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>{Outcome::over, Outcome::valid}));
}

TEST(MatchCuts, MissedOutranksOver) {
  // Cut 5 matches nothing and sits inside the first character, whose
  // right boundary (12) is missed.
  const auto r = match_cuts(V{5, 30}, truth({12, 30}, 0, 40), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>{Outcome::missed, Outcome::missed, Outcome::valid}));
}

TEST(MatchCuts, CutOnlyMatchedOnce) {
  const auto r = match_cuts(V{10}, truth({9, 12}), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>{Outcome::valid, Outcome::missed, Outcome::missed}));
}

TEST(MatchCuts, NearestPairMatchedFirst) {
  // 12 is closer to 13 than to 10, so the boundary at 10 goes unmatched.
  const auto r = match_cuts(V{12}, truth({10, 13}), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>{Outcome::missed, Outcome::missed, Outcome::valid}));
}

TEST(MatchCuts, EqualDistanceGoesLeft) {
  const auto r = match_cuts(V{8, 12}, truth({10}), 3);
  ASSERT_EQ(r[0].matched_cut_columns, (V{8}));
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>{Outcome::valid, Outcome::over}));
}

TEST(MatchCuts, OutsideInkIsNotOver) {
  const auto r = match_cuts(V{2, 12}, truth({12}, 5, 25), 3);
  EXPECT_EQ(outcomes(r), (std::vector<Outcome>{Outcome::valid, Outcome::valid}));
}

TEST(MatchCuts, NegativeToleranceRejected) {
  EXPECT_ANY_THROW(match_cuts(V{}, truth({}), -1));
}

TEST(Aggregate, ReportedRate) {
  const auto r = report_from_counts(1369, 1487 - 1369, 0, 1487);
  EXPECT_NEAR(r.valid_rate, 92.06, 0.01);
  EXPECT_DOUBLE_EQ(percent(1369, 1487), 92.06);
}

TEST(Aggregate, AllValidWord) {
  const std::vector<std::vector<CharOutcome>> words{match_cuts(V{10}, truth({10}))};
  const auto r = aggregate(std::span(words));
  EXPECT_EQ(r.n_words, 1);
  EXPECT_DOUBLE_EQ(r.word_valid_rate, 100.0);
  EXPECT_DOUBLE_EQ(r.valid_rate, 100.0);
}

TEST(Aggregate, NoneValid) {
  const auto r = report_from_counts(0, 10, 0, 10);
  EXPECT_DOUBLE_EQ(r.valid_rate, 0.0);
  EXPECT_DOUBLE_EQ(r.miss_rate, 100.0);
}

TEST(Aggregate, ScoresAndOutcomesAgree) {
  const std::vector<std::vector<CharOutcome>> words{match_cuts(V{5, 12}, truth({12}, 0, 25)),
                                                    match_cuts(V{}, truth({7, 20}))};
  std::vector<WordScore> scores;
  for (const auto& w : words) scores.push_back(score_word("x", w));
  const auto a = aggregate(std::span(words));
  const auto b = aggregate(std::span(scores));
  EXPECT_EQ(a.n_chars, 5);
  EXPECT_EQ(a.valid_chars, 1);
  EXPECT_EQ(a.over_chars, 1);
  EXPECT_EQ(a.missed_chars, 3);
  EXPECT_EQ(a.valid_chars, b.valid_chars);
  EXPECT_EQ(a.valid_words, 0);
  EXPECT_DOUBLE_EQ(a.valid_rate, 20.0);
}

TEST(BoundariesWithoutCandidate, Counts) {
  EXPECT_EQ(boundaries_without_candidate(V{3, 20}, V{5, 12, 22}, 3), 1);
  EXPECT_EQ(boundaries_without_candidate(V{}, V{5}, 3), 1);
}

struct Case {
  V predicted;
  WordTruth truth;
};

Case random_case(std::mt19937& rng) {
  V cuts;
  int c = 4;
  const int n = static_cast<int>(rng() % 7);
  for (int i = 0; i < n; ++i) cuts.push_back(c += 3 + static_cast<int>(rng() % 15));
  const int right = c + 3 + static_cast<int>(rng() % 15);
  V pred;
  for (int x : cuts)
    if (rng() % 4) pred.push_back(x + static_cast<int>(rng() % 9) - 4);
  for (int k = static_cast<int>(rng() % 3); k > 0; --k)
    pred.push_back(static_cast<int>(rng() % (right + 1)));
  std::sort(pred.begin(), pred.end());
  pred.erase(std::unique(pred.begin(), pred.end()), pred.end());
  return {pred, truth(cuts, 0, right)};
}

TEST(EvalProperty, PartitionMonotoneShift) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [pred, t] = random_case(rng);
    int prev_valid = -1;
    for (int tol = 0; tol <= 8; ++tol) {
      const auto r = match_cuts(pred, t, tol);
      ASSERT_EQ(static_cast<int>(r.size()), t.n_chars);
      const auto s = score_word("x", r);
      EXPECT_EQ(s.valid + s.missed + s.over, t.n_chars);
      EXPECT_GE(s.valid, prev_valid) << "trial " << trial << " tol " << tol;
      prev_valid = s.valid;

      V shifted_pred = pred, shifted_cuts = t.true_cuts;
      for (auto& x : shifted_pred) x += 13;
      for (auto& x : shifted_cuts) x += 13;
      const auto shifted = match_cuts(shifted_pred, truth(shifted_cuts, 13, *t.ink_right + 13), tol);
      EXPECT_EQ(outcomes(shifted), outcomes(r));
    }
    for (int tol : {0, 2, 5}) {
      const auto perfect = match_cuts(t.true_cuts, t, tol);
      EXPECT_EQ(score_word("x", perfect).valid, t.n_chars);
    }
  }
}

class TruthFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("coreseg_truth_" +
             std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + ".json");
  }
  void TearDown() override { std::filesystem::remove(path_); }
  void write(const std::string& s) { std::ofstream(path_) << s; }
  std::filesystem::path path_;
};

TEST_F(TruthFiles, TwoRecords) {
  write(R"({"words":[{"image":"a.png","text":"ab","true_cuts":[10],"n_chars":2},
                     {"image":"b.png","true_cuts":[],"ink_left":1,"ink_right":9}]})");
  const auto t = load_truth(path_);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].true_cuts, (V{10}));
  EXPECT_EQ(t[0].text, "ab");
  EXPECT_EQ(t[1].n_chars, 1);
  EXPECT_EQ(t[1].ink_right, 9);
}

TEST_F(TruthFiles, UnsortedCutsNameTheRecord) {
  write(R"({"words":[{"image":"a.png","true_cuts":[1]},{"image":"b.png","true_cuts":[9,4]}]})");
  try {
    load_truth(path_);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("record 1"), std::string::npos) << e.what();
  }
}

TEST_F(TruthFiles, NCharsMismatch) {
  write(R"({"words":[{"image":"a.png","true_cuts":[3,8],"n_chars":2}]})");
  EXPECT_THROW(load_truth(path_), SchemaError);
}

TEST_F(TruthFiles, Malformed) {
  write("{not json");
  EXPECT_THROW(load_truth(path_), SchemaError);
  write(R"({"words":[{"true_cuts":[]}]})");
  EXPECT_THROW(load_truth(path_), SchemaError);
}

TEST_F(TruthFiles, Missing) { EXPECT_THROW(load_truth(path_), IoError); }

}  // namespace
}  // namespace coreseg

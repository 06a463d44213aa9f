// Copyright (c) 2026 The Zaonhe Frontend Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zaonhe/mos.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "t_oracle.h"
#include "test_support.h"
#include "zaonhe/errors.h"

namespace zaonhe {
namespace {

std::vector<double> Repeat(std::initializer_list<std::pair<double, int>> runs) {
  std::vector<double> out;
  for (auto [v, k] : runs) out.insert(out.end(), k, v);
  return out;
}

TEST(StudentTTest, QuantilesMatchOracleAndPrintedTable) {
  // df -> two-sided 95% critical value as printed in standard t-tables.
  const std::pair<double, double> table[] = {
      {1, 12.706}, {3, 3.182}, {10, 2.228}, {30, 2.042}, {100, 1.984}};
  for (auto [df, printed] : table) {
    double q = StudentTQuantile(0.975, df);
    EXPECT_NEAR(q, testing::StudentTQuantileOracle(0.975, df), 1e-6) << df;
    EXPECT_NEAR(q, printed, 5e-4) << df;
  }
}

TEST(StudentTTest, QuantileAccurateAcrossDegreesOfFreedom) {
  for (double df : {2.0, 5.0, 17.0, 64.0, 250.0, 999.0}) {
    EXPECT_NEAR(StudentTQuantile(0.975, df),
                testing::StudentTQuantileOracle(0.975, df), 1e-6)
        << df;
  }
}

TEST(StudentTTest, CdfMatchesOracle) {
  for (double df : {1.0, 3.0, 18.0, 200.0}) {
    for (double t : {-4.0, -1.0, 0.0, 0.5, 2.5}) {
      EXPECT_NEAR(StudentTCdf(t, df), testing::StudentTCdfOracle(t, df), 1e-8);
    }
  }
}

TEST(MosCellTest, ZeroVariance) {
  std::vector<double> s{5, 5, 5, 5};
  MosCell c = ComputeMosCell(s);
  EXPECT_DOUBLE_EQ(c.mean, 5.0);
  EXPECT_EQ(c.ci_halfwidth, 0.0);
  EXPECT_EQ(c.n, 4u);
}

TEST(MosCellTest, AlternatingFoursAndFives) {
  std::vector<double> s{4, 5, 4, 5};
  MosCell c = ComputeMosCell(s);
  EXPECT_DOUBLE_EQ(c.mean, 4.5);
  double oracle = testing::HalfWidthOracle(s);
  EXPECT_NEAR(c.ci_halfwidth, oracle, 1e-6);
  EXPECT_NEAR(c.ci_halfwidth, 0.919, 1e-3);
}

TEST(MosCellTest, SyntheticSpeakerThreeRow) {
  auto s = Repeat({{5, 170}, {4, 26}, {3, 4}});
  MosCell c = ComputeMosCell(s);
  EXPECT_EQ(c.n, 200u);
  EXPECT_NEAR(c.mean, 4.83, 0.01);
  EXPECT_NEAR(c.ci_halfwidth, 0.06, 0.01);
  EXPECT_NEAR(c.ci_halfwidth, testing::HalfWidthOracle(s), 1e-6);
}

TEST(MosCellTest, SingleScoreHasNoInterval) {
  std::vector<double> s{3};
  EXPECT_EQ(ComputeMosCell(s).ci_halfwidth, 0.0);
  EXPECT_THROW(ComputeMosCell(std::vector<double>{}), InsufficientData);
}

// At fixed sample variance the interval scales with t(n-1)/sqrt(n).
TEST(MosCellTest, HalfWidthScalesWithSampleSize) {
  for (std::size_t n : {4u, 10u, 50u}) {
    auto make = [](std::size_t size) {
      // Values 3 +- d with d chosen so the sample variance is exactly 1.
      double d = std::sqrt(static_cast<double>(size - 1) / size);
      std::vector<double> x;
      for (std::size_t i = 0; i < size; ++i) x.push_back(i % 2 ? 3 + d : 3 - d);
      return x;
    };
    double h1 = ComputeMosCell(make(n)).ci_halfwidth;
    double h4 = ComputeMosCell(make(4 * n)).ci_halfwidth;
    double expected = 0.5 * testing::StudentTQuantileOracle(0.975, 4.0 * n - 1) /
                      testing::StudentTQuantileOracle(0.975, n - 1.0);
    EXPECT_NEAR(h4 / h1, expected, 1e-6) << n;
  }
}

TEST(WelchTest, IdenticalMultisetsGiveOne) {
  std::vector<double> a{3, 4, 5, 4}, b{4, 5, 4, 3};
  EXPECT_DOUBLE_EQ(WelchTTest(a, b), 1.0);
}

TEST(WelchTest, SeparatedCellsAreSignificant) {
  auto a = Repeat({{5, 9}, {4, 1}});
  auto b = Repeat({{1, 9}, {2, 1}});
  double p = WelchTTest(a, b);
  EXPECT_LT(p, 0.001);
  EXPECT_NEAR(p / testing::WelchOracle(a, b), 1.0, 1e-4);
}

TEST(WelchTest, MatchesOracleOnUnequalVariances) {
  std::vector<double> a{5, 4, 4, 3, 5, 2}, b{3, 3, 4, 2, 5, 1, 2};
  EXPECT_NEAR(WelchTTest(a, b), testing::WelchOracle(a, b), 1e-6);
}

TEST(WelchTest, SymmetricInItsArguments) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a, b;
    int na = testing::RandInt(rng, 2, 30), nb = testing::RandInt(rng, 2, 30);
    for (int i = 0; i < na; ++i) a.push_back(testing::RandInt(rng, 1, 5));
    for (int i = 0; i < nb; ++i) b.push_back(testing::RandInt(rng, 1, 5));
    double p = WelchTTest(a, b);
    EXPECT_DOUBLE_EQ(p, WelchTTest(b, a));
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST(WelchTest, TooFewScores) {
  std::vector<double> one{4}, two{4, 5};
  EXPECT_THROW(WelchTTest(one, two), InsufficientData);
}

std::string CompleteQuestionnaire(const std::string& participant, int score,
                                  bool skip_last = false) {
  std::string out;
  for (int s = 1; s <= kNumSpeakers; ++s) {
    for (int k = 1; k <= kNumSentences; ++k) {
      for (int m = 0; m < kNumMetrics; ++m) {
        if (skip_last && s == 3 && k == 5 && m == 3) continue;
        out += participant + "," + std::to_string(s) + "," + std::to_string(k) +
               "," + MetricName(static_cast<Metric>(m)) + "," +
               std::to_string(score) + "\n";
      }
    }
  }
  return out;
}

constexpr char kHeader[] = "participant,speaker,sentence,metric,score\n";

TEST(RatingsTest, CompleteQuestionnairesAreKept) {
  auto r = LoadRatings(testing::TestDataFile("ratings_synthetic.csv"));
  EXPECT_EQ(r.records.size(), 10u * 3 * 5 * 4);
  EXPECT_EQ(r.dropped_participants, std::vector<std::string>{"P11"});
  EXPECT_TRUE(r.errors.empty());
}

TEST(RatingsTest, IncompleteParticipantIsDropped) {
  std::string csv = kHeader;
  for (int p = 0; p < 9; ++p) csv += CompleteQuestionnaire("P" + std::to_string(p), 4);
  csv += CompleteQuestionnaire("Px", 2, /*skip_last=*/true);
  std::istringstream in(csv);
  auto r = ParseRatings(in);
  EXPECT_EQ(r.records.size(), 9u * 60);
  EXPECT_EQ(r.dropped_participants, std::vector<std::string>{"Px"});
}

TEST(RatingsTest, EmptyFile) {
  std::istringstream in("");
  EXPECT_TRUE(ParseRatings(in).records.empty());
  std::istringstream header_only(kHeader);
  EXPECT_TRUE(ParseRatings(header_only).records.empty());
}

TEST(RatingsTest, BadRowsAreReported) {
  std::istringstream in(std::string(kHeader) +
                        "P1,1,1,accuracy,6\n"
                        "P1,4,1,accuracy,3\n"
                        "P1,1,1,fluency,3\n"
                        "P1,1,1,accuracy\n"
                        "P1,1,1,accuracy,3\n"
                        "P1,1,1,accuracy,4\n");
  auto r = ParseRatings(in);
  std::vector<std::size_t> lines;
  for (const auto& e : r.errors) lines.push_back(e.line);
  EXPECT_EQ(lines, (std::vector<std::size_t>{2, 3, 4, 5, 7}));
}

TEST(RatingsTest, WrongHeaderIsFatal) {
  std::istringstream in("a,b,c\n");
  EXPECT_THROW(ParseRatings(in), IoError);
  EXPECT_THROW(LoadRatings("/nonexistent.csv"), IoError);
}

TEST(MosTableTest, GroupingsHaveExpectedShape) {
  auto r = LoadRatings(testing::TestDataFile("ratings_synthetic.csv"));
  EXPECT_EQ(ComputeMos(r.records, Grouping::kSpeaker).cells.size(), 3u);
  EXPECT_EQ(ComputeMos(r.records, Grouping::kSpeakerMetric).cells.size(), 12u);
  EXPECT_EQ(ComputeMos(r.records, Grouping::kSpeakerSentence).cells.size(), 15u);
  auto by_speaker = ComputeMos(r.records, Grouping::kSpeaker);
  const auto& s3 = by_speaker.cells.at({3, std::nullopt, std::nullopt});
  ASSERT_TRUE(s3.has_value());
  EXPECT_NEAR(s3->mean, 4.83, 0.01);
  EXPECT_NEAR(s3->ci_halfwidth, 0.06, 0.01);
}

TEST(MosTableTest, MissingCellsAreReportedNotZero) {
  std::vector<RatingRecord> only_one{{"P1", 1, 1, Metric::kAccuracy, 4}};
  auto t = ComputeMos(only_one, Grouping::kSpeaker);
  EXPECT_TRUE(t.cells.at({1, std::nullopt, std::nullopt}).has_value());
  EXPECT_FALSE(t.cells.at({2, std::nullopt, std::nullopt}).has_value());
}

TEST(MosTableTest, PermutationInvariantAndBounded) {
  auto r = LoadRatings(testing::TestDataFile("ratings_synthetic.csv"));
  auto records = r.records;
  std::mt19937 rng(3);
  auto reference = ComputeMos(records, Grouping::kSpeakerSentence);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(records.begin(), records.end(), rng);
    auto t = ComputeMos(records, Grouping::kSpeakerSentence);
    for (const auto& [key, cell] : t.cells) {
      ASSERT_TRUE(cell.has_value());
      const auto& ref = *reference.cells.at(key);
      EXPECT_NEAR(cell->mean, ref.mean, 1e-12);
      EXPECT_NEAR(cell->ci_halfwidth, ref.ci_halfwidth, 1e-12);
      auto scores = CellScores(records, key);
      EXPECT_GE(cell->mean, *std::min_element(scores.begin(), scores.end()));
      EXPECT_LE(cell->mean, *std::max_element(scores.begin(), scores.end()));
    }
  }
}

TEST(MosTableTest, PairwiseTestOnSpeakers) {
  auto r = LoadRatings(testing::TestDataFile("ratings_synthetic.csv"));
  CellKey s1{1, std::nullopt, std::nullopt}, s3{3, std::nullopt, std::nullopt};
  double p = PairwiseTest(r.records, s1, s3);
  EXPECT_LT(p, 0.001);
  EXPECT_DOUBLE_EQ(p, PairwiseTest(r.records, s3, s1));
}

}  // namespace
}  // namespace zaonhe

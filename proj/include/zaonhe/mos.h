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

#ifndef ZAONHE_MOS_H_
#define ZAONHE_MOS_H_

#include <compare>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zaonhe/errors.h"

namespace zaonhe {

inline constexpr int kNumSpeakers = 3;
inline constexpr int kNumSentences = 5;
inline constexpr int kNumMetrics = 4;
inline constexpr double kConfidenceLevel = 0.95;

// Table column order: alphabetical, as in the published tables.
enum class Metric { kAccuracy, kComprehensibility, kIntelligibility, kNaturalness };

std::string MetricName(Metric m);  // lower case, as in the CSV
std::optional<Metric> ParseMetric(std::string_view name);

struct RatingRecord {
  std::string participant;
  int speaker = 1;   // 1..3
  int sentence = 1;  // 1..5
  Metric metric = Metric::kAccuracy;
  int score = 1;     // 1..5

  bool operator==(const RatingRecord&) const = default;
};

struct RatingsLoadResult {
  std::vector<RatingRecord> records;
  std::vector<RowError> errors;
  std::vector<std::string> dropped_participants;  // incomplete questionnaires
};

// CSV with header participant,speaker,sentence,metric,score. Participants
// missing any (speaker, sentence, metric) cell are dropped entirely.
RatingsLoadResult ParseRatings(std::istream& in);
RatingsLoadResult LoadRatings(const std::string& path);  // IoError

struct MosCell {
  double mean = 0.0;
  double ci_halfwidth = 0.0;  // t(0.975, n-1) * s / sqrt(n)
  std::size_t n = 0;
};

// Throws InsufficientData for an empty sample. A single score yields a zero
// half-width.
MosCell ComputeMosCell(std::span<const double> scores);

double StudentTQuantile(double p, double df);
double StudentTCdf(double t, double df);

// Two-sided Welch (unequal variances) t-test p-value. Throws
// InsufficientData when either sample has fewer than 2 values.
double WelchTTest(std::span<const double> a, std::span<const double> b);

enum class Grouping { kSpeaker, kSpeakerMetric, kSpeakerSentence };

struct CellKey {
  int speaker = 1;
  std::optional<Metric> metric;
  std::optional<int> sentence;

  auto operator<=>(const CellKey&) const = default;
  bool operator==(const CellKey&) const = default;
};

std::vector<double> CellScores(std::span<const RatingRecord> records,
                               const CellKey& key);

struct MosTable {
  Grouping grouping = Grouping::kSpeaker;
  std::map<CellKey, std::optional<MosCell>> cells;  // nullopt: no ratings
};

// Every expected cell of the grouping is present; empty ones are nullopt.
MosTable ComputeMos(std::span<const RatingRecord> records, Grouping grouping);

double PairwiseTest(std::span<const RatingRecord> records, const CellKey& a,
                    const CellKey& b);

}  // namespace zaonhe

#endif  // ZAONHE_MOS_H_

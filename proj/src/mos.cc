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

#include <boost/math/distributions/students_t.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <tuple>

#include "zaonhe/utf8.h"

namespace zaonhe {

std::string MetricName(Metric m) {
  switch (m) {
    case Metric::kAccuracy: return "accuracy";
    case Metric::kComprehensibility: return "comprehensibility";
    case Metric::kIntelligibility: return "intelligibility";
    case Metric::kNaturalness: return "naturalness";
  }
  return "?";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  for (int i = 0; i < kNumMetrics; ++i) {
    auto m = static_cast<Metric>(i);
    if (name == MetricName(m)) return m;
  }
  return std::nullopt;
}

namespace {

std::optional<int> ParseInt(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

RatingsLoadResult ParseRatings(std::istream& in) {
  RatingsLoadResult result;
  std::vector<RatingRecord> rows;
  std::vector<std::size_t> row_lines;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = Trim(line);
    if (body.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (body != "participant,speaker,sentence,metric,score") {
        throw IoError("ratings: expected header "
                      "'participant,speaker,sentence,metric,score'");
      }
      continue;
    }
    auto f = SplitFields(body, ',');
    if (f.size() != 5) {
      result.errors.push_back({line_no, "expected 5 columns"});
      continue;
    }
    RatingRecord r;
    r.participant = std::string(Trim(f[0]));
    auto speaker = ParseInt(Trim(f[1]));
    auto sentence = ParseInt(Trim(f[2]));
    auto metric = ParseMetric(Trim(f[3]));
    auto score = ParseInt(Trim(f[4]));
    if (r.participant.empty()) {
      result.errors.push_back({line_no, "empty participant"});
    } else if (!speaker || *speaker < 1 || *speaker > kNumSpeakers) {
      result.errors.push_back({line_no, "speaker must be 1-3"});
    } else if (!sentence || *sentence < 1 || *sentence > kNumSentences) {
      result.errors.push_back({line_no, "sentence must be 1-5"});
    } else if (!metric) {
      result.errors.push_back({line_no, "unknown metric"});
    } else if (!score || *score < 1 || *score > 5) {
      result.errors.push_back({line_no, "score must be an integer 1-5"});
    } else {
      r.speaker = *speaker;
      r.sentence = *sentence;
      r.metric = *metric;
      r.score = *score;
      rows.push_back(std::move(r));
      row_lines.push_back(line_no);
    }
  }

  using Cell = std::tuple<int, int, Metric>;
  std::map<std::string, std::set<Cell>> cells;
  std::vector<std::string> order;
  std::vector<RatingRecord> unique;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatingRecord& r = rows[i];
    auto [it, fresh] = cells.try_emplace(r.participant);
    if (fresh) order.push_back(r.participant);
    if (!it->second.insert({r.speaker, r.sentence, r.metric}).second) {
      result.errors.push_back(
          {row_lines[i], "duplicate rating ignored for participant " +
                             r.participant});
      continue;
    }
    unique.push_back(std::move(r));
  }
  constexpr std::size_t kCells = kNumSpeakers * kNumSentences * kNumMetrics;
  std::set<std::string> complete;
  for (const auto& p : order) {
    if (cells[p].size() == kCells) {
      complete.insert(p);
    } else {
      result.dropped_participants.push_back(p);
    }
  }
  for (auto& r : unique) {
    if (complete.count(r.participant)) result.records.push_back(std::move(r));
  }
  return result;
}

RatingsLoadResult LoadRatings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ratings file: " + path);
  return ParseRatings(in);
}

double StudentTQuantile(double p, double df) {
  return boost::math::quantile(boost::math::students_t(df), p);
}

double StudentTCdf(double t, double df) {
  return boost::math::cdf(boost::math::students_t(df), t);
}

namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // sample variance, n-1 denominator
  std::size_t n = 0;
};

Moments ComputeMoments(std::span<const double> x) {
  Moments m;
  m.n = x.size();
  if (m.n == 0) return m;
  double sum = 0.0;
  for (double v : x) sum += v;
  m.mean = sum / static_cast<double>(m.n);
  if (m.n < 2) return m;
  double ss = 0.0;
  for (double v : x) ss += (v - m.mean) * (v - m.mean);
  m.variance = ss / static_cast<double>(m.n - 1);
  return m;
}

}  // namespace

MosCell ComputeMosCell(std::span<const double> scores) {
  if (scores.empty()) throw InsufficientData("no scores in cell");
  Moments m = ComputeMoments(scores);
  MosCell cell{m.mean, 0.0, m.n};
  if (m.n >= 2 && m.variance > 0.0) {
    double t = StudentTQuantile(0.5 + kConfidenceLevel / 2.0,
                                static_cast<double>(m.n - 1));
    cell.ci_halfwidth =
        t * std::sqrt(m.variance) / std::sqrt(static_cast<double>(m.n));
  }
  return cell;
}

double WelchTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw InsufficientData("Welch t-test needs at least 2 scores per cell");
  }
  Moments ma = ComputeMoments(a);
  Moments mb = ComputeMoments(b);
  double va = ma.variance / static_cast<double>(ma.n);
  double vb = mb.variance / static_cast<double>(mb.n);
  double se2 = va + vb;
  if (se2 == 0.0) return ma.mean == mb.mean ? 1.0 : 0.0;
  double t = (ma.mean - mb.mean) / std::sqrt(se2);
  double df = se2 * se2 /
              (va * va / static_cast<double>(ma.n - 1) +
               vb * vb / static_cast<double>(mb.n - 1));
  double p = 2.0 * StudentTCdf(-std::fabs(t), df);
  return std::min(1.0, std::max(0.0, p));
}

std::vector<double> CellScores(std::span<const RatingRecord> records,
                               const CellKey& key) {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.speaker != key.speaker) continue;
    if (key.metric && r.metric != *key.metric) continue;
    if (key.sentence && r.sentence != *key.sentence) continue;
    out.push_back(r.score);
  }
  return out;
}

MosTable ComputeMos(std::span<const RatingRecord> records, Grouping grouping) {
  MosTable table;
  table.grouping = grouping;
  std::vector<CellKey> keys;
  for (int s = 1; s <= kNumSpeakers; ++s) {
    switch (grouping) {
      case Grouping::kSpeaker:
        keys.push_back({s, std::nullopt, std::nullopt});
        break;
      case Grouping::kSpeakerMetric:
        for (int m = 0; m < kNumMetrics; ++m) {
          keys.push_back({s, static_cast<Metric>(m), std::nullopt});
        }
        break;
      case Grouping::kSpeakerSentence:
        for (int k = 1; k <= kNumSentences; ++k) {
          keys.push_back({s, std::nullopt, k});
        }
        break;
    }
  }
  for (const auto& key : keys) {
    auto scores = CellScores(records, key);
    table.cells[key] =
        scores.empty() ? std::nullopt
                       : std::optional<MosCell>(ComputeMosCell(scores));
  }
  return table;
}

double PairwiseTest(std::span<const RatingRecord> records, const CellKey& a,
                    const CellKey& b) {
  return WelchTTest(CellScores(records, a), CellScores(records, b));
}

}  // namespace zaonhe

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

#include "zaonhe/commands.h"

#include <cstdio>
#include <string>
#include <vector>

#include "zaonhe/utf8.h"

namespace zaonhe {

namespace {

std::string PhonemeLine(const std::vector<WordAnalysis>& words) {
  std::string out;
  for (const WordAnalysis& w : words) {
    std::string piece;
    if (w.token.origin == TokenOrigin::kPunctuation) {
      piece = std::string(Trim(w.token.text));
    } else {
      for (std::size_t i = 0; i < w.ipa.size(); ++i) {
        if (i) piece += '.';
        piece += w.ipa[i].Joined() + w.ipa[i].tone.contour;
      }
    }
    if (piece.empty()) continue;
    if (!out.empty()) out += ' ';
    out += piece;
  }
  return out;
}

std::string ProcessLine(LineCommand command, const std::string& line,
                        const Resources& res, const PipelineOptions& options,
                        const OutputOptions& output) {
  bool needs_sandhi = output.json || output.contour_only ||
                      command == LineCommand::kSandhi ||
                      command == LineCommand::kPipeline;
  if (!needs_sandhi) {
    std::string traditional;
    try {
      traditional = res.mapping.ToTraditional(NormalizeNfc(line));
    } catch (const Error& e) {
      throw StageError("normalize", e.what());
    }
    auto words = Phonemise(traditional, res, options);
    return command == LineCommand::kSegment ? RenderSegmentation(words)
                                            : PhonemeLine(words);
  }
  PipelineRecord rec = RunPipeline(line, res, options);
  if (output.contour_only) return rec.contour;
  if (output.json || command == LineCommand::kPipeline) {
    return ToJson(rec).dump(-1, ' ', false,
                            nlohmann::ordered_json::error_handler_t::replace);
  }
  return rec.contour;
}

}  // namespace

std::size_t RunLineCommand(LineCommand command, std::istream& in,
                           std::ostream& out, std::ostream& diag,
                           const Resources& res,
                           const PipelineOptions& options,
                           const OutputOptions& output) {
  std::size_t failures = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      out << ProcessLine(command, line, res, options, output) << '\n';
    } catch (const Error& e) {
      ++failures;
      diag << "line " << line_no << ": " << e.what() << '\n';
      bool json = !output.contour_only &&
                  (output.json || command == LineCommand::kPipeline);
      if (json) {
        nlohmann::ordered_json err;
        err["input"] = line;
        const auto* stage = dynamic_cast<const StageError*>(&e);
        err["error"] = {{"stage", stage ? stage->stage() : "input"},
                        {"message", e.what()}};
        out << err.dump(-1, ' ', false,
                        nlohmann::ordered_json::error_handler_t::replace)
            << '\n';
      } else {
        out << '\n';
      }
    }
  }
  out.flush();
  return failures;
}

std::optional<std::pair<int, int>> ParseSpeakerPair(std::string_view text) {
  if (text.size() != 3 || text[1] != ':') return std::nullopt;
  int a = text[0] - '0';
  int b = text[2] - '0';
  if (a < 1 || a > kNumSpeakers || b < 1 || b > kNumSpeakers) {
    return std::nullopt;
  }
  return std::make_pair(a, b);
}

namespace {

struct Column {
  std::string title;
  std::optional<Metric> metric;
  std::optional<int> sentence;
};

std::vector<Column> ColumnsFor(Grouping g) {
  std::vector<Column> cols;
  switch (g) {
    case Grouping::kSpeaker:
      cols.push_back({"Overall MOS", std::nullopt, std::nullopt});
      break;
    case Grouping::kSpeakerMetric:
      for (int m = 0; m < kNumMetrics; ++m) {
        std::string name = MetricName(static_cast<Metric>(m));
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
        cols.push_back({name, static_cast<Metric>(m), std::nullopt});
      }
      break;
    case Grouping::kSpeakerSentence:
      for (int k = 1; k <= kNumSentences; ++k) {
        cols.push_back({"Sentence " + std::to_string(k), std::nullopt, k});
      }
      break;
  }
  return cols;
}

const char* GroupingName(Grouping g) {
  switch (g) {
    case Grouping::kSpeaker: return "speaker";
    case Grouping::kSpeakerMetric: return "metric";
    case Grouping::kSpeakerSentence: return "sentence";
  }
  return "?";
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string FormatP(double p) { return p < 0.001 ? "<0.001" : Fixed(p, 3); }

std::string Pad(const std::string& s, std::size_t width) {
  std::size_t len = Utf8Length(s);
  return len >= width ? s : s + std::string(width - len, ' ');
}

constexpr char kTestLabel[] =
    "Welch two-sided t-test, no multiple-comparison correction";

}  // namespace

int RunEval(const RatingsLoadResult& ratings, const EvalOptions& options,
            std::ostream& out, std::ostream& diag) {
  for (const auto& e : ratings.errors) {
    diag << "ratings line " << e.line << ": " << e.message << '\n';
  }
  for (const auto& p : ratings.dropped_participants) {
    diag << "dropped incomplete questionnaire: " << p << '\n';
  }
  const auto& records = ratings.records;
  MosTable table = ComputeMos(records, options.grouping);
  auto cols = ColumnsFor(options.grouping);

  struct PValue {
    std::string column;
    std::optional<double> p;
  };
  std::vector<PValue> tests;
  int status = 0;
  if (options.test) {
    for (const auto& c : cols) {
      CellKey a{options.test->first, c.metric, c.sentence};
      CellKey b{options.test->second, c.metric, c.sentence};
      try {
        tests.push_back({c.title, PairwiseTest(records, a, b)});
      } catch (const InsufficientData& e) {
        diag << c.title << ": " << e.what() << '\n';
        tests.push_back({c.title, std::nullopt});
        status = 1;
      }
    }
  }

  if (options.json) {
    nlohmann::ordered_json j;
    j["grouping"] = GroupingName(options.grouping);
    j["confidence"] = kConfidenceLevel;
    j["participants"] = records.size() / (kNumSpeakers * kNumSentences *
                                          kNumMetrics);
    j["dropped_participants"] = ratings.dropped_participants;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int s = 1; s <= kNumSpeakers; ++s) {
      nlohmann::ordered_json cells = nlohmann::ordered_json::array();
      for (const auto& c : cols) {
        const auto& cell = table.cells.at({s, c.metric, c.sentence});
        if (!cell) {
          cells.push_back({{"column", c.title}, {"missing", true}});
        } else {
          cells.push_back({{"column", c.title},
                           {"mean", cell->mean},
                           {"ci_halfwidth", cell->ci_halfwidth},
                           {"n", cell->n}});
        }
      }
      rows.push_back({{"speaker", s}, {"cells", std::move(cells)}});
    }
    j["rows"] = std::move(rows);
    if (options.test) {
      nlohmann::ordered_json pv = nlohmann::ordered_json::array();
      for (const auto& t : tests) {
        pv.push_back({{"column", t.column},
                      {"p", t.p ? nlohmann::ordered_json(*t.p)
                                : nlohmann::ordered_json(nullptr)}});
      }
      j["test"] = {{"speakers", {options.test->first, options.test->second}},
                   {"method", kTestLabel},
                   {"p_values", std::move(pv)}};
    }
    out << j.dump(2) << '\n';
    return status;
  }

  std::vector<std::vector<std::string>> grid;
  grid.push_back({"Speaker"});
  for (const auto& c : cols) grid[0].push_back(c.title);
  for (int s = 1; s <= kNumSpeakers; ++s) {
    std::vector<std::string> row{std::to_string(s)};
    for (const auto& c : cols) {
      const auto& cell = table.cells.at({s, c.metric, c.sentence});
      row.push_back(cell ? Fixed(cell->mean, 2) + " ± " +
                               Fixed(cell->ci_halfwidth, 2)
                         : "n/a");
    }
    grid.push_back(std::move(row));
  }
  if (options.test) {
    std::vector<std::string> row{"p(" + std::to_string(options.test->first) +
                                 ":" + std::to_string(options.test->second) +
                                 ")"};
    for (const auto& t : tests) row.push_back(t.p ? FormatP(*t.p) : "n/a");
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], Utf8Length(row[i]));
    }
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 == row.size() ? row[i] : Pad(row[i], width[i] + 2);
    }
    out << line << '\n';
  }
  out << "Confidence interval: 95% (t-distribution)\n";
  if (options.test) out << "p-values: " << kTestLabel << '\n';
  return status;
}

}  // namespace zaonhe

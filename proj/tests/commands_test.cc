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

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "test_support.h"

namespace zaonhe {
namespace {

struct Output {
  std::string out;
  std::string diag;
  std::size_t failures = 0;
};

Output RunLines(LineCommand cmd, const std::string& input,
                OutputOptions output = {}) {
  std::istringstream in(input);
  std::ostringstream out, diag;
  Output r;
  r.failures = RunLineCommand(cmd, in, out, diag, testing::ShippedResources(),
                              testing::ShippedOptions(), output);
  r.out = out.str();
  r.diag = diag.str();
  return r;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(SegmentCommandTest, RendersSentenceFive) {
  Output r = RunLines(LineCommand::kSegment, "儂弗要弗二弗三個\n");
  EXPECT_EQ(r.failures, 0u);
  EXPECT_NE(r.out.find("vəʔ-ni=vəʔ=se1 gəʔ"), std::string::npos);
}

TEST(SegmentCommandTest, EmptyLineGivesEmptyLine) {
  Output r = RunLines(LineCommand::kSegment, "\n");
  EXPECT_EQ(r.out, "\n");
  EXPECT_TRUE(r.diag.empty());
}

TEST(SegmentCommandTest, BadLineDoesNotAbortTheBatch) {
  Output r = RunLines(LineCommand::kSegment, "上海\n上海龘\n世界\n");
  EXPECT_EQ(r.failures, 1u);
  EXPECT_EQ(Lines(r.out), (std::vector<std::string>{"zã-he", "", "sɿ-ka"}));
  EXPECT_EQ(r.diag.rfind("line 2: ", 0), 0u) << r.diag;
  EXPECT_NE(r.diag.find("龘"), std::string::npos);
}

TEST(PhonemizeCommandTest, CitationTonesPerSyllable) {
  Output r = RunLines(LineCommand::kPhonemize, "上海。\n");
  EXPECT_EQ(r.out, "zã23.he334 。\n");
}

TEST(SandhiCommandTest, PrintsContour) {
  Output r = RunLines(LineCommand::kSandhi, "上海\n");
  EXPECT_EQ(r.out, "[zã2 he4]\n");
}

TEST(PipelineCommandTest, OneRecordPerSentence) {
  std::ifstream in(testing::DataFile("sentences.txt"));
  std::stringstream buf;
  buf << in.rdbuf();
  Output r = RunLines(LineCommand::kPipeline, buf.str());
  auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  auto rec = nlohmann::ordered_json::parse(lines[4]);
  bool found = false;
  for (const auto& d : rec["domains"]) {
    if (d["length"] == 5) {
      std::size_t start = d["start"];
      std::vector<std::string> pitches;
      for (std::size_t k = start; k < start + 5; ++k) pitches.push_back(rec["surface"][k]);
      EXPECT_EQ(pitches, (std::vector<std::string>{"1", "3", "2", "2", "1"}));
      EXPECT_TRUE(d["clitic"].get<bool>());
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(PipelineCommandTest, ContourFlag) {
  OutputOptions o;
  o.contour_only = true;
  Output r = RunLines(LineCommand::kPipeline, "上海\n", o);
  EXPECT_EQ(r.out, "[zã2 he4]\n");
}

TEST(PipelineCommandTest, ErrorsBecomeRecords) {
  Output r = RunLines(LineCommand::kPipeline, "龘\n");
  EXPECT_EQ(r.failures, 1u);
  auto rec = nlohmann::ordered_json::parse(Lines(r.out).at(0));
  EXPECT_EQ(rec["error"]["stage"], "romanise");
}

TEST(PipelineCommandTest, ByteIdenticalAcrossRuns) {
  const std::string input = "我老衰癡個，昨日夜重陽亮養。\n侬好，世界！\n";
  EXPECT_EQ(RunLines(LineCommand::kPipeline, input).out,
            RunLines(LineCommand::kPipeline, input).out);
}

TEST(SpeakerPairTest, Parses) {
  EXPECT_EQ(ParseSpeakerPair("1:2"), std::make_pair(1, 2));
  EXPECT_FALSE(ParseSpeakerPair("1:4").has_value());
  EXPECT_FALSE(ParseSpeakerPair("12").has_value());
}

RatingsLoadResult Ratings() {
  return LoadRatings(testing::TestDataFile("ratings_synthetic.csv"));
}

TEST(EvalCommandTest, SpeakerTableHasThreeRows) {
  std::ostringstream out, diag;
  EXPECT_EQ(RunEval(Ratings(), {}, out, diag), 0);
  auto lines = Lines(out.str());
  ASSERT_GE(lines.size(), 4u);
  EXPECT_EQ(lines[0].rfind("Speaker", 0), 0u);
  for (int s = 1; s <= 3; ++s) {
    EXPECT_EQ(lines[s].rfind(std::to_string(s), 0), 0u);
    EXPECT_NE(lines[s].find("±"), std::string::npos);
  }
  EXPECT_NE(lines[3].find("4.83 ± 0.06"), std::string::npos) << lines[3];
  EXPECT_NE(out.str().find("Confidence interval: 95%"), std::string::npos);
}

TEST(EvalCommandTest, SentenceTableWithPValues) {
  EvalOptions o;
  o.grouping = Grouping::kSpeakerSentence;
  o.test = std::make_pair(1, 2);
  std::ostringstream out, diag;
  EXPECT_EQ(RunEval(Ratings(), o, out, diag), 0);
  std::string text = out.str();
  EXPECT_NE(text.find("Sentence 5"), std::string::npos);
  EXPECT_NE(text.find("p(1:2)"), std::string::npos);
  EXPECT_NE(text.find("Welch"), std::string::npos);
}

TEST(EvalCommandTest, JsonOutput) {
  EvalOptions o;
  o.grouping = Grouping::kSpeakerMetric;
  o.json = true;
  std::ostringstream out, diag;
  ASSERT_EQ(RunEval(Ratings(), o, out, diag), 0);
  auto j = nlohmann::ordered_json::parse(out.str());
  EXPECT_FALSE(j.empty());
}

}  // namespace
}  // namespace zaonhe

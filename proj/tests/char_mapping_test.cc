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

#include "zaonhe/char_mapping.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "test_support.h"
#include "zaonhe/utf8.h"

namespace zaonhe {
namespace {

TEST(CharMappingTest, ConvertsSimplifiedCharacters) {
  const CharMapping& m = testing::ShippedResources().mapping;
  EXPECT_EQ(m.ToTraditional("国际"), "國際");
  EXPECT_EQ(m.ToTraditional("侬好，世界！"), "儂好，世界！");
}

TEST(CharMappingTest, TraditionalTextIsUnchanged) {
  const CharMapping& m = testing::ShippedResources().mapping;
  EXPECT_EQ(m.ToTraditional("上海"), "上海");
  EXPECT_EQ(m.ToTraditional(""), "");
}

TEST(CharMappingTest, MultiCharacterRulesUseLongestMatch) {
  CharMapping m({{"干", "乾"}, {"干部", "幹部"}});
  EXPECT_EQ(m.ToTraditional("干部干"), "幹部乾");
}

TEST(CharMappingTest, ParseReportsMalformedRows) {
  std::istringstream in("国\t國\nbad row\n\t國\n");
  std::vector<RowError> errors;
  CharMapping m = CharMapping::Parse(in, &errors);
  EXPECT_EQ(m.size(), 1u);
  ASSERT_EQ(errors.size(), 2u);
  EXPECT_EQ(errors[0].line, 2u);
  EXPECT_EQ(errors[1].line, 3u);
}

// Conversion is idempotent over every line of the shipped fixtures, and a
// converted string never contains a mapping source character.
TEST(CharMappingTest, IdempotentOverCorpus) {
  const CharMapping& m = testing::ShippedResources().mapping;
  std::vector<std::string> corpus;
  std::ifstream in(testing::DataFile("sentences.txt"));
  for (std::string line; std::getline(in, line);) corpus.push_back(line);
  for (const auto& [from, to] : m.pairs()) {
    corpus.push_back(EncodeUtf8(from) + EncodeUtf8(to));
  }
  ASSERT_GT(corpus.size(), 5u);
  for (const std::string& x : corpus) {
    std::string once = m.ToTraditional(x);
    EXPECT_EQ(m.ToTraditional(once), once) << x;
    EXPECT_EQ(Utf8Length(once), Utf8Length(x));
  }
}

}  // namespace
}  // namespace zaonhe

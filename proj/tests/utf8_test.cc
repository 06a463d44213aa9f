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

#include "zaonhe/utf8.h"

#include <random>

#include "gtest/gtest.h"
#include "zaonhe/errors.h"

namespace zaonhe {
namespace {

TEST(Utf8Test, DecodesMixedWidthText) {
  std::u32string cps = DecodeUtf8("a上😀");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[0], U'a');
  EXPECT_EQ(cps[1], U'上');
  EXPECT_EQ(cps[2], U'\U0001F600');
}

TEST(Utf8Test, RejectsMalformedInput) {
  EXPECT_THROW(DecodeUtf8("\xE4\xB8"), Error);        // truncated
  EXPECT_THROW(DecodeUtf8("\xC0\xAF"), Error);        // overlong
  EXPECT_THROW(DecodeUtf8("\xED\xA0\x80"), Error);    // surrogate
  EXPECT_THROW(DecodeUtf8("\xFF"), Error);
  EXPECT_THROW(DecodeUtf8("a\x80"), Error);
}

TEST(Utf8Test, RoundTripsRandomScalarValues) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> dist(1, 0x10FFFF);
  for (int trial = 0; trial < 200; ++trial) {
    std::u32string text;
    while (text.size() < 16) {
      char32_t c = dist(rng);
      if (c >= 0xD800 && c <= 0xDFFF) continue;
      text.push_back(c);
    }
    std::string encoded = EncodeUtf8(text);
    EXPECT_EQ(DecodeUtf8(encoded), text);
    EXPECT_EQ(Utf8Length(encoded), text.size());
  }
}

TEST(Utf8Test, NormalizesToNfc) {
  EXPECT_EQ(NormalizeNfc("e\xCC\x81"), "\xC3\xA9");
  EXPECT_EQ(NormalizeNfc("a\xCC\x83"), "ã");
  EXPECT_EQ(NormalizeNfc("上海"), "上海");
}

TEST(Utf8Test, ClassifiesHan) {
  EXPECT_TRUE(IsHan(U'個'));
  EXPECT_TRUE(IsHan(U'〇'));
  EXPECT_TRUE(IsHan(U'\U00020000'));
  EXPECT_FALSE(IsHan(U'。'));
  EXPECT_FALSE(IsHan(U'，'));
  EXPECT_FALSE(IsHan(U'a'));
}

TEST(Utf8Test, SplitsFieldsKeepingEmptyOnes) {
  auto f = SplitFields("a\t\tb\t", '\t');
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], "a");
  EXPECT_EQ(f[1], "");
  EXPECT_EQ(f[2], "b");
  EXPECT_EQ(f[3], "");
}

TEST(Utf8Test, SplitsWordsAndTrims) {
  auto w = SplitWords("  zaon \the ");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], "zaon");
  EXPECT_EQ(w[1], "he");
  EXPECT_TRUE(SplitWords("").empty());
  EXPECT_EQ(Trim(" \tx y\r\n"), "x y");
  EXPECT_EQ(Trim("   "), "");
}

}  // namespace
}  // namespace zaonhe

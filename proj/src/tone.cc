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

#include "zaonhe/tone.h"

#include <array>
#include <fstream>
#include <span>

#include "zaonhe/utf8.h"

namespace zaonhe {

std::string ToneCategoryName(ToneCategory c) {
  return "T" + std::to_string(static_cast<int>(c));
}

std::optional<ToneCategory> ParseToneCategory(std::string_view name) {
  if (name.size() != 2 || name[0] != 'T' || name[1] < '1' || name[1] > '5') {
    return std::nullopt;
  }
  return static_cast<ToneCategory>(name[1] - '0');
}

const std::vector<std::string>& CitationContours(ToneCategory c) {
  static const std::array<std::vector<std::string>, kNumToneCategories> k = {{
      {"53", "51"},
      {"334", "34"},
      {"23"},
      {"5", "55"},
      {"12"},
  }};
  return k[static_cast<int>(c) - 1];
}

ToneValue ToneValue::Citation(ToneCategory c) {
  return {c, CitationContours(c).front(), IsCheckedCategory(c)};
}

bool IsChaoContour(std::string_view digits) {
  if (digits.empty() || digits.size() > 3) return false;
  for (char d : digits) {
    if (d < '1' || d > '5') return false;
  }
  return true;
}

std::optional<SyllableSpelling> SplitToneDigit(std::string_view syllable) {
  SyllableSpelling out;
  if (!syllable.empty() && syllable.back() >= '0' && syllable.back() <= '9') {
    out.digit = syllable.back() - '0';
    syllable.remove_suffix(1);
  }
  if (syllable.empty()) return std::nullopt;
  for (char ch : syllable) {
    if (ch < 'a' || ch > 'z') return std::nullopt;
  }
  out.letters = std::string(syllable);
  return out;
}

namespace {

constexpr std::string_view kVoiced[] = {"zh", "dz", "gh", "ng", "gn", "b",
                                        "d",  "g",  "v",  "z",  "j",  "m",
                                        "n",  "l",  "w",  "y"};
constexpr std::string_view kVoiceless[] = {"tsh", "ts", "ph", "th", "kh",
                                           "ch",  "sh", "p",  "t",  "k",
                                           "c",   "s",  "h",  "f"};

bool StartsWithAny(std::string_view s, std::span<const std::string_view> set) {
  for (auto p : set) {
    if (s.starts_with(p)) return true;
  }
  return false;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

bool HasVoicedInitial(std::string_view letters) {
  return StartsWithAny(letters, kVoiced);
}

ToneValue AssignTone(std::string_view syllable) {
  auto spelling = SplitToneDigit(syllable);
  if (!spelling) throw ToneUnderivable(std::string(syllable));
  const std::string& s = spelling->letters;

  bool voiced = HasVoicedInitial(s);
  if (!voiced && !StartsWithAny(s, kVoiceless) && !IsVowel(s[0])) {
    throw ToneUnderivable(std::string(syllable));
  }
  bool checked = s.back() == 'q';
  if (checked && s.size() < 2) throw ToneUnderivable(std::string(syllable));

  if (spelling->digit) {
    int d = *spelling->digit;
    if (d < 1 || d > 5) throw ToneUnderivable(std::string(syllable));
    auto c = static_cast<ToneCategory>(d);
    if (IsCheckedCategory(c) != checked) {
      throw ToneUnderivable(std::string(syllable));
    }
    return ToneValue::Citation(c);
  }
  if (checked) {
    return ToneValue::Citation(voiced ? ToneCategory::kT5 : ToneCategory::kT4);
  }
  return ToneValue::Citation(voiced ? ToneCategory::kT3 : ToneCategory::kT1);
}

std::optional<int> ToneMarks::Find(char32_t c) const {
  auto it = marks_.find(c);
  if (it == marks_.end()) return std::nullopt;
  return it->second;
}

ToneMarks ToneMarks::Parse(std::istream& in, std::vector<RowError>* errors) {
  ToneMarks marks;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    auto f = SplitFields(line, '\t');
    std::u32string ch;
    if (f.size() == 2) ch = DecodeUtf8(NormalizeNfc(f[0]));
    if (ch.size() != 1 || f[1].size() != 1 || f[1][0] < '1' || f[1][0] > '5') {
      if (errors) errors->push_back({line_no, "expected char<TAB>digit(1-5)"});
      continue;
    }
    marks.Set(ch[0], f[1][0] - '0');
  }
  return marks;
}

ToneMarks ToneMarks::Load(const std::string& path,
                          std::vector<RowError>* errors) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tone marks file: " + path);
  return Parse(in, errors);
}

}  // namespace zaonhe

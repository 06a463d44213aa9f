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

#ifndef ZAONHE_TONE_H_
#define ZAONHE_TONE_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zaonhe/errors.h"

namespace zaonhe {

// The five Shanghainese citation tones.
//   T1 falling 53, T2 rising 334, T3 low rising 23,
//   T4 high checked 5, T5 low checked 12.
enum class ToneCategory { kT1 = 1, kT2 = 2, kT3 = 3, kT4 = 4, kT5 = 5 };

inline constexpr int kNumToneCategories = 5;

std::string ToneCategoryName(ToneCategory c);  // "T1".."T5"
std::optional<ToneCategory> ParseToneCategory(std::string_view name);

inline bool IsCheckedCategory(ToneCategory c) {
  return c == ToneCategory::kT4 || c == ToneCategory::kT5;
}

struct ToneValue {
  ToneCategory category = ToneCategory::kT1;
  std::string contour;  // Chao digits
  bool checked = false;

  static ToneValue Citation(ToneCategory c);

  bool operator==(const ToneValue&) const = default;
};

// Citation contour plus accepted alternative transcriptions (T1 also 51,
// T2 also 34).
const std::vector<std::string>& CitationContours(ToneCategory c);

// True for 1-3 digits, each in 1..5.
bool IsChaoContour(std::string_view digits);

// A romanised syllable split into its letters and an optional trailing tone
// digit, e.g. "se1" -> {"se", 1}.
struct SyllableSpelling {
  std::string letters;
  std::optional<int> digit;
};

std::optional<SyllableSpelling> SplitToneDigit(std::string_view syllable);

// Voiced-class initials: b d g v z zh j dz gh m n l ng gn w y.
bool HasVoicedInitial(std::string_view letters);

// Tone from the romanisation's shape: a final q marks a checked syllable
// (T4 voiceless, T5 voiced); open syllables are T1 (voiceless) or T3
// (voiced). A trailing digit 1-5 overrides the derivation. Throws
// ToneUnderivable for malformed syllables and for digits that contradict
// the coda.
ToneValue AssignTone(std::string_view syllable);

// Per-character tone numbers for syllables whose category is not
// recoverable from spelling alone (e.g. yin-qu syllables, T2). Applied only
// when the lexicon spelling carries no digit.
class ToneMarks {
 public:
  ToneMarks() = default;
  static ToneMarks Load(const std::string& path,
                        std::vector<RowError>* errors = nullptr);
  static ToneMarks Parse(std::istream& in,
                         std::vector<RowError>* errors = nullptr);

  void Set(char32_t c, int digit) { marks_[c] = digit; }
  std::optional<int> Find(char32_t c) const;
  std::size_t size() const { return marks_.size(); }

 private:
  std::unordered_map<char32_t, int> marks_;
};

}  // namespace zaonhe

#endif  // ZAONHE_TONE_H_

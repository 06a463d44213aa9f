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

#ifndef ZAONHE_PHONEMIZER_H_
#define ZAONHE_PHONEMIZER_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zaonhe/lexicon.h"
#include "zaonhe/segmenter.h"
#include "zaonhe/tone.h"

namespace zaonhe {

enum class SyllableSource { kLexicon, kCharFallback };

struct RomanSyllable {
  std::string text;                   // letters only
  std::optional<int> explicit_digit;  // tone digit written in the lexicon
  ToneValue tone;
  SyllableSource source = SyllableSource::kLexicon;

  // Spelling as written in the lexicon, digit included.
  std::string Spelled() const;

  bool operator==(const RomanSyllable&) const = default;
};

// How two adjacent syllables of a token are joined: inside one lexicon
// pronunciation (known) or across separately romanised pieces (inferred).
enum class Link { kKnown, kInferred };

struct RomanisedWord {
  std::vector<RomanSyllable> syllables;
  std::vector<Link> links;  // syllables.size() - 1 entries
};

// Uses the token's own lexicon romanisation when present. Otherwise the token
// is covered left to right by the longest romanised lexicon words, falling
// back to single characters. Throws UnromanisableCharacter (position is the
// code-point offset in the segmented text) or ToneUnderivable.
RomanisedWord Romanise(const Token& token, const Lexicon& lex,
                       const ToneMarks& marks = {});

struct IpaSyllable {
  std::vector<std::string> segments;
  ToneValue tone;

  std::string Joined() const;

  bool operator==(const IpaSyllable&) const = default;
};

// Romanisation grapheme -> IPA symbols, applied by longest match.
class IpaTable {
 public:
  IpaTable() = default;
  explicit IpaTable(
      std::vector<std::pair<std::string, std::vector<std::string>>> rows);

  static IpaTable Load(const std::string& path,
                       std::vector<RowError>* errors = nullptr);
  static IpaTable Parse(std::istream& in,
                        std::vector<RowError>* errors = nullptr);

  // Throws MappingGap naming the first unmatched remainder.
  std::vector<std::string> Convert(std::string_view letters) const;
  IpaSyllable ToIpa(const RomanSyllable& syllable) const;

  // Greedy longest-match split of an IPA string over the table's symbol
  // inventory. Throws MappingGap when a position matches no symbol.
  std::vector<std::string> Retokenize(std::string_view ipa) const;

  const std::set<std::string>& inventory() const { return inventory_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> rows_;
  std::size_t max_grapheme_ = 0;
  std::set<std::string> inventory_;
  std::size_t max_symbol_ = 0;
};

}  // namespace zaonhe

#endif  // ZAONHE_PHONEMIZER_H_

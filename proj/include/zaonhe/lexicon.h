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

#ifndef ZAONHE_LEXICON_H_
#define ZAONHE_LEXICON_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zaonhe/errors.h"

namespace zaonhe {

// A headword (traditional characters, NFC) with its romanised syllables and
// frequency weight. Romanisation is empty when the source had none.
struct LexiconEntry {
  std::string headword;
  std::vector<std::string> romanisation;
  std::uint64_t weight = 0;

  bool operator==(const LexiconEntry&) const = default;
};

struct PrefixMatch {
  std::size_t end = 0;    // one past the last matched code point
  std::size_t entry = 0;  // index into the owning table
};

// Code-point trie answering "which stored words start at position i".
class PrefixIndex {
 public:
  PrefixIndex();

  void Insert(std::u32string_view word, std::size_t id);

  // All stored words that are prefixes of text[pos..], shortest first.
  std::vector<PrefixMatch> MatchesAt(std::u32string_view text,
                                     std::size_t pos) const;

 private:
  struct Node {
    std::unordered_map<char32_t, std::uint32_t> next;
    std::int64_t id = -1;
  };
  std::vector<Node> nodes_;
};

// Immutable headword-keyed lexicon with a prefix index over headwords.
class Lexicon {
 public:
  Lexicon() = default;

  // Duplicate headwords keep the maximum weight and the first non-empty
  // romanisation; entries keep first-occurrence order.
  explicit Lexicon(std::vector<LexiconEntry> entries);

  const LexiconEntry* Lookup(std::string_view word) const;

  std::vector<PrefixMatch> MatchesAt(std::u32string_view text,
                                     std::size_t pos) const {
    return prefix_.MatchesAt(text, pos);
  }

  const LexiconEntry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::uint64_t total_weight() const { return total_weight_; }

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_headword_;
  PrefixIndex prefix_;
  std::uint64_t total_weight_ = 0;
};

enum class LexiconFormat {
  kBase,     // weight column required
  kOverlay,  // empty weight column takes the default overlay weight
};

inline constexpr std::uint64_t kDefaultOverlayWeight = 1000;

struct LexiconLoadResult {
  Lexicon lexicon;
  std::vector<RowError> errors;
};

LexiconLoadResult ParseLexicon(std::istream& in, LexiconFormat format,
                               std::uint64_t default_weight =
                                   kDefaultOverlayWeight);

// Throws IoError if the file cannot be opened.
LexiconLoadResult LoadLexicon(const std::string& path, LexiconFormat format,
                              std::uint64_t default_weight =
                                  kDefaultOverlayWeight);

// Writes the TSV form read by ParseLexicon.
void WriteLexicon(std::ostream& out, const Lexicon& lexicon);

// Overlay headwords are inserted, or replace the base weight (and the base
// romanisation when the overlay has one).
Lexicon MergeWeights(const Lexicon& base, const Lexicon& overlay);

}  // namespace zaonhe

#endif  // ZAONHE_LEXICON_H_

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

#ifndef ZAONHE_SANDHI_H_
#define ZAONHE_SANDHI_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zaonhe/phonemizer.h"
#include "zaonhe/segmenter.h"
#include "zaonhe/tone.h"

namespace zaonhe {

// A token with its phonemisation. Punctuation tokens carry no syllables.
struct WordAnalysis {
  Token token;
  RomanisedWord roman;
  std::vector<IpaSyllable> ipa;
};

// Contiguous syllables realised under one left-dominant pattern. Interior
// boundaries are the offsets (within the domain) where an attached clitic
// token starts.
struct LDDomain {
  std::size_t first_syllable = 0;  // index among non-punctuation syllables
  std::vector<IpaSyllable> syllables;
  std::size_t head_token = 0;
  std::vector<std::size_t> boundaries;
  bool has_clitic = false;
  std::optional<int> rd_group;  // grouping label only; never realised

  std::size_t size() const { return syllables.size(); }
};

struct SurfaceTone {
  std::string pitch;       // Chao digits
  bool shortened = false;  // checked syllable, nucleus shortening expected

  bool operator==(const SurfaceTone&) const = default;
};

// (initial citation category, domain length) -> surface pitch targets.
class SandhiPatternTable {
 public:
  static constexpr std::size_t kDefaultMaxLength = 8;

  using Key = std::pair<ToneCategory, std::size_t>;

  // Throws ConfigError listing every missing (category, length) row, or when
  // a length-1 row differs from the citation contour.
  SandhiPatternTable(std::map<Key, std::vector<std::string>> rows,
                     std::size_t max_length = kDefaultMaxLength);

  // Rows: category<TAB>length<TAB>space-separated pitch targets.
  static SandhiPatternTable Parse(std::istream& in,
                                  std::size_t max_length = kDefaultMaxLength);
  static SandhiPatternTable Load(const std::string& path,
                                 std::size_t max_length = kDefaultMaxLength);

  // Throws DomainTooLong when length exceeds max_length().
  const std::vector<std::string>& Row(ToneCategory category,
                                      std::size_t length) const;

  std::size_t max_length() const { return max_length_; }

 private:
  std::map<Key, std::vector<std::string>> rows_;
  std::size_t max_length_;
};

// Clitic tokens join the preceding domain. A clitic may carry a cliticised
// pronunciation that replaces its own syllables once attached.
class CliticSet {
 public:
  void Add(std::string text, std::vector<IpaSyllable> cliticised = {});
  bool Contains(const std::string& text) const;
  // Empty when the clitic keeps its own pronunciation.
  const std::vector<IpaSyllable>& CliticisedForm(const std::string& text) const;
  std::size_t size() const { return forms_.size(); }

 private:
  std::map<std::string, std::vector<IpaSyllable>> forms_;
};

// One domain per non-punctuation token; clitics attach to the open domain;
// punctuation closes it.
std::vector<LDDomain> MarkLdDomains(std::span<const WordAnalysis> words,
                                    const CliticSet& clitics);

// Surface tones from the row of the first syllable's category. Throws
// DomainTooLong.
std::vector<SurfaceTone> ApplyLd(const LDDomain& domain,
                                 const SandhiPatternTable& table);

enum class OversizePolicy {
  kSplit,  // split at the rightmost interior token boundary, else at max
  kError,
};

struct AnnotatedUtterance {
  std::vector<WordAnalysis> words;
  std::vector<LDDomain> domains;
  std::vector<SurfaceTone> surface;  // one per syllable, in order
};

AnnotatedUtterance Annotate(std::vector<WordAnalysis> words,
                            const CliticSet& clitics,
                            const SandhiPatternTable& table,
                            OversizePolicy policy = OversizePolicy::kSplit);

// "[zã2 he4] 。" style rendering with plain Chao digits.
std::string RenderContour(const AnnotatedUtterance& utterance);

// Boundary positions count syllables before the boundary.
struct DomainDiff {
  std::vector<std::size_t> inserted;  // present in b only
  std::vector<std::size_t> deleted;   // present in a only
  std::vector<std::size_t> rd_inserted;
  std::vector<std::size_t> rd_deleted;

  bool empty() const {
    return inserted.empty() && deleted.empty() && rd_inserted.empty() &&
           rd_deleted.empty();
  }
};

// Throws IncomparableAnalyses when the two analyses cover different syllable
// sequences.
DomainDiff DiffDomains(std::span<const LDDomain> a, std::span<const LDDomain> b);

}  // namespace zaonhe

#endif  // ZAONHE_SANDHI_H_

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

#include "zaonhe/emitter.h"

#include "zaonhe/utf8.h"

namespace zaonhe {

std::string RenderSegmentation(std::span<const WordAnalysis> words,
                               SegmentationScript script) {
  std::string out;
  auto append = [&out](std::string_view piece) {
    if (!out.empty()) out += ' ';
    out += piece;
  };
  for (const WordAnalysis& w : words) {
    if (w.token.origin == TokenOrigin::kPunctuation) {
      std::string_view text = Trim(w.token.text);
      if (!text.empty()) append(text);
      continue;
    }
    const auto& syls = w.roman.syllables;
    std::string word;
    for (std::size_t i = 0; i < syls.size(); ++i) {
      if (i) word += w.roman.links[i - 1] == Link::kKnown ? '-' : '=';
      if (script == SegmentationScript::kRoman || i >= w.ipa.size()) {
        word += syls[i].Spelled();
      } else {
        word += w.ipa[i].Joined();
        if (syls[i].explicit_digit) word += std::to_string(*syls[i].explicit_digit);
      }
    }
    if (!word.empty()) append(word);
  }
  return out;
}

SymbolSequence InterleaveBlank(const std::vector<std::string>& symbols) {
  SymbolSequence seq;
  seq.blank_interleaved = true;
  seq.symbols.reserve(2 * symbols.size() + 1);
  seq.symbols.emplace_back(kBlankSymbol);
  for (const auto& s : symbols) {
    seq.symbols.push_back(s);
    seq.symbols.emplace_back(kBlankSymbol);
  }
  return seq;
}

SymbolSequence EmitSymbols(const AnnotatedUtterance& utt,
                           bool interleave_blank) {
  std::vector<std::string> symbols;
  std::size_t syllable = 0;
  std::size_t d = 0;
  for (const WordAnalysis& w : utt.words) {
    if (w.token.origin == TokenOrigin::kPunctuation) {
      if (!Trim(w.token.text).empty()) symbols.emplace_back(kWordBoundarySymbol);
      continue;
    }
    for (std::size_t k = 0; k < w.ipa.size(); ++k, ++syllable) {
      while (d < utt.domains.size() &&
             syllable >= utt.domains[d].first_syllable + utt.domains[d].size()) {
        ++d;
      }
      if (d == utt.domains.size()) continue;
      const LDDomain& dom = utt.domains[d];
      std::size_t rel = syllable - dom.first_syllable;
      if (rel == 0) symbols.emplace_back(kDomainOpenSymbol);
      const auto& segs = dom.syllables[rel].segments;
      symbols.insert(symbols.end(), segs.begin(), segs.end());
      if (syllable < utt.surface.size()) {
        symbols.push_back(utt.surface[syllable].pitch);
      }
      if (rel + 1 == dom.size()) symbols.emplace_back(kDomainCloseSymbol);
    }
  }
  if (interleave_blank) return InterleaveBlank(symbols);
  return {std::move(symbols), false};
}

}  // namespace zaonhe

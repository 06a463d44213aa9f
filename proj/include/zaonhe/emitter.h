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

#ifndef ZAONHE_EMITTER_H_
#define ZAONHE_EMITTER_H_

#include <span>
#include <string>
#include <vector>

#include "zaonhe/sandhi.h"

namespace zaonhe {

inline constexpr char kBlankSymbol[] = "_";
inline constexpr char kWordBoundarySymbol[] = "#";
inline constexpr char kDomainOpenSymbol[] = "⟨";
inline constexpr char kDomainCloseSymbol[] = "⟩";

enum class SegmentationScript { kIpa, kRoman };

// Tokens separated by spaces; syllables joined by '-' inside one lexicon
// pronunciation and by '=' across separately romanised pieces. Tone digits
// written in the lexicon are kept.
std::string RenderSegmentation(std::span<const WordAnalysis> words,
                               SegmentationScript script =
                                   SegmentationScript::kIpa);

struct SymbolSequence {
  std::vector<std::string> symbols;
  bool blank_interleaved = false;
};

// Per syllable: IPA segments, then the surface pitch as one symbol. Domains
// are wrapped in ⟨ ⟩ and punctuation becomes '#'. With interleave_blank a
// BLANK goes between every pair of symbols and at both ends (2n+1 symbols).
SymbolSequence EmitSymbols(const AnnotatedUtterance& utterance,
                           bool interleave_blank);

SymbolSequence InterleaveBlank(const std::vector<std::string>& symbols);

}  // namespace zaonhe

#endif  // ZAONHE_EMITTER_H_

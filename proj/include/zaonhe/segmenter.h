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

#ifndef ZAONHE_SEGMENTER_H_
#define ZAONHE_SEGMENTER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zaonhe/hmm.h"
#include "zaonhe/lexicon.h"

namespace zaonhe {

enum class TokenOrigin {
  kKnownWord,
  kInferredWord,
  kSingleCharFallback,
  kPunctuation,
};

const char* TokenOriginName(TokenOrigin origin);

// A maximal lexical unit. start/end are code-point offsets into the
// segmented text; concatenated token texts reproduce that text exactly.
struct Token {
  std::string text;
  TokenOrigin origin = TokenOrigin::kKnownWord;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct DagEdge {
  std::size_t end = 0;
  double logp = 0.0;
};

// edges[i] holds every word starting at i, ordered by increasing end.
struct SegmentationDag {
  std::size_t n = 0;
  std::vector<std::vector<DagEdge>> edges;
};

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

// log(1 / total_weight); 0 for an empty lexicon.
double OovLogProb(const Lexicon& lex);

// Multi-character words with zero weight contribute no edge. The
// single-character edge uses the character's own weight when positive,
// otherwise `oov_logp` (default OovLogProb(lex)).
SegmentationDag BuildDag(std::u32string_view text, const Lexicon& lex,
                         std::optional<double> oov_logp = std::nullopt);

// Maximum-probability path through the DAG. On equal scores the longer edge
// wins at the leftmost point where the candidate paths diverge.
std::vector<Span> MaxProbSegment(const SegmentationDag& dag);

// Most probable legal BMES labelling; ties resolve towards the lower state in
// B<M<E<S order at every back-pointer and at the final state.
std::vector<BmesState> ViterbiStates(std::u32string_view span,
                                     const HmmParams& hmm);

// Decodes ViterbiStates into B..E groups (inferred words) and S singletons
// (single-character fallback). Offsets are relative to `span`.
std::vector<Token> ViterbiLabel(std::u32string_view span,
                                const HmmParams& hmm);

struct SegmentOptions {
  bool use_hmm = true;
  std::optional<double> oov_logp;
};

// Non-Han runs become punctuation tokens; Han runs are DAG-segmented and,
// with use_hmm, maximal runs of single-character pieces are relabelled by
// the HMM.
std::vector<Token> Segment(std::string_view text, const Lexicon& lex,
                           const HmmParams& hmm,
                           const SegmentOptions& options = {});

}  // namespace zaonhe

#endif  // ZAONHE_SEGMENTER_H_

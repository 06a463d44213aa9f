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

#include "zaonhe/segmenter.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "zaonhe/utf8.h"

namespace zaonhe {

const char* TokenOriginName(TokenOrigin origin) {
  switch (origin) {
    case TokenOrigin::kKnownWord: return "known";
    case TokenOrigin::kInferredWord: return "inferred";
    case TokenOrigin::kSingleCharFallback: return "fallback";
    case TokenOrigin::kPunctuation: return "punct";
  }
  return "?";
}

double OovLogProb(const Lexicon& lex) {
  if (lex.total_weight() == 0) return 0.0;
  return -std::log(static_cast<double>(lex.total_weight()));
}

SegmentationDag BuildDag(std::u32string_view text, const Lexicon& lex,
                         std::optional<double> oov_logp) {
  const double floor = oov_logp.value_or(OovLogProb(lex));
  const double total = static_cast<double>(lex.total_weight());
  SegmentationDag dag;
  dag.n = text.size();
  dag.edges.resize(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto& out = dag.edges[i];
    out.push_back({i + 1, floor});
    for (const PrefixMatch& m : lex.MatchesAt(text, i)) {
      std::uint64_t w = lex.entry(m.entry).weight;
      if (w == 0) continue;
      double logp = std::log(static_cast<double>(w) / total);
      if (m.end == i + 1) {
        out.front().logp = logp;
      } else {
        out.push_back({m.end, logp});
      }
    }
  }
  return dag;
}


std::vector<Span> MaxProbSegment(const SegmentationDag& dag) {
  std::vector<double> best(dag.n + 1, 0.0);
  std::vector<std::size_t> next(dag.n + 1, dag.n);
  for (std::size_t i = dag.n; i-- > 0;) {
    bool have = false;
    for (const DagEdge& e : dag.edges[i]) {
      double v = e.logp + best[e.end];
      if (!have || v > best[i] + kScoreTieTolerance ||
          (v >= best[i] - kScoreTieTolerance && e.end > next[i])) {
        best[i] = v;
        next[i] = e.end;
        have = true;
      }
    }
  }
  std::vector<Span> spans;
  for (std::size_t i = 0; i < dag.n; i = next[i]) spans.push_back({i, next[i]});
  return spans;
}

std::vector<BmesState> ViterbiStates(std::u32string_view span,
                                     const HmmParams& hmm) {
  constexpr int kN = kNumBmesStates;
  const std::size_t n = span.size();
  if (n == 0) return {};
  auto state = [](int k) { return static_cast<BmesState>(k); };

  std::vector<std::array<double, kN>> delta(n);
  std::vector<std::array<int, kN>> back(n);
  for (int s = 0; s < kN; ++s) {
    delta[0][s] = hmm.start(state(s)) + hmm.emit(state(s), span[0]);
    back[0][s] = -1;
  }
  for (std::size_t t = 1; t < n; ++t) {
    for (int s = 0; s < kN; ++s) {
      std::array<double, kN> via;
      double best = kNegInf;
      for (int p = 0; p < kN; ++p) {
        via[p] = IsLegalTransition(state(p), state(s))
                     ? delta[t - 1][p] + hmm.trans(state(p), state(s))
                     : kNegInf;
        best = std::max(best, via[p]);
      }
      int arg = 0;
      while (arg + 1 < kN && !(via[arg] >= best - kScoreTieTolerance)) ++arg;
      delta[t][s] = best + hmm.emit(state(s), span[t]);
      back[t][s] = arg;
    }
  }

  const int e = static_cast<int>(BmesState::kE);
  const int s = static_cast<int>(BmesState::kS);
  if (delta[n - 1][e] == kNegInf && delta[n - 1][s] == kNegInf) {
    // No legal labelling with positive probability: keep every character
    // on its own.
    return std::vector<BmesState>(n, BmesState::kS);
  }
  int cur = delta[n - 1][s] > delta[n - 1][e] + kScoreTieTolerance ? s : e;
  std::vector<BmesState> states(n);
  for (std::size_t t = n; t-- > 0;) {
    states[t] = state(cur);
    cur = back[t][cur];
  }
  return states;
}

std::vector<Token> ViterbiLabel(std::u32string_view span,
                                const HmmParams& hmm) {
  std::vector<Token> tokens;
  auto states = ViterbiStates(span, hmm);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    BmesState st = states[i];
    if (st == BmesState::kB) {
      begin = i;
    } else if (st == BmesState::kE) {
      tokens.push_back({EncodeUtf8(span.substr(begin, i + 1 - begin)),
                        TokenOrigin::kInferredWord, begin, i + 1});
    } else if (st == BmesState::kS) {
      tokens.push_back({EncodeUtf8(span.substr(i, 1)),
                        TokenOrigin::kSingleCharFallback, i, i + 1});
    }
  }
  return tokens;
}

namespace {

void SegmentHanRun(std::u32string_view text, std::size_t offset,
                   const Lexicon& lex, const HmmParams& hmm,
                   const SegmentOptions& options, std::vector<Token>& out) {
  auto spans = MaxProbSegment(BuildDag(text, lex, options.oov_logp));

  auto single = [&](std::size_t i) {
    std::string ch = EncodeUtf8(text.substr(i, 1));
    TokenOrigin origin = lex.Lookup(ch) ? TokenOrigin::kKnownWord
                                        : TokenOrigin::kSingleCharFallback;
    return Token{std::move(ch), origin, offset + i, offset + i + 1};
  };

  std::size_t k = 0;
  while (k < spans.size()) {
    const Span& sp = spans[k];
    if (sp.end - sp.start > 1) {
      out.push_back({EncodeUtf8(text.substr(sp.start, sp.end - sp.start)),
                     TokenOrigin::kKnownWord, offset + sp.start,
                     offset + sp.end});
      ++k;
      continue;
    }
    std::size_t run_end = k;
    while (run_end < spans.size() &&
           spans[run_end].end - spans[run_end].start == 1) {
      ++run_end;
    }
    std::size_t from = spans[k].start;
    std::size_t to = spans[run_end - 1].end;
    if (!options.use_hmm || to - from == 1) {
      for (std::size_t i = from; i < to; ++i) out.push_back(single(i));
    } else {
      for (Token& t : ViterbiLabel(text.substr(from, to - from), hmm)) {
        if (t.end - t.start == 1) {
          out.push_back(single(from + t.start));
        } else {
          t.start += offset + from;
          t.end += offset + from;
          out.push_back(std::move(t));
        }
      }
    }
    k = run_end;
  }
}

}  // namespace

std::vector<Token> Segment(std::string_view text, const Lexicon& lex,
                           const HmmParams& hmm,
                           const SegmentOptions& options) {
  std::vector<Token> tokens;
  std::u32string chars = DecodeUtf8(text);
  std::size_t i = 0;
  while (i < chars.size()) {
    bool han = IsHan(chars[i]);
    std::size_t j = i + 1;
    while (j < chars.size() && IsHan(chars[j]) == han) ++j;
    std::u32string_view run(chars.data() + i, j - i);
    if (han) {
      SegmentHanRun(run, i, lex, hmm, options, tokens);
    } else {
      tokens.push_back({EncodeUtf8(run), TokenOrigin::kPunctuation, i, j});
    }
    i = j;
  }
  return tokens;
}

}  // namespace zaonhe

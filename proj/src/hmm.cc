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

#include "zaonhe/hmm.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "zaonhe/errors.h"
#include "zaonhe/utf8.h"

namespace zaonhe {

char BmesLetter(BmesState s) { return "BMES"[static_cast<int>(s)]; }

bool IsLegalTransition(BmesState from, BmesState to) {
  using S = BmesState;
  switch (from) {
    case S::kB:
    case S::kM:
      return to == S::kM || to == S::kE;
    case S::kE:
    case S::kS:
      return to == S::kB || to == S::kS;
  }
  return false;
}

HmmParams::HmmParams() {
  start_.fill(kNegInf);
  for (auto& row : trans_) row.fill(kNegInf);
}

double HmmParams::emit(BmesState s, char32_t c) const {
  auto it = emit_.find(c);
  return it == emit_.end() ? emit_floor_ : it->second[Index(s)];
}

namespace {

void CheckLogProb(double logp) {
  if (std::isnan(logp) || logp > 0.0) {
    throw ConfigError("log-probability must be <= 0, got " +
                      std::to_string(logp));
  }
}

}  // namespace

void HmmParams::set_start(BmesState s, double logp) {
  CheckLogProb(logp);
  if ((s == BmesState::kM || s == BmesState::kE) && logp != kNegInf) {
    throw ConfigError("a word cannot start in state M or E");
  }
  start_[Index(s)] = logp;
}

void HmmParams::set_trans(BmesState from, BmesState to, double logp) {
  CheckLogProb(logp);
  if (!IsLegalTransition(from, to) && logp != kNegInf) {
    throw ConfigError(std::string("illegal transition ") + BmesLetter(from) +
                      "->" + BmesLetter(to));
  }
  trans_[Index(from)][Index(to)] = logp;
}

void HmmParams::set_emit(BmesState s, char32_t c, double logp) {
  CheckLogProb(logp);
  auto [it, inserted] = emit_.try_emplace(c);
  if (inserted) it->second.fill(emit_floor_);
  it->second[Index(s)] = logp;
}

void HmmParams::set_emit_floor(double logp) {
  CheckLogProb(logp);
  emit_floor_ = logp;
}

namespace {

std::optional<BmesState> ParseState(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'B': return BmesState::kB;
    case 'M': return BmesState::kM;
    case 'E': return BmesState::kE;
    case 'S': return BmesState::kS;
  }
  return std::nullopt;
}

double ParseLogProb(std::string_view s) {
  if (s == "-inf") return kNegInf;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

HmmParams HmmParams::Parse(std::istream& in) {
  HmmParams params;
  enum class Section { kNone, kStart, kTransition, kEmission };
  Section section = Section::kNone;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = Trim(line);
    if (body.empty() || body[0] == '#') continue;
    try {
      if (body == "[start]") {
        section = Section::kStart;
        continue;
      }
      if (body == "[transition]") {
        section = Section::kTransition;
        continue;
      }
      if (body == "[emission]") {
        section = Section::kEmission;
        continue;
      }
      auto f = SplitWords(body);
      switch (section) {
        case Section::kNone:
          throw ConfigError("entry outside of a section");
        case Section::kStart: {
          auto s = f.size() == 2 ? ParseState(f[0]) : std::nullopt;
          if (!s) throw ConfigError("expected: STATE LOGP");
          params.set_start(*s, ParseLogProb(f[1]));
          break;
        }
        case Section::kTransition: {
          auto a = f.size() == 3 ? ParseState(f[0]) : std::nullopt;
          auto b = f.size() == 3 ? ParseState(f[1]) : std::nullopt;
          if (!a || !b) throw ConfigError("expected: FROM TO LOGP");
          params.set_trans(*a, *b, ParseLogProb(f[2]));
          break;
        }
        case Section::kEmission: {
          if (f.size() == 2 && f[0] == "floor") {
            if (!params.emit_.empty()) {
              throw ConfigError("floor must precede emission entries");
            }
            params.set_emit_floor(ParseLogProb(f[1]));
            break;
          }
          auto s = f.size() == 3 ? ParseState(f[1]) : std::nullopt;
          std::u32string ch = f.size() == 3 ? DecodeUtf8(NormalizeNfc(f[0]))
                                            : std::u32string();
          if (!s || ch.size() != 1) {
            throw ConfigError("expected: CHAR STATE LOGP");
          }
          params.set_emit(*s, ch[0], ParseLogProb(f[2]));
          break;
        }
      }
    } catch (const Error& e) {
      throw ConfigError("HMM parameters line " + std::to_string(line_no) +
                        ": " + e.what());
    }
  }
  return params;
}

HmmParams HmmParams::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open HMM parameter file: " + path);
  return Parse(in);
}

}  // namespace zaonhe

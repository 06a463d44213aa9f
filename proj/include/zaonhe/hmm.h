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

#ifndef ZAONHE_HMM_H_
#define ZAONHE_HMM_H_

#include <array>
#include <cstdint>
#include <istream>
#include <limits>
#include <string>
#include <unordered_map>

namespace zaonhe {

// Begin / middle / end of a multi-character word, or a single-character word.
enum class BmesState : std::uint8_t { kB = 0, kM = 1, kE = 2, kS = 3 };

inline constexpr int kNumBmesStates = 4;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Log scores closer than this count as ties in both the segmentation DP and
// Viterbi. Equal products reached through different summation orders can
// differ in the last ulp.
inline constexpr double kScoreTieTolerance = 1e-9;

char BmesLetter(BmesState s);

// B->B, B->S, M->B, M->S, E->M, E->E, S->M and S->E can never occur.
bool IsLegalTransition(BmesState from, BmesState to);

// Natural-log HMM parameters for BMES word labelling. Anything not set is
// -inf, except emissions, which fall back to the emission floor.
class HmmParams {
 public:
  HmmParams();

  // File format: sections [start], [transition], [emission]; see
  // data/hmm_default.txt. Throws IoError / ConfigError.
  static HmmParams Load(const std::string& path);
  static HmmParams Parse(std::istream& in);

  double start(BmesState s) const { return start_[Index(s)]; }
  double trans(BmesState from, BmesState to) const {
    return trans_[Index(from)][Index(to)];
  }
  double emit(BmesState s, char32_t c) const;
  double emit_floor() const { return emit_floor_; }

  // Setters reject positive log-probabilities, finite values on illegal
  // transitions, and finite start values for M or E.
  void set_start(BmesState s, double logp);
  void set_trans(BmesState from, BmesState to, double logp);
  void set_emit(BmesState s, char32_t c, double logp);
  void set_emit_floor(double logp);

 private:
  static int Index(BmesState s) { return static_cast<int>(s); }

  std::array<double, kNumBmesStates> start_;
  std::array<std::array<double, kNumBmesStates>, kNumBmesStates> trans_;
  std::unordered_map<char32_t, std::array<double, kNumBmesStates>> emit_;
  double emit_floor_ = -20.0;
};

}  // namespace zaonhe

#endif  // ZAONHE_HMM_H_

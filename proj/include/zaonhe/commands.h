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

#ifndef ZAONHE_COMMANDS_H_
#define ZAONHE_COMMANDS_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <utility>

#include "zaonhe/mos.h"
#include "zaonhe/pipeline.h"

namespace zaonhe {

enum class LineCommand { kSegment, kPhonemize, kSandhi, kPipeline };

struct OutputOptions {
  bool json = false;          // full structured record per line
  bool contour_only = false;  // Chao-letter rendering only
};

// One output line per input line. A failing line writes "line N: stage:
// message" to `diag` and an empty line (or an error record in JSON mode) to
// `out`, then processing continues. Returns the number of failed lines.
std::size_t RunLineCommand(LineCommand command, std::istream& in,
                           std::ostream& out, std::ostream& diag,
                           const Resources& res,
                           const PipelineOptions& options,
                           const OutputOptions& output);

struct EvalOptions {
  Grouping grouping = Grouping::kSpeaker;
  std::optional<std::pair<int, int>> test;  // speakers to compare
  bool json = false;
};

// "A:B" with both in 1..3.
std::optional<std::pair<int, int>> ParseSpeakerPair(std::string_view text);

// Prints the MOS table (and p-values when requested). Returns 0, or 1 when
// a requested test lacks data.
int RunEval(const RatingsLoadResult& ratings, const EvalOptions& options,
            std::ostream& out, std::ostream& diag);

}  // namespace zaonhe

#endif  // ZAONHE_COMMANDS_H_

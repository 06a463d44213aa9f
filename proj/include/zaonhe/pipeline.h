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

#ifndef ZAONHE_PIPELINE_H_
#define ZAONHE_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "zaonhe/char_mapping.h"
#include "zaonhe/config.h"
#include "zaonhe/emitter.h"
#include "zaonhe/hmm.h"
#include "zaonhe/lexicon.h"
#include "zaonhe/phonemizer.h"
#include "zaonhe/sandhi.h"
#include "zaonhe/tone.h"

namespace zaonhe {

// Loaded, immutable tables shared by every pipeline run.
struct Resources {
  Lexicon lexicon;  // base merged with overlay
  CharMapping mapping;
  HmmParams hmm;
  ToneMarks marks;
  IpaTable ipa;
  SandhiPatternTable sandhi;
  CliticSet clitics;
  std::vector<std::string> warnings;  // rejected data rows

  // Throws ConfigError / IoError.
  static Resources Load(const Config& config);
};

struct PipelineOptions {
  bool use_hmm = true;
  bool interleave_blank = false;
  OversizePolicy oversize_policy = OversizePolicy::kSplit;
  std::optional<double> oov_logp;

  static PipelineOptions FromConfig(const Config& config);
};

struct PipelineRecord {
  std::string input;
  std::string traditional;
  AnnotatedUtterance utterance;
  std::string segmentation;  // IPA script
  std::string romanised;     // romanised script
  std::string contour;
  SymbolSequence symbols;
};

// Throws StageError naming the failing stage (normalize, segment, romanise,
// ipa, sandhi).
PipelineRecord RunPipeline(std::string_view text, const Resources& res,
                           const PipelineOptions& options);

// Stops after phonemisation; no sandhi is applied.
std::vector<WordAnalysis> Phonemise(std::string_view traditional,
                                    const Resources& res,
                                    const PipelineOptions& options);

nlohmann::ordered_json ToJson(const PipelineRecord& record);

}  // namespace zaonhe

#endif  // ZAONHE_PIPELINE_H_

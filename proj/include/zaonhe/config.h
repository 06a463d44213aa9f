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

#ifndef ZAONHE_CONFIG_H_
#define ZAONHE_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zaonhe/sandhi.h"

namespace zaonhe {

// Everything the pipeline reads. Paths in a config file are relative to
// the file's directory.
struct Config {
  std::string base_lexicon;
  std::string overlay_lexicon;  // optional
  std::string char_mapping;
  std::string hmm;
  std::string ipa_table;
  std::string sandhi_table;
  std::string tone_marks;  // optional
  // clitic text -> cliticised romanisation ("" keeps the clitic's own form)
  std::vector<std::pair<std::string, std::string>> clitics;
  std::uint64_t overlay_default_weight = 1000;
  std::size_t domain_max_length = SandhiPatternTable::kDefaultMaxLength;
  bool use_hmm = true;
  bool interleave_blank = false;
  OversizePolicy oversize_policy = OversizePolicy::kSplit;
  std::optional<double> oov_logp;
};

// Throws ConfigError for unknown keys, bad values or missing files.
Config LoadConfig(const std::string& path);

// data/config.json from the source tree.
std::string DefaultConfigPath();

void ValidateConfig(const Config& config);

}  // namespace zaonhe

#endif  // ZAONHE_CONFIG_H_

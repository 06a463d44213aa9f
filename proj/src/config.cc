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

#include "zaonhe/config.h"

#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace zaonhe {

namespace fs = std::filesystem;

std::string DefaultConfigPath() {
  return (fs::path(ZAONHE_DATA_DIR) / "config.json").string();
}

void ValidateConfig(const Config& c) {
  auto require = [](const std::string& key, const std::string& path,
                    bool optional) {
    if (path.empty()) {
      if (optional) return;
      throw ConfigError("config: '" + key + "' is required");
    }
    if (!fs::is_regular_file(path)) {
      throw ConfigError("config: '" + key + "' file not found: " + path);
    }
  };
  require("base_lexicon", c.base_lexicon, false);
  require("overlay_lexicon", c.overlay_lexicon, true);
  require("char_mapping", c.char_mapping, false);
  require("hmm", c.hmm, false);
  require("ipa_table", c.ipa_table, false);
  require("sandhi_table", c.sandhi_table, false);
  require("tone_marks", c.tone_marks, true);
  if (c.domain_max_length == 0) {
    throw ConfigError("config: domain_max_length must be positive");
  }
  if (c.overlay_default_weight == 0) {
    throw ConfigError("config: overlay_default_weight must be positive");
  }
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config " + path + ": not an object");

  const fs::path dir = fs::path(path).parent_path();
  auto resolve = [&dir](const std::string& p) {
    if (p.empty()) return p;
    fs::path fp(p);
    return (fp.is_absolute() ? fp : dir / fp).lexically_normal().string();
  };

  Config c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "base_lexicon") {
        c.base_lexicon = resolve(value.get<std::string>());
      } else if (key == "overlay_lexicon") {
        c.overlay_lexicon = resolve(value.get<std::string>());
      } else if (key == "char_mapping") {
        c.char_mapping = resolve(value.get<std::string>());
      } else if (key == "hmm") {
        c.hmm = resolve(value.get<std::string>());
      } else if (key == "ipa_table") {
        c.ipa_table = resolve(value.get<std::string>());
      } else if (key == "sandhi_table") {
        c.sandhi_table = resolve(value.get<std::string>());
      } else if (key == "tone_marks") {
        c.tone_marks = resolve(value.get<std::string>());
      } else if (key == "clitics") {
        for (const auto& [text, form] : value.items()) {
          c.clitics.emplace_back(text, form.get<std::string>());
        }
      } else if (key == "overlay_default_weight") {
        c.overlay_default_weight = value.get<std::uint64_t>();
      } else if (key == "domain_max_length") {
        c.domain_max_length = value.get<std::size_t>();
      } else if (key == "use_hmm") {
        c.use_hmm = value.get<bool>();
      } else if (key == "interleave_blank") {
        c.interleave_blank = value.get<bool>();
      } else if (key == "oversize_policy") {
        auto p = value.get<std::string>();
        if (p == "split") {
          c.oversize_policy = OversizePolicy::kSplit;
        } else if (p == "error") {
          c.oversize_policy = OversizePolicy::kError;
        } else {
          throw ConfigError("oversize_policy must be 'split' or 'error'");
        }
      } else if (key == "oov_logp") {
        c.oov_logp = value.get<double>();
      } else if (!key.empty() && key[0] == '_') {
        // comment
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  ValidateConfig(c);
  return c;
}

}  // namespace zaonhe

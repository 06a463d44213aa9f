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

#ifndef ZAONHE_CHAR_MAPPING_H_
#define ZAONHE_CHAR_MAPPING_H_

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zaonhe/errors.h"
#include "zaonhe/lexicon.h"

namespace zaonhe {

// Simplified -> traditional conversion table. Keys may span several
// characters; the longest key matching at each position wins.
class CharMapping {
 public:
  CharMapping() = default;
  explicit CharMapping(std::vector<std::pair<std::string, std::string>> pairs);

  // Throws IoError when the file cannot be opened; malformed rows are
  // reported through `errors` when given, otherwise skipped.
  static CharMapping Load(const std::string& path,
                          std::vector<RowError>* errors = nullptr);
  static CharMapping Parse(std::istream& in,
                           std::vector<RowError>* errors = nullptr);

  std::string ToTraditional(std::string_view text) const;

  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<std::u32string, std::u32string>>& pairs() const {
    return pairs_;
  }

 private:
  std::vector<std::pair<std::u32string, std::u32string>> pairs_;
  PrefixIndex index_;
};

}  // namespace zaonhe

#endif  // ZAONHE_CHAR_MAPPING_H_

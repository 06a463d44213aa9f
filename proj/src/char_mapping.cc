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

#include "zaonhe/char_mapping.h"

#include <fstream>

#include "zaonhe/utf8.h"

namespace zaonhe {

CharMapping::CharMapping(
    std::vector<std::pair<std::string, std::string>> pairs) {
  for (auto& [from, to] : pairs) {
    std::u32string key = DecodeUtf8(NormalizeNfc(from));
    if (key.empty()) continue;
    index_.Insert(key, pairs_.size());
    pairs_.emplace_back(std::move(key), DecodeUtf8(NormalizeNfc(to)));
  }
}

CharMapping CharMapping::Parse(std::istream& in, std::vector<RowError>* errors) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    auto fields = SplitFields(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      if (errors) errors->push_back({line_no, "expected from<TAB>to"});
      continue;
    }
    pairs.emplace_back(std::string(fields[0]), std::string(fields[1]));
  }
  return CharMapping(std::move(pairs));
}

CharMapping CharMapping::Load(const std::string& path,
                              std::vector<RowError>* errors) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open character mapping: " + path);
  return Parse(in, errors);
}

std::string CharMapping::ToTraditional(std::string_view text) const {
  std::u32string src = DecodeUtf8(text);
  std::u32string out;
  out.reserve(src.size());
  std::size_t i = 0;
  while (i < src.size()) {
    auto matches = index_.MatchesAt(src, i);
    if (matches.empty()) {
      out.push_back(src[i++]);
      continue;
    }
    const PrefixMatch& longest = matches.back();
    out += pairs_[longest.entry].second;
    i = longest.end;
  }
  return EncodeUtf8(out);
}

}  // namespace zaonhe

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

#include "zaonhe/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "zaonhe/utf8.h"

namespace zaonhe {

PrefixIndex::PrefixIndex() : nodes_(1) {}

void PrefixIndex::Insert(std::u32string_view word, std::size_t id) {
  std::uint32_t node = 0;
  for (char32_t c : word) {
    auto it = nodes_[node].next.find(c);
    if (it == nodes_[node].next.end()) {
      auto child = static_cast<std::uint32_t>(nodes_.size());
      nodes_[node].next.emplace(c, child);
      nodes_.emplace_back();
      node = child;
    } else {
      node = it->second;
    }
  }
  nodes_[node].id = static_cast<std::int64_t>(id);
}

std::vector<PrefixMatch> PrefixIndex::MatchesAt(std::u32string_view text,
                                                std::size_t pos) const {
  std::vector<PrefixMatch> matches;
  std::uint32_t node = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    auto it = nodes_[node].next.find(text[i]);
    if (it == nodes_[node].next.end()) break;
    node = it->second;
    if (nodes_[node].id >= 0) {
      matches.push_back({i + 1, static_cast<std::size_t>(nodes_[node].id)});
    }
  }
  return matches;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) {
  for (auto& e : entries) {
    auto it = by_headword_.find(e.headword);
    if (it == by_headword_.end()) {
      by_headword_.emplace(e.headword, entries_.size());
      entries_.push_back(std::move(e));
      continue;
    }
    LexiconEntry& kept = entries_[it->second];
    kept.weight = std::max(kept.weight, e.weight);
    if (kept.romanisation.empty() && !e.romanisation.empty()) {
      kept.romanisation = std::move(e.romanisation);
    }
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    total_weight_ += entries_[i].weight;
    prefix_.Insert(DecodeUtf8(entries_[i].headword), i);
  }
}

const LexiconEntry* Lexicon::Lookup(std::string_view word) const {
  auto it = by_headword_.find(std::string(word));
  return it == by_headword_.end() ? nullptr : &entries_[it->second];
}

namespace {

bool HasWhitespace(std::u32string_view s) {
  for (char32_t c : s) {
    if (IsSpace(c)) return true;
  }
  return false;
}

}  // namespace

LexiconLoadResult ParseLexicon(std::istream& in, LexiconFormat format,
                               std::uint64_t default_weight) {
  LexiconLoadResult result;
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  auto reject = [&](std::string message) {
    result.errors.push_back({line_no, std::move(message)});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;

    auto fields = SplitFields(line, '\t');
    if (fields.size() != 3) {
      reject("expected 3 tab-separated columns, got " +
             std::to_string(fields.size()));
      continue;
    }
    LexiconEntry entry;
    std::u32string head;
    try {
      entry.headword = NormalizeNfc(fields[0]);
      head = DecodeUtf8(entry.headword);
      entry.romanisation = SplitWords(NormalizeNfc(fields[1]));
    } catch (const Error& e) {
      reject(e.what());
      continue;
    }
    if (head.empty() || HasWhitespace(head)) {
      reject("headword is empty or contains whitespace");
      continue;
    }
    if (!entry.romanisation.empty() &&
        entry.romanisation.size() != head.size()) {
      reject("romanisation has " + std::to_string(entry.romanisation.size()) +
             " syllables for " + std::to_string(head.size()) + " characters");
      continue;
    }

    std::string_view weight = Trim(fields[2]);
    if (weight.empty()) {
      if (format == LexiconFormat::kBase) {
        reject("missing weight");
        continue;
      }
      entry.weight = default_weight;
    } else if (weight.front() == '-') {
      reject("negative weight");
      continue;
    } else {
      auto [ptr, ec] = std::from_chars(weight.data(),
                                       weight.data() + weight.size(),
                                       entry.weight);
      if (ec != std::errc() || ptr != weight.data() + weight.size()) {
        reject("weight is not a nonnegative integer");
        continue;
      }
    }
    entries.push_back(std::move(entry));
  }
  result.lexicon = Lexicon(std::move(entries));
  return result;
}

LexiconLoadResult LoadLexicon(const std::string& path, LexiconFormat format,
                              std::uint64_t default_weight) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  return ParseLexicon(in, format, default_weight);
}

void WriteLexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& e : lexicon.entries()) {
    out << e.headword << '\t';
    for (std::size_t i = 0; i < e.romanisation.size(); ++i) {
      if (i) out << ' ';
      out << e.romanisation[i];
    }
    out << '\t' << e.weight << '\n';
  }
}

Lexicon MergeWeights(const Lexicon& base, const Lexicon& overlay) {
  std::vector<LexiconEntry> merged = base.entries();
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    pos.emplace(merged[i].headword, i);
  }
  for (const auto& o : overlay.entries()) {
    auto it = pos.find(o.headword);
    if (it == pos.end()) {
      pos.emplace(o.headword, merged.size());
      merged.push_back(o);
      continue;
    }
    LexiconEntry& e = merged[it->second];
    e.weight = o.weight;
    if (!o.romanisation.empty()) e.romanisation = o.romanisation;
  }
  return Lexicon(std::move(merged));
}

}  // namespace zaonhe

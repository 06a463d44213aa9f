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

#include "zaonhe/sandhi.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "zaonhe/utf8.h"

namespace zaonhe {

SandhiPatternTable::SandhiPatternTable(
    std::map<Key, std::vector<std::string>> rows, std::size_t max_length)
    : rows_(std::move(rows)), max_length_(max_length) {
  if (max_length_ == 0) throw ConfigError("sandhi table max length is 0");
  std::string missing;
  for (int c = 1; c <= kNumToneCategories; ++c) {
    auto cat = static_cast<ToneCategory>(c);
    for (std::size_t len = 1; len <= max_length_; ++len) {
      if (!rows_.count({cat, len})) {
        missing += " " + ToneCategoryName(cat) + "x" + std::to_string(len);
      }
    }
  }
  if (!missing.empty()) {
    throw ConfigError("sandhi table incomplete, missing rows:" + missing);
  }
  for (const auto& [key, targets] : rows_) {
    if (targets.size() != key.second) {
      throw ConfigError("sandhi row " + ToneCategoryName(key.first) + "x" +
                        std::to_string(key.second) + " has " +
                        std::to_string(targets.size()) + " targets");
    }
    for (const auto& t : targets) {
      if (!IsChaoContour(t)) {
        throw ConfigError("bad pitch target '" + t + "'");
      }
    }
    if (key.second == 1) {
      const auto& ok = CitationContours(key.first);
      if (std::find(ok.begin(), ok.end(), targets[0]) == ok.end()) {
        throw ConfigError("length-1 row for " + ToneCategoryName(key.first) +
                          " must equal its citation contour");
      }
    }
  }
}

SandhiPatternTable SandhiPatternTable::Parse(std::istream& in,
                                             std::size_t max_length) {
  std::map<Key, std::vector<std::string>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    auto f = SplitFields(line, '\t');
    auto where = "sandhi table line " + std::to_string(line_no) + ": ";
    if (f.size() != 3) throw ConfigError(where + "expected 3 columns");
    auto cat = ParseToneCategory(Trim(f[0]));
    std::size_t len = 0;
    try {
      len = std::stoul(std::string(Trim(f[1])));
    } catch (const std::exception&) {
      len = 0;
    }
    if (!cat || len == 0) throw ConfigError(where + "bad category or length");
    if (!rows.emplace(Key{*cat, len}, SplitWords(f[2])).second) {
      throw ConfigError(where + "duplicate row");
    }
  }
  return SandhiPatternTable(std::move(rows), max_length);
}

SandhiPatternTable SandhiPatternTable::Load(const std::string& path,
                                            std::size_t max_length) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sandhi table: " + path);
  return Parse(in, max_length);
}

const std::vector<std::string>& SandhiPatternTable::Row(
    ToneCategory category, std::size_t length) const {
  if (length > max_length_) throw DomainTooLong(length, max_length_);
  return rows_.at({category, length});
}

void CliticSet::Add(std::string text, std::vector<IpaSyllable> cliticised) {
  forms_[std::move(text)] = std::move(cliticised);
}

bool CliticSet::Contains(const std::string& text) const {
  return forms_.count(text) > 0;
}

const std::vector<IpaSyllable>& CliticSet::CliticisedForm(
    const std::string& text) const {
  static const std::vector<IpaSyllable> kNone;
  auto it = forms_.find(text);
  return it == forms_.end() ? kNone : it->second;
}

std::vector<LDDomain> MarkLdDomains(std::span<const WordAnalysis> words,
                                    const CliticSet& clitics) {
  std::vector<LDDomain> domains;
  bool open = false;
  std::size_t syllable = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const WordAnalysis& w = words[i];
    if (w.token.origin == TokenOrigin::kPunctuation) {
      open = false;
      continue;
    }
    if (w.ipa.empty()) continue;
    if (open && clitics.Contains(w.token.text)) {
      LDDomain& d = domains.back();
      d.boundaries.push_back(d.syllables.size());
      d.has_clitic = true;
      const auto& form = clitics.CliticisedForm(w.token.text);
      const auto& add = form.size() == w.ipa.size() ? form : w.ipa;
      d.syllables.insert(d.syllables.end(), add.begin(), add.end());
    } else {
      LDDomain d;
      d.first_syllable = syllable;
      d.syllables = w.ipa;
      d.head_token = i;
      domains.push_back(std::move(d));
      open = true;
    }
    syllable += w.ipa.size();
  }
  return domains;
}

std::vector<SurfaceTone> ApplyLd(const LDDomain& domain,
                                 const SandhiPatternTable& table) {
  if (domain.syllables.empty()) return {};
  const auto& row =
      table.Row(domain.syllables.front().tone.category, domain.size());
  std::vector<SurfaceTone> out;
  out.reserve(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out.push_back({row[i], domain.syllables[i].tone.checked});
  }
  return out;
}

namespace {

// Splits `d` at relative syllable offset `at`.
std::pair<LDDomain, LDDomain> SplitDomain(const LDDomain& d, std::size_t at,
                                          std::size_t head_of_tail) {
  LDDomain left, right;
  left.first_syllable = d.first_syllable;
  left.head_token = d.head_token;
  left.rd_group = d.rd_group;
  left.syllables.assign(d.syllables.begin(), d.syllables.begin() + at);
  right.first_syllable = d.first_syllable + at;
  right.head_token = head_of_tail;
  right.rd_group = d.rd_group;
  right.syllables.assign(d.syllables.begin() + at, d.syllables.end());
  for (std::size_t b : d.boundaries) {
    if (b < at) left.boundaries.push_back(b);
    if (b > at) right.boundaries.push_back(b - at);
  }
  left.has_clitic = !left.boundaries.empty();
  right.has_clitic = !right.boundaries.empty();
  return {std::move(left), std::move(right)};
}

// Index of the token starting at relative offset `at` of domain `d`.
std::size_t TokenAt(std::span<const WordAnalysis> words, const LDDomain& d,
                    std::size_t at) {
  std::size_t pos = 0;
  for (std::size_t i = d.head_token; i < words.size(); ++i) {
    if (pos >= at) return i;
    pos += words[i].ipa.size();
  }
  return d.head_token;
}

void Realise(const LDDomain& d, std::span<const WordAnalysis> words,
             const SandhiPatternTable& table, OversizePolicy policy,
             std::vector<LDDomain>& domains, std::vector<SurfaceTone>& surface) {
  if (d.size() <= table.max_length() || policy == OversizePolicy::kError) {
    auto tones = ApplyLd(d, table);
    surface.insert(surface.end(), tones.begin(), tones.end());
    domains.push_back(d);
    return;
  }
  std::size_t at = d.boundaries.empty() ? table.max_length()
                                        : d.boundaries.back();
  std::size_t tail_head =
      d.boundaries.empty() ? d.head_token : TokenAt(words, d, at);
  auto [left, right] = SplitDomain(d, at, tail_head);
  Realise(left, words, table, policy, domains, surface);
  Realise(right, words, table, policy, domains, surface);
}

}  // namespace

AnnotatedUtterance Annotate(std::vector<WordAnalysis> words,
                            const CliticSet& clitics,
                            const SandhiPatternTable& table,
                            OversizePolicy policy) {
  AnnotatedUtterance utt;
  utt.words = std::move(words);
  for (const LDDomain& d : MarkLdDomains(utt.words, clitics)) {
    Realise(d, utt.words, table, policy, utt.domains, utt.surface);
  }
  return utt;
}

std::string RenderContour(const AnnotatedUtterance& utt) {
  std::vector<std::string> items;
  std::size_t syllable = 0;
  std::size_t d = 0;
  std::size_t surface = 0;
  std::string current;
  for (const WordAnalysis& w : utt.words) {
    if (w.token.origin == TokenOrigin::kPunctuation) {
      std::string_view text = Trim(w.token.text);
      if (!text.empty()) items.emplace_back(text);
      continue;
    }
    for (std::size_t k = 0; k < w.ipa.size(); ++k, ++syllable) {
      while (d < utt.domains.size() &&
             syllable >= utt.domains[d].first_syllable + utt.domains[d].size()) {
        ++d;
      }
      if (d == utt.domains.size()) continue;
      const LDDomain& dom = utt.domains[d];
      std::size_t rel = syllable - dom.first_syllable;
      current += rel == 0 ? "[" : " ";
      current += dom.syllables[rel].Joined();
      if (surface < utt.surface.size()) current += utt.surface[surface++].pitch;
      if (rel + 1 == dom.size()) {
        items.push_back(current + "]");
        current.clear();
      }
    }
  }
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i];
  }
  return out;
}

namespace {

std::vector<std::string> SyllableSequence(std::span<const LDDomain> ds) {
  std::vector<std::string> seq;
  for (const auto& d : ds) {
    for (const auto& s : d.syllables) seq.push_back(s.Joined());
  }
  return seq;
}

struct Boundaries {
  std::set<std::size_t> ld;
  std::set<std::size_t> rd;
};

Boundaries BoundariesOf(std::span<const LDDomain> ds) {
  Boundaries b;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i > 0) {
      b.ld.insert(pos);
      if (ds[i].rd_group != ds[i - 1].rd_group) b.rd.insert(pos);
    }
    pos += ds[i].size();
  }
  return b;
}

std::vector<std::size_t> Minus(const std::set<std::size_t>& x,
                               const std::set<std::size_t>& y) {
  std::vector<std::size_t> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

DomainDiff DiffDomains(std::span<const LDDomain> a,
                       std::span<const LDDomain> b) {
  if (SyllableSequence(a) != SyllableSequence(b)) {
    throw IncomparableAnalyses(
        "analyses cover different syllable sequences");
  }
  Boundaries ba = BoundariesOf(a);
  Boundaries bb = BoundariesOf(b);
  return {Minus(bb.ld, ba.ld), Minus(ba.ld, bb.ld), Minus(bb.rd, ba.rd),
          Minus(ba.rd, bb.rd)};
}

}  // namespace zaonhe

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

#include "zaonhe/phonemizer.h"

#include <algorithm>
#include <fstream>

#include "zaonhe/utf8.h"

namespace zaonhe {

std::string RomanSyllable::Spelled() const {
  return explicit_digit ? text + std::to_string(*explicit_digit) : text;
}

std::string IpaSyllable::Joined() const {
  std::string out;
  for (const auto& s : segments) out += s;
  return out;
}

namespace {

RomanSyllable MakeSyllable(std::string_view spelled, char32_t ch,
                           SyllableSource source, const ToneMarks& marks) {
  auto spelling = SplitToneDigit(spelled);
  if (!spelling) throw ToneUnderivable(std::string(spelled));
  RomanSyllable syl;
  syl.text = spelling->letters;
  syl.explicit_digit = spelling->digit;
  syl.source = source;
  std::optional<int> digit = spelling->digit;
  if (!digit) digit = marks.Find(ch);
  syl.tone = AssignTone(digit ? syl.text + std::to_string(*digit) : syl.text);
  return syl;
}

}  // namespace

RomanisedWord Romanise(const Token& token, const Lexicon& lex,
                       const ToneMarks& marks) {
  if (token.origin == TokenOrigin::kPunctuation) {
    throw Error("cannot romanise punctuation token '" + token.text + "'");
  }
  std::u32string chars = DecodeUtf8(token.text);
  RomanisedWord word;

  const LexiconEntry* whole = lex.Lookup(token.text);
  if (whole && !whole->romanisation.empty()) {
    for (std::size_t i = 0; i < chars.size(); ++i) {
      word.syllables.push_back(MakeSyllable(whole->romanisation[i], chars[i],
                                            SyllableSource::kLexicon, marks));
      if (i) word.links.push_back(Link::kKnown);
    }
    return word;
  }

  std::size_t i = 0;
  while (i < chars.size()) {
    const LexiconEntry* piece = nullptr;
    std::size_t end = i;
    for (const PrefixMatch& m : lex.MatchesAt(chars, i)) {
      const LexiconEntry& e = lex.entry(m.entry);
      if (!e.romanisation.empty()) {
        piece = &e;
        end = m.end;
      }
    }
    if (!piece) {
      throw UnromanisableCharacter(EncodeUtf8(chars[i]), token.start + i);
    }
    SyllableSource source = end - i > 1 ? SyllableSource::kLexicon
                                        : SyllableSource::kCharFallback;
    for (std::size_t k = i; k < end; ++k) {
      word.syllables.push_back(
          MakeSyllable(piece->romanisation[k - i], chars[k], source, marks));
      if (k) word.links.push_back(k == i ? Link::kInferred : Link::kKnown);
    }
    i = end;
  }
  return word;
}

IpaTable::IpaTable(
    std::vector<std::pair<std::string, std::vector<std::string>>> rows) {
  for (auto& [grapheme, symbols] : rows) {
    max_grapheme_ = std::max(max_grapheme_, grapheme.size());
    for (const auto& s : symbols) {
      inventory_.insert(s);
      max_symbol_ = std::max(max_symbol_, s.size());
    }
    rows_[grapheme] = std::move(symbols);
  }
}

IpaTable IpaTable::Parse(std::istream& in, std::vector<RowError>* errors) {
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    auto f = SplitFields(line, '\t');
    std::vector<std::string> symbols;
    if (f.size() == 2) {
      for (auto& s : SplitWords(f[1])) symbols.push_back(NormalizeNfc(s));
    }
    if (f.size() != 2 || Trim(f[0]).empty() || symbols.empty()) {
      if (errors) {
        errors->push_back({line_no, "expected grapheme<TAB>ipa symbols"});
      }
      continue;
    }
    rows.emplace_back(std::string(Trim(f[0])), std::move(symbols));
  }
  return IpaTable(std::move(rows));
}

IpaTable IpaTable::Load(const std::string& path,
                        std::vector<RowError>* errors) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open IPA table: " + path);
  return Parse(in, errors);
}

std::vector<std::string> IpaTable::Convert(std::string_view letters) const {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t len = std::min(max_grapheme_, letters.size() - i);
    for (; len > 0; --len) {
      auto it = rows_.find(std::string(letters.substr(i, len)));
      if (it != rows_.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        break;
      }
    }
    if (len == 0) throw MappingGap(std::string(letters.substr(i)));
    i += len;
  }
  return out;
}

IpaSyllable IpaTable::ToIpa(const RomanSyllable& syllable) const {
  return {Convert(syllable.text), syllable.tone};
}

std::vector<std::string> IpaTable::Retokenize(std::string_view ipa) const {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < ipa.size()) {
    std::size_t len = std::min(max_symbol_, ipa.size() - i);
    for (; len > 0; --len) {
      std::string candidate(ipa.substr(i, len));
      if (inventory_.count(candidate)) {
        out.push_back(std::move(candidate));
        break;
      }
    }
    if (len == 0) throw MappingGap(std::string(ipa.substr(i)));
    i += len;
  }
  return out;
}

}  // namespace zaonhe

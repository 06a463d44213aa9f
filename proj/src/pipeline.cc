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

#include "zaonhe/pipeline.h"

#include "zaonhe/segmenter.h"
#include "zaonhe/utf8.h"

namespace zaonhe {

namespace {

void Collect(std::vector<std::string>& warnings, const std::string& file,
             const std::vector<RowError>& errors) {
  for (const auto& e : errors) {
    warnings.push_back(file + ":" + std::to_string(e.line) + ": " + e.message);
  }
}

}  // namespace

Resources Resources::Load(const Config& config) {
  ValidateConfig(config);
  std::vector<std::string> warnings;

  auto base = LoadLexicon(config.base_lexicon, LexiconFormat::kBase);
  Collect(warnings, config.base_lexicon, base.errors);
  Lexicon lexicon = std::move(base.lexicon);
  if (!config.overlay_lexicon.empty()) {
    auto overlay = LoadLexicon(config.overlay_lexicon, LexiconFormat::kOverlay,
                               config.overlay_default_weight);
    Collect(warnings, config.overlay_lexicon, overlay.errors);
    lexicon = MergeWeights(lexicon, overlay.lexicon);
  }

  std::vector<RowError> errors;
  CharMapping mapping = CharMapping::Load(config.char_mapping, &errors);
  Collect(warnings, config.char_mapping, errors);
  errors.clear();
  IpaTable ipa = IpaTable::Load(config.ipa_table, &errors);
  Collect(warnings, config.ipa_table, errors);
  errors.clear();
  ToneMarks marks;
  if (!config.tone_marks.empty()) {
    marks = ToneMarks::Load(config.tone_marks, &errors);
    Collect(warnings, config.tone_marks, errors);
  }

  CliticSet clitics;
  for (const auto& [text, form] : config.clitics) {
    std::vector<IpaSyllable> cliticised;
    try {
      for (const auto& syl : SplitWords(form)) {
        RomanSyllable rs;
        auto spelling = SplitToneDigit(syl);
        if (!spelling) throw ToneUnderivable(syl);
        rs.text = spelling->letters;
        rs.explicit_digit = spelling->digit;
        rs.tone = AssignTone(syl);
        cliticised.push_back(ipa.ToIpa(rs));
      }
    } catch (const Error& e) {
      throw ConfigError("clitic '" + text + "': " + e.what());
    }
    clitics.Add(NormalizeNfc(text), std::move(cliticised));
  }

  return Resources{
      std::move(lexicon),
      std::move(mapping),
      HmmParams::Load(config.hmm),
      std::move(marks),
      std::move(ipa),
      SandhiPatternTable::Load(config.sandhi_table, config.domain_max_length),
      std::move(clitics),
      std::move(warnings),
  };
}

PipelineOptions PipelineOptions::FromConfig(const Config& c) {
  return {c.use_hmm, c.interleave_blank, c.oversize_policy, c.oov_logp};
}

std::vector<WordAnalysis> Phonemise(std::string_view traditional,
                                    const Resources& res,
                                    const PipelineOptions& options) {
  std::vector<Token> tokens;
  try {
    tokens = Segment(traditional, res.lexicon, res.hmm,
                     {options.use_hmm, options.oov_logp});
  } catch (const Error& e) {
    throw StageError("segment", e.what());
  }
  std::vector<WordAnalysis> words;
  words.reserve(tokens.size());
  for (Token& t : tokens) {
    WordAnalysis w{std::move(t), {}, {}};
    if (w.token.origin != TokenOrigin::kPunctuation) {
      try {
        w.roman = Romanise(w.token, res.lexicon, res.marks);
      } catch (const Error& e) {
        throw StageError("romanise", e.what());
      }
      try {
        for (const auto& syl : w.roman.syllables) {
          w.ipa.push_back(res.ipa.ToIpa(syl));
        }
      } catch (const Error& e) {
        throw StageError("ipa", e.what());
      }
    }
    words.push_back(std::move(w));
  }
  return words;
}

PipelineRecord RunPipeline(std::string_view text, const Resources& res,
                           const PipelineOptions& options) {
  PipelineRecord rec;
  rec.input = std::string(text);
  try {
    rec.traditional = res.mapping.ToTraditional(NormalizeNfc(text));
  } catch (const Error& e) {
    throw StageError("normalize", e.what());
  }
  auto words = Phonemise(rec.traditional, res, options);
  try {
    rec.utterance = Annotate(std::move(words), res.clitics, res.sandhi,
                             options.oversize_policy);
  } catch (const Error& e) {
    throw StageError("sandhi", e.what());
  }
  rec.segmentation = RenderSegmentation(rec.utterance.words);
  rec.romanised =
      RenderSegmentation(rec.utterance.words, SegmentationScript::kRoman);
  rec.contour = RenderContour(rec.utterance);
  rec.symbols = EmitSymbols(rec.utterance, options.interleave_blank);
  return rec;
}

nlohmann::ordered_json ToJson(const PipelineRecord& rec) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["input"] = rec.input;
  j["traditional"] = rec.traditional;

  ordered_json tokens = ordered_json::array();
  ordered_json syllables = ordered_json::array();
  for (std::size_t i = 0; i < rec.utterance.words.size(); ++i) {
    const WordAnalysis& w = rec.utterance.words[i];
    tokens.push_back({{"text", w.token.text},
                      {"origin", TokenOriginName(w.token.origin)},
                      {"start", w.token.start},
                      {"end", w.token.end}});
    for (std::size_t k = 0; k < w.ipa.size(); ++k) {
      const ToneValue& tone = w.ipa[k].tone;
      syllables.push_back({{"token", i},
                           {"roman", w.roman.syllables[k].Spelled()},
                           {"ipa", w.ipa[k].Joined()},
                           {"segments", w.ipa[k].segments},
                           {"tone", ToneCategoryName(tone.category)},
                           {"citation", tone.contour},
                           {"checked", tone.checked}});
    }
  }
  j["tokens"] = std::move(tokens);
  j["segmentation"] = rec.segmentation;
  j["romanisation"] = rec.romanised;
  j["syllables"] = std::move(syllables);

  ordered_json domains = ordered_json::array();
  for (const LDDomain& d : rec.utterance.domains) {
    ordered_json ipa = ordered_json::array();
    for (const auto& s : d.syllables) ipa.push_back(s.Joined());
    domains.push_back({{"start", d.first_syllable},
                       {"length", d.size()},
                       {"head_token", d.head_token},
                       {"clitic", d.has_clitic},
                       {"ipa", std::move(ipa)}});
  }
  j["domains"] = std::move(domains);

  ordered_json surface = ordered_json::array();
  ordered_json shortened = ordered_json::array();
  for (std::size_t i = 0; i < rec.utterance.surface.size(); ++i) {
    surface.push_back(rec.utterance.surface[i].pitch);
    if (rec.utterance.surface[i].shortened) shortened.push_back(i);
  }
  j["surface"] = std::move(surface);
  j["shortened"] = std::move(shortened);
  j["contour"] = rec.contour;
  j["symbols"] = rec.symbols.symbols;
  j["blank_interleaved"] = rec.symbols.blank_interleaved;
  return j;
}

}  // namespace zaonhe

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

// Command-line front end: segment, phonemize, sandhi, pipeline and eval.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zaonhe/commands.h"
#include "zaonhe/config.h"
#include "zaonhe/pipeline.h"

namespace {

struct LineArgs {
  std::string config;
  std::vector<std::string> inputs;
  bool no_hmm = false;
  bool blank = false;
  bool contour = false;
  bool json = false;
};

void AddLineCommand(CLI::App& app, const std::string& name,
                    const std::string& help, LineArgs& args) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("inputs", args.inputs,
                  "input text files, one utterance per line (default: stdin)")
      ->check(CLI::ExistingFile);
  sub->add_option("--config", args.config, "config file (JSON)")
      ->check(CLI::ExistingFile);
  sub->add_flag("--no-hmm", args.no_hmm, "disable the HMM unknown-word pass");
  sub->add_flag("--blank", args.blank, "interleave BLANK symbols");
  sub->add_flag("--contour", args.contour, "print the Chao-letter contour only");
  sub->add_flag("--json", args.json, "print full structured records");
}

int RunLines(zaonhe::LineCommand command, const LineArgs& args) {
  using namespace zaonhe;
  Config config = LoadConfig(args.config.empty() ? DefaultConfigPath()
                                                 : args.config);
  if (args.no_hmm) config.use_hmm = false;
  if (args.blank) config.interleave_blank = true;
  Resources res = Resources::Load(config);
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';

  PipelineOptions options = PipelineOptions::FromConfig(config);
  OutputOptions output{args.json, args.contour};
  if (args.inputs.empty()) {
    RunLineCommand(command, std::cin, std::cout, std::cerr, res, options,
                   output);
    return 0;
  }
  for (const auto& path : args.inputs) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input: " + path);
    RunLineCommand(command, in, std::cout, std::cerr, res, options, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shanghainese TTS text front end"};
  app.require_subcommand(1);

  LineArgs segment, phonemize, sandhi, pipeline;
  AddLineCommand(app, "segment", "word segmentation rendering", segment);
  AddLineCommand(app, "phonemize", "IPA with citation tones", phonemize);
  AddLineCommand(app, "sandhi", "LD domains and surface contours", sandhi);
  AddLineCommand(app, "pipeline", "full structured record per line",
                 pipeline);

  std::string ratings;
  std::string by = "speaker";
  std::string test;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "MOS tables from ratings CSV");
  eval->add_option("ratings", ratings, "ratings CSV")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--by", by, "grouping")
      ->check(CLI::IsMember({"speaker", "metric", "sentence"}));
  eval->add_option("--test", test, "compare two speakers, e.g. 1:2");
  eval->add_flag("--json", eval_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("segment")) {
      return RunLines(zaonhe::LineCommand::kSegment, segment);
    }
    if (app.got_subcommand("phonemize")) {
      return RunLines(zaonhe::LineCommand::kPhonemize, phonemize);
    }
    if (app.got_subcommand("sandhi")) {
      return RunLines(zaonhe::LineCommand::kSandhi, sandhi);
    }
    if (app.got_subcommand("pipeline")) {
      return RunLines(zaonhe::LineCommand::kPipeline, pipeline);
    }
    zaonhe::EvalOptions options;
    options.json = eval_json;
    options.grouping = by == "metric"     ? zaonhe::Grouping::kSpeakerMetric
                       : by == "sentence" ? zaonhe::Grouping::kSpeakerSentence
                                          : zaonhe::Grouping::kSpeaker;
    if (!test.empty()) {
      options.test = zaonhe::ParseSpeakerPair(test);
      if (!options.test) {
        std::cerr << "--test expects A:B with speakers 1-3\n";
        return 2;
      }
    }
    return zaonhe::RunEval(zaonhe::LoadRatings(ratings), options, std::cout,
                           std::cerr);
  } catch (const zaonhe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

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

#ifndef ZAONHE_ERRORS_H_
#define ZAONHE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zaonhe {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or structurally invalid input file. Fatal for the caller.
class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A character for which neither the token nor any lexicon entry provides a
// romanisation.
class UnromanisableCharacter : public Error {
 public:
  UnromanisableCharacter(std::string character, std::size_t position)
      : Error("no romanisation for '" + character + "' at position " +
              std::to_string(position)),
        character_(std::move(character)),
        position_(position) {}
  const std::string& character() const { return character_; }
  std::size_t position() const { return position_; }

 private:
  std::string character_;
  std::size_t position_;
};

class ToneUnderivable : public Error {
 public:
  explicit ToneUnderivable(const std::string& syllable)
      : Error("cannot derive tone for syllable '" + syllable + "'"),
        syllable_(syllable) {}
  const std::string& syllable() const { return syllable_; }

 private:
  std::string syllable_;
};

class MappingGap : public Error {
 public:
  explicit MappingGap(const std::string& substring)
      : Error("no IPA mapping for '" + substring + "'"),
        substring_(substring) {}
  const std::string& substring() const { return substring_; }

 private:
  std::string substring_;
};

class DomainTooLong : public Error {
 public:
  DomainTooLong(std::size_t length, std::size_t max_length)
      : Error("sandhi domain of length " + std::to_string(length) +
              " exceeds table maximum " + std::to_string(max_length)),
        length_(length) {}
  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
};

class IncomparableAnalyses : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Error escaping a pipeline stage, tagged with the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message)
      : Error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// A rejected row in a line-oriented data file. Loading continues.
struct RowError {
  std::size_t line = 0;
  std::string message;
};

}  // namespace zaonhe

#endif  // ZAONHE_ERRORS_H_

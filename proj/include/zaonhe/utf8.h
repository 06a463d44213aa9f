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

#ifndef ZAONHE_UTF8_H_
#define ZAONHE_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace zaonhe {

// Decodes UTF-8. Throws Error on malformed input.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

// Splits UTF-8 text into one string per code point.
std::vector<std::string> SplitUtf8Chars(std::string_view text);

std::size_t Utf8Length(std::string_view text);

std::string NormalizeNfc(std::string_view text);

// CJK unified ideographs, extensions and compatibility ideographs.
bool IsHan(char32_t c);

bool IsSpace(char32_t c);

// Splits on a single delimiter, keeping empty fields.
std::vector<std::string_view> SplitFields(std::string_view line, char delim);

// Splits on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWords(std::string_view text);

std::string_view Trim(std::string_view text);

}  // namespace zaonhe

#endif  // ZAONHE_UTF8_H_

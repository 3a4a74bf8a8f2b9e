// Copyright 2026 The Snipmine Authors.
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

#ifndef SNIPMINE_UTF8_H_
#define SNIPMINE_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 helpers. Invalid bytes decode as U+FFFD and consume one byte,
// so every function here is total over arbitrary byte strings.
namespace snipmine::utf8 {

// Decodes the code point starting at byte `pos`; stores its byte length.
char32_t DecodeAt(std::string_view text, std::size_t pos, std::size_t* length);

void Append(char32_t cp, std::string* out);

// Number of code points ("characters") in `text`.
std::size_t CharCount(std::string_view text);

// Byte offset reached by moving `count` characters forward (backward) from
// byte offset `pos`, clamped to the string boundaries.
std::size_t Advance(std::string_view text, std::size_t pos, std::size_t count);
std::size_t Retreat(std::string_view text, std::size_t pos, std::size_t count);

bool IsSpace(char32_t cp);
// Punctuation and symbols, including the common non-ASCII blocks.
bool IsPunct(char32_t cp);
bool IsDigit(char32_t cp);
// Anything that is neither space, punctuation nor digit counts as a letter.
bool IsLetter(char32_t cp);
bool IsUpper(char32_t cp);

}  // namespace snipmine::utf8

#endif  // SNIPMINE_UTF8_H_

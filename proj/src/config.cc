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

#include "snipmine/config.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>

#include "snipmine/errors.h"

namespace snipmine {

namespace {

using Field = std::variant<std::size_t Config::*, int Config::*,
                           double Config::*, std::vector<std::string> Config::*>;

const std::vector<std::pair<std::string_view, Field>>& Fields() {
  static const auto* const kFields =
      new std::vector<std::pair<std::string_view, Field>>{
          {"context_window_chars", &Config::context_window_chars},
          {"spam_min_percentile", &Config::spam_min_percentile},
          {"stop_anchor_words", &Config::stop_anchor_words},
          {"min_anchor_distance_chars", &Config::min_anchor_distance_chars},
          {"max_anchor_words", &Config::max_anchor_words},
          {"min_context_words", &Config::min_context_words},
          {"min_sentence_words", &Config::min_sentence_words},
          {"min_stopword_ratio", &Config::min_stopword_ratio},
          {"max_stopword_ratio", &Config::max_stopword_ratio},
          {"near_duplicate_cosine", &Config::near_duplicate_cosine},
          {"min_target_words", &Config::min_target_words},
          {"min_paragraph_chars", &Config::min_paragraph_chars},
          {"min_letter_ratio", &Config::min_letter_ratio},
          {"max_phrase_words", &Config::max_phrase_words},
          {"max_queries", &Config::max_queries},
          {"input_sentences", &Config::input_sentences},
          {"input_max_words", &Config::input_max_words},
          {"snippet_sentences", &Config::snippet_sentences},
      };
  return *kFields;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

double ParseDouble(std::string_view key, std::string_view value) {
  // std::from_chars for double is not available on every toolchain we build on.
  const std::string copy(value);
  char* end = nullptr;
  const double out = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + copy +
                      "'");
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

}  // namespace

Config ParseConfig(std::string_view contents) {
  Config config;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    bool known = false;
    for (const auto& [name, field] : Fields()) {
      if (name != key) continue;
      known = true;
      std::visit(
          [&](auto member) {
            using T = std::remove_reference_t<decltype(config.*member)>;
            if constexpr (std::is_same_v<T, double>) {
              config.*member = ParseDouble(key, value);
            } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
              std::vector<std::string> words;
              std::string_view rest = value;
              while (!rest.empty()) {
                const std::size_t comma = rest.find(',');
                const std::string_view word = Trim(rest.substr(0, comma));
                if (!word.empty()) words.emplace_back(word);
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
              }
              config.*member = std::move(words);
            } else {
              config.*member = ParseNumber<T>(key, value);
            }
          },
          field);
    }
    if (!known) throw ConfigError("unknown config key: " + std::string(key));
  }
  if (config.min_stopword_ratio > config.max_stopword_ratio) {
    throw ConfigError("min_stopword_ratio exceeds max_stopword_ratio");
  }
  return config;
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfig(buf.str());
}

std::vector<std::pair<std::string, std::string>> ConfigEntries(
    const Config& config) {
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& [name, field] : Fields()) {
    std::string value = std::visit(
        [&](auto member) -> std::string {
          using T = std::remove_cvref_t<decltype(config.*member)>;
          if constexpr (std::is_same_v<T, double>) {
            return FormatDouble(config.*member);
          } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
            std::string joined;
            for (const std::string& word : config.*member) {
              if (!joined.empty()) joined.push_back(',');
              joined += word;
            }
            return joined;
          } else {
            return std::to_string(config.*member);
          }
        },
        field);
    entries.emplace_back(std::string(name), std::move(value));
  }
  return entries;
}

}  // namespace snipmine

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

#ifndef SNIPMINE_CONFIG_H_
#define SNIPMINE_CONFIG_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snipmine {

// Every threshold of the corpus construction pipeline. Defaults are the
// values the pipeline was designed around.
struct Config {
  // Anchor context extraction.
  std::size_t context_window_chars = 1500;
  // Step 4: drop when the target's spam percentile is below this.
  int spam_min_percentile = 70;
  // Step 5.
  std::vector<std::string> stop_anchor_words = {"click", "read", "mail"};
  std::size_t min_anchor_distance_chars = 50;
  // Step 6.
  std::size_t max_anchor_words = 10;
  std::size_t min_context_words = 50;
  std::size_t min_sentence_words = 10;
  double min_stopword_ratio = 0.10;
  double max_stopword_ratio = 0.70;
  // Step 7.
  double near_duplicate_cosine = 0.9;
  // Step 9.
  std::size_t min_target_words = 100;
  // Content extraction.
  std::size_t min_paragraph_chars = 400;
  double min_letter_ratio = 0.5;
  // Query generation.
  std::size_t max_phrase_words = 6;
  std::size_t max_queries = 3;
  // Summarization.
  std::size_t input_sentences = 10;
  std::size_t input_max_words = 500;
  std::size_t snippet_sentences = 3;
};

// Flat "key = value" lines; '#' starts a comment. Unknown keys and
// unparseable values throw ConfigError.
Config ParseConfig(std::string_view contents);
Config LoadConfig(const std::string& path);

// (key, value) pairs in a fixed order, formatted as ParseConfig accepts them.
std::vector<std::pair<std::string, std::string>> ConfigEntries(
    const Config& config);

}  // namespace snipmine

#endif  // SNIPMINE_CONFIG_H_

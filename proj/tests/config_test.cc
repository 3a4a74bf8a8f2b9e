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

#include <gtest/gtest.h>

#include "snipmine/errors.h"

namespace snipmine {
namespace {

TEST(ConfigTest, Defaults) {
  const Config c;
  EXPECT_EQ(c.context_window_chars, 1500u);
  EXPECT_EQ(c.spam_min_percentile, 70);
  EXPECT_EQ(c.stop_anchor_words,
            (std::vector<std::string>{"click", "read", "mail"}));
  EXPECT_EQ(c.min_anchor_distance_chars, 50u);
  EXPECT_EQ(c.max_anchor_words, 10u);
  EXPECT_EQ(c.min_context_words, 50u);
  EXPECT_EQ(c.min_sentence_words, 10u);
  EXPECT_DOUBLE_EQ(c.min_stopword_ratio, 0.10);
  EXPECT_DOUBLE_EQ(c.max_stopword_ratio, 0.70);
  EXPECT_DOUBLE_EQ(c.near_duplicate_cosine, 0.9);
  EXPECT_EQ(c.min_target_words, 100u);
  EXPECT_EQ(c.min_paragraph_chars, 400u);
  EXPECT_EQ(c.max_phrase_words, 6u);
  EXPECT_EQ(c.max_queries, 3u);
  EXPECT_EQ(c.input_sentences, 10u);
  EXPECT_EQ(c.input_max_words, 500u);
  EXPECT_EQ(c.snippet_sentences, 3u);
}

TEST(ConfigTest, ParseOverrides) {
  const Config c = ParseConfig(
      "# thresholds\n"
      "spam_min_percentile = 60\n"
      "  near_duplicate_cosine=0.95   # stricter\n"
      "stop_anchor_words = click, more ,here\n"
      "\n");
  EXPECT_EQ(c.spam_min_percentile, 60);
  EXPECT_DOUBLE_EQ(c.near_duplicate_cosine, 0.95);
  EXPECT_EQ(c.stop_anchor_words,
            (std::vector<std::string>{"click", "more", "here"}));
  EXPECT_EQ(c.min_target_words, 100u);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(ParseConfig("no_such_key = 1"), ConfigError);
  EXPECT_THROW(ParseConfig("min_target_words = many"), ConfigError);
  EXPECT_THROW(ParseConfig("min_target_words = -5"), ConfigError);
  EXPECT_THROW(ParseConfig("min_target_words"), ConfigError);
  EXPECT_THROW(ParseConfig("min_stopword_ratio = 0.8"), ConfigError);
  EXPECT_THROW(LoadConfig("/nonexistent/snipmine.conf"), ConfigError);
}

TEST(ConfigTest, EntriesRoundTrip) {
  Config c;
  c.min_target_words = 77;
  c.min_stopword_ratio = 0.125;
  c.stop_anchor_words = {"a", "b"};
  std::string text;
  for (const auto& [key, value] : ConfigEntries(c)) {
    text += key + " = " + value + "\n";
  }
  const Config back = ParseConfig(text);
  EXPECT_EQ(ConfigEntries(back), ConfigEntries(c));
  EXPECT_EQ(back.min_target_words, 77u);
  EXPECT_DOUBLE_EQ(back.min_stopword_ratio, 0.125);
  EXPECT_EQ(ConfigEntries(c).size(), 18u);
}

}  // namespace
}  // namespace snipmine

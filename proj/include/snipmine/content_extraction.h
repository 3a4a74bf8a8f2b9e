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

#ifndef SNIPMINE_CONTENT_EXTRACTION_H_
#define SNIPMINE_CONTENT_EXTRACTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snipmine/records.h"
#include "snipmine/text_analysis.h"

namespace snipmine {

struct ContentConfig {
  // Paragraphs shorter than this (in characters) are boilerplate.
  std::size_t min_paragraph_chars = 400;
  // Sentences with a smaller share of letter-only tokens are dropped.
  double min_letter_ratio = 0.5;
  const WordSet* function_words = &WordLists::Bundled().function_words;
};

// Block-level paragraphs of the page. Unparseable markup yields one
// best-effort paragraph and sets *malformed.
std::vector<std::string> RenderBlocks(std::string_view raw_html,
                                      bool* malformed = nullptr);

// Drops paragraphs under the character floor, then, inside the survivors,
// sentences under the letter-ratio floor or without a function word. A
// paragraph that falls under the floor after sentence removal is dropped
// too. Survivors are joined with blank lines.
std::string CleanBlocks(std::span<const std::string> paragraphs,
                        const ContentConfig& config = {});

// Fills plain_text and word_count from raw_html.
DocumentRecord ExtractContent(DocumentRecord doc,
                              const ContentConfig& config = {});

}  // namespace snipmine

#endif  // SNIPMINE_CONTENT_EXTRACTION_H_

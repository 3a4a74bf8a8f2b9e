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

#include "snipmine/content_extraction.h"

#include "snipmine/html.h"
#include "snipmine/utf8.h"

namespace snipmine {

std::vector<std::string> RenderBlocks(std::string_view raw_html,
                                      bool* malformed) {
  RenderedPage page = RenderHtml(raw_html);
  if (malformed) *malformed = page.malformed;
  if (!page.malformed) return std::move(page.blocks);
  std::string joined = NormalizeWhitespace(page.text);
  if (joined.empty()) return {};
  return {std::move(joined)};
}

std::string CleanBlocks(std::span<const std::string> paragraphs,
                        const ContentConfig& config) {
  std::string out;
  for (const std::string& raw : paragraphs) {
    const std::string paragraph = NormalizeWhitespace(raw);
    if (utf8::CharCount(paragraph) < config.min_paragraph_chars) continue;
    std::string kept;
    for (const Span& sentence : SplitSentences(paragraph)) {
      const std::string_view text =
          std::string_view(paragraph).substr(sentence.start, sentence.size());
      const std::vector<Token> tokens = Tokenize(text);
      if (tokens.empty()) continue;
      if (LetterTokenRatio(tokens) < config.min_letter_ratio) continue;
      if (!ContainsWordFrom(tokens, *config.function_words)) continue;
      if (!kept.empty()) kept.push_back(' ');
      kept.append(text);
    }
    if (utf8::CharCount(kept) < config.min_paragraph_chars) continue;
    if (!out.empty()) out += "\n\n";
    out += kept;
  }
  return out;
}

DocumentRecord ExtractContent(DocumentRecord doc, const ContentConfig& config) {
  const std::vector<std::string> blocks = RenderBlocks(doc.raw_html);
  doc.plain_text = CleanBlocks(blocks, config);
  doc.word_count = CountWords(doc.plain_text);
  return doc;
}

}  // namespace snipmine

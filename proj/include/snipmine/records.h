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

#ifndef SNIPMINE_RECORDS_H_
#define SNIPMINE_RECORDS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "snipmine/text_analysis.h"

namespace snipmine {

struct DocumentRecord {
  std::string doc_id;
  std::string url;
  std::string raw_html;
  // Main content, filled by content extraction.
  std::string plain_text;
  std::size_t word_count = 0;
  // Metadata override; when absent the language is detected from content.
  std::optional<std::string> language;
  std::optional<int> spam_percentile;
  std::optional<int> relevance;

  bool operator==(const DocumentRecord&) const = default;
};

// One hyperlink occurrence with up to a fixed number of rendered characters
// on each side of the anchor text.
struct AnchorContextRecord {
  std::string source_doc_id;
  std::string source_url;
  std::string target_url;
  std::string anchor_text;
  std::string context;
  // Byte offsets of anchor_text within context.
  Span anchor_span;
  // Character offsets of the anchor within the source page's rendered text.
  Span page_anchor;

  bool operator==(const AnchorContextRecord&) const = default;
};

enum class Provenance { kAnchorContext, kDirectory };

std::string_view ProvenanceName(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view name);

// A snippet surrogate paired with the document it describes.
struct SnippetTuple {
  std::string snippet;
  std::string doc_id;
  Provenance provenance = Provenance::kAnchorContext;
  // Source page id (anchor contexts) or directory category (descriptions).
  std::string source;
  std::string target_url;

  bool operator==(const SnippetTuple&) const = default;
};

struct TrainingTriple {
  std::string triple_id;
  std::string query;
  std::string snippet;
  std::string doc_id;
  // Byte offsets of the matched query occurrence within snippet.
  Span query_span;
  Provenance provenance = Provenance::kAnchorContext;

  bool operator==(const TrainingTriple&) const = default;
};

}  // namespace snipmine

#endif  // SNIPMINE_RECORDS_H_

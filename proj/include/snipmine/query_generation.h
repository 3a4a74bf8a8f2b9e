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

#ifndef SNIPMINE_QUERY_GENERATION_H_
#define SNIPMINE_QUERY_GENERATION_H_

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snipmine/config.h"
#include "snipmine/records.h"
#include "snipmine/text_analysis.h"

namespace snipmine {

struct QueryCandidate {
  // Snippet surface form, leading article removed.
  std::string query;
  // Lowercased words joined by spaces; candidates are unique by key.
  std::string key;
  std::size_t words = 0;
  std::size_t snippet_freq = 0;
  std::size_t doc_freq = 0;
  // First occurrence of `query` in the snippet (bytes).
  Span snippet_span;

  std::size_t Score() const { return snippet_freq * doc_freq; }
};

// Number of token-aligned, case-insensitive occurrences of the word sequence
// `key` (space separated, lowercase) in `tokens`.
std::size_t CountPhrase(std::span<const Token> tokens, std::string_view key);

// Strict noun phrases of the snippet that also occur in the document, ranked
// by doc_freq * snippet_freq, then more words, then key.
std::vector<QueryCandidate> CandidateQueries(
    std::string_view snippet, std::string_view document_text,
    const TaggerBackend& tagger, std::size_t max_words = kMaxPhraseWords);

using DocumentLookup =
    std::function<const DocumentRecord*(const std::string& doc_id)>;

enum class TupleOutcome { kEmitted, kMissingDocument, kNoCandidates };

struct TripleBuildResult {
  std::vector<TrainingTriple> triples;
  // Per input tuple, in input order.
  std::vector<TupleOutcome> outcomes;
  std::size_t missing_documents = 0;
  std::size_t no_candidates = 0;
};

// Up to config.max_queries triples per tuple, in tuple order then rank.
// Triple ids are "<16 hex digits of the tuple hash>-<rank>".
TripleBuildResult BuildTriples(std::span<const SnippetTuple> tuples,
                               const DocumentLookup& documents,
                               const TaggerBackend& tagger,
                               const Config& config = {}, int threads = 1);

// By-document partition: every triple of a document lands in the same split.
inline constexpr std::array<std::string_view, 3> kSplitNames = {
    "train", "validation", "test"};

// Index into kSplitNames for `doc_id`; 80/10/10 by a stable hash.
std::size_t SplitOf(const std::string& doc_id);

std::map<std::string, std::vector<TrainingTriple>> SplitTriples(
    std::span<const TrainingTriple> triples);

}  // namespace snipmine

#endif  // SNIPMINE_QUERY_GENERATION_H_

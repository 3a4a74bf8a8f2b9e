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

#include "snipmine/query_generation.h"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "snipmine/near_dup.h"
#include "snipmine/parallel.h"

namespace snipmine {

namespace {

std::vector<std::string> SplitKey(std::string_view key) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= key.size()) {
    std::size_t end = key.find(' ', start);
    if (end == std::string_view::npos) end = key.size();
    if (end > start) words.emplace_back(key.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

std::string TupleId(const SnippetTuple& tuple) {
  std::string material(ProvenanceName(tuple.provenance));
  material += '\x1f';
  material += tuple.doc_id;
  material += '\x1f';
  material += tuple.source;
  material += '\x1f';
  material += tuple.snippet;
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(StableHash(material)));
  return hex;
}

}  // namespace

std::size_t CountPhrase(std::span<const Token> tokens, std::string_view key) {
  const std::vector<std::string> words = SplitKey(key);
  if (words.empty() || words.size() > tokens.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + words.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < words.size() && match; ++k) {
      match = ToLowerAscii(tokens[i + k].surface) == words[k];
    }
    if (match) ++count;
  }
  return count;
}

std::vector<QueryCandidate> CandidateQueries(std::string_view snippet,
                                             std::string_view document_text,
                                             const TaggerBackend& tagger,
                                             std::size_t max_words) {
  const std::vector<Token> snippet_tokens = Tokenize(snippet);
  const std::vector<TaggedToken> tagged = TagTokens(snippet_tokens, tagger);
  const std::vector<StrictNounPhrase> phrases =
      StrictNounPhrases(tagged, max_words);
  if (phrases.empty()) return {};
  const std::vector<Token> doc_tokens = Tokenize(document_text);

  std::vector<QueryCandidate> candidates;
  std::unordered_set<std::string> seen;
  for (const StrictNounPhrase& phrase : phrases) {
    const std::size_t first = phrase.starts_with_determiner ? 1 : 0;
    QueryCandidate candidate;
    candidate.key = phrase.Key();
    if (candidate.key.empty() || !seen.insert(candidate.key).second) continue;
    for (std::size_t i = first; i < phrase.words.size(); ++i) {
      if (!candidate.query.empty()) candidate.query.push_back(' ');
      candidate.query += phrase.words[i].surface;
    }
    candidate.words = phrase.words.size() - first;
    candidate.snippet_span = {phrase.words[first].start,
                              phrase.words.back().end};
    candidate.doc_freq = CountPhrase(doc_tokens, candidate.key);
    if (candidate.doc_freq == 0) continue;
    candidate.snippet_freq = CountPhrase(snippet_tokens, candidate.key);
    candidates.push_back(std::move(candidate));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const QueryCandidate& a, const QueryCandidate& b) {
              if (a.Score() != b.Score()) return a.Score() > b.Score();
              if (a.words != b.words) return a.words > b.words;
              return a.key < b.key;
            });
  return candidates;
}

TripleBuildResult BuildTriples(std::span<const SnippetTuple> tuples,
                               const DocumentLookup& documents,
                               const TaggerBackend& tagger,
                               const Config& config, int threads) {
  std::vector<std::vector<TrainingTriple>> per_tuple(tuples.size());
  std::vector<TupleOutcome> outcomes(tuples.size(), TupleOutcome::kEmitted);
  ParallelFor(tuples.size(), threads, [&](std::size_t i) {
    const SnippetTuple& tuple = tuples[i];
    const DocumentRecord* doc = documents(tuple.doc_id);
    if (doc == nullptr) {
      outcomes[i] = TupleOutcome::kMissingDocument;
      return;
    }
    const std::vector<QueryCandidate> candidates = CandidateQueries(
        tuple.snippet, doc->plain_text, tagger, config.max_phrase_words);
    if (candidates.empty()) {
      outcomes[i] = TupleOutcome::kNoCandidates;
      return;
    }
    const std::string id = TupleId(tuple);
    const std::size_t take = std::min(candidates.size(), config.max_queries);
    for (std::size_t k = 0; k < take; ++k) {
      TrainingTriple triple;
      triple.triple_id = id + "-" + std::to_string(k + 1);
      triple.query = candidates[k].query;
      triple.snippet = tuple.snippet;
      triple.doc_id = tuple.doc_id;
      triple.query_span = candidates[k].snippet_span;
      triple.provenance = tuple.provenance;
      per_tuple[i].push_back(std::move(triple));
    }
  });
  TripleBuildResult result;
  result.outcomes = std::move(outcomes);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (result.outcomes[i] == TupleOutcome::kMissingDocument) {
      ++result.missing_documents;
    } else if (result.outcomes[i] == TupleOutcome::kNoCandidates) {
      ++result.no_candidates;
    }
    for (TrainingTriple& triple : per_tuple[i]) {
      result.triples.push_back(std::move(triple));
    }
  }
  return result;
}

std::size_t SplitOf(const std::string& doc_id) {
  const std::uint64_t bucket = StableHash(doc_id) % 10;
  if (bucket < 8) return 0;
  return bucket == 8 ? 1 : 2;
}

std::map<std::string, std::vector<TrainingTriple>> SplitTriples(
    std::span<const TrainingTriple> triples) {
  std::map<std::string, std::vector<TrainingTriple>> splits;
  for (std::string_view name : kSplitNames) splits[std::string(name)];
  for (const TrainingTriple& triple : triples) {
    splits[std::string(kSplitNames[SplitOf(triple.doc_id)])].push_back(triple);
  }
  return splits;
}

}  // namespace snipmine

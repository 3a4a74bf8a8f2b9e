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

#ifndef SNIPMINE_EXTRACTIVE_SUMMARIZER_H_
#define SNIPMINE_EXTRACTIVE_SUMMARIZER_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace snipmine {

// Document frequencies of lowercased word terms over a collection of N
// documents. File format: a header line "#documents<TAB>N", then
// "term<TAB>df" lines sorted by term.
class DocumentFrequencyTable {
 public:
  DocumentFrequencyTable() = default;

  static DocumentFrequencyTable Build(std::span<const std::string> documents);
  static DocumentFrequencyTable Parse(std::istream& in);
  static DocumentFrequencyTable Load(const std::string& path);
  void Write(std::ostream& out) const;

  void AddDocument(std::string_view text);
  // Sets a frequency directly, for tables assembled elsewhere.
  void Set(const std::string& term, std::size_t df);
  void SetDocumentCount(std::size_t n) { num_documents_ = n; }

  std::size_t num_documents() const { return num_documents_; }
  std::size_t DocFreq(const std::string& term) const;
  // ln((N + 1) / (df + 1)) + 1
  double Idf(const std::string& term) const;

 private:
  std::size_t num_documents_ = 0;
  std::unordered_map<std::string, std::size_t> df_;
};

// Lowercased word tokens; the term unit for scoring.
std::vector<std::string> Terms(std::string_view text);

// Sum over distinct query terms t of tf(t, sentence) * idf(t).
std::vector<double> QueryTfidfScores(std::string_view query,
                                     std::span<const std::string> sentences,
                                     const DocumentFrequencyTable& table);

std::vector<std::string> DocumentSentences(std::string_view document_text);

// Indices of the k best sentences (ties to the earlier one), ascending.
std::vector<std::size_t> TopSentences(std::span<const double> scores,
                                      std::size_t k);

// Keeps the first `max_words` word tokens; cuts after the last kept word.
std::string TruncateWords(std::string_view text, std::size_t max_words);

// Best `top_k` sentences in document order, truncated to `max_words` words.
std::string ModelInput(std::string_view query, std::string_view document_text,
                       const DocumentFrequencyTable& table,
                       std::size_t top_k = 10, std::size_t max_words = 500);

// Best `k` sentences in document order.
std::string ExtractiveSnippet(std::string_view query,
                              std::string_view document_text,
                              const DocumentFrequencyTable& table,
                              std::size_t k = 3);

}  // namespace snipmine

#endif  // SNIPMINE_EXTRACTIVE_SUMMARIZER_H_

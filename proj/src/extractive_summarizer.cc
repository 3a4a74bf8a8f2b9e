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

#include "snipmine/extractive_summarizer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "snipmine/errors.h"
#include "snipmine/text_analysis.h"

namespace snipmine {

namespace {

constexpr std::string_view kHeader = "#documents";

std::string JoinSentences(std::span<const std::string> sentences,
                          std::span<const std::size_t> picks) {
  std::string out;
  for (std::size_t i : picks) {
    if (!out.empty()) out.push_back(' ');
    out += sentences[i];
  }
  return out;
}

}  // namespace

DocumentFrequencyTable DocumentFrequencyTable::Build(
    std::span<const std::string> documents) {
  DocumentFrequencyTable table;
  for (const std::string& doc : documents) table.AddDocument(doc);
  return table;
}

void DocumentFrequencyTable::AddDocument(std::string_view text) {
  ++num_documents_;
  std::vector<std::string> terms = Terms(text);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  for (std::string& term : terms) ++df_[std::move(term)];
}

void DocumentFrequencyTable::Set(const std::string& term, std::size_t df) {
  df_[term] = df;
}

std::size_t DocumentFrequencyTable::DocFreq(const std::string& term) const {
  auto it = df_.find(term);
  return it == df_.end() ? 0 : it->second;
}

double DocumentFrequencyTable::Idf(const std::string& term) const {
  return std::log(static_cast<double>(num_documents_ + 1) /
                  static_cast<double>(DocFreq(term) + 1)) +
         1.0;
}

DocumentFrequencyTable DocumentFrequencyTable::Parse(std::istream& in) {
  DocumentFrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("df table line " + std::to_string(line_no) +
                       ": expected term<TAB>df");
    }
    const std::string term = line.substr(0, tab);
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw ParseError("df table line " + std::to_string(line_no) +
                       ": bad count");
    }
    if (!have_header) {
      if (term != kHeader) {
        throw ParseError("df table must start with '#documents<TAB>N'");
      }
      table.num_documents_ = value;
      have_header = true;
      continue;
    }
    table.df_[term] = value;
  }
  if (!have_header) throw ParseError("df table is empty");
  return table;
}

DocumentFrequencyTable DocumentFrequencyTable::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open df table " + path);
  return Parse(in);
}

void DocumentFrequencyTable::Write(std::ostream& out) const {
  out << kHeader << '\t' << num_documents_ << '\n';
  std::map<std::string, std::size_t> sorted(df_.begin(), df_.end());
  for (const auto& [term, df] : sorted) out << term << '\t' << df << '\n';
}

std::vector<std::string> Terms(std::string_view text) {
  std::vector<std::string> terms;
  for (const Token& token : WordTokens(text)) {
    terms.push_back(ToLowerAscii(token.surface));
  }
  return terms;
}

std::vector<double> QueryTfidfScores(std::string_view query,
                                     std::span<const std::string> sentences,
                                     const DocumentFrequencyTable& table) {
  std::vector<std::string> query_terms = Terms(query);
  std::sort(query_terms.begin(), query_terms.end());
  query_terms.erase(std::unique(query_terms.begin(), query_terms.end()),
                    query_terms.end());
  std::vector<double> idf;
  for (const std::string& term : query_terms) idf.push_back(table.Idf(term));

  std::vector<double> scores(sentences.size(), 0.0);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const std::vector<std::string> terms = Terms(sentences[s]);
    for (std::size_t q = 0; q < query_terms.size(); ++q) {
      const auto tf = std::count(terms.begin(), terms.end(), query_terms[q]);
      scores[s] += static_cast<double>(tf) * idf[q];
    }
  }
  return scores;
}

std::vector<std::string> DocumentSentences(std::string_view document_text) {
  std::vector<std::string> sentences;
  for (const Span& span : SplitSentences(document_text)) {
    std::string sentence =
        NormalizeWhitespace(document_text.substr(span.start, span.size()));
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  return sentences;
}

std::vector<std::size_t> TopSentences(std::span<const double> scores,
                                      std::size_t k) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  order.resize(std::min(k, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

std::string TruncateWords(std::string_view text, std::size_t max_words) {
  const std::vector<Token> words = WordTokens(text);
  if (words.size() <= max_words) return std::string(text);
  if (max_words == 0) return "";
  return std::string(text.substr(0, words[max_words - 1].end));
}

std::string ModelInput(std::string_view query, std::string_view document_text,
                       const DocumentFrequencyTable& table, std::size_t top_k,
                       std::size_t max_words) {
  const std::vector<std::string> sentences = DocumentSentences(document_text);
  const std::vector<double> scores = QueryTfidfScores(query, sentences, table);
  return TruncateWords(JoinSentences(sentences, TopSentences(scores, top_k)),
                       max_words);
}

std::string ExtractiveSnippet(std::string_view query,
                              std::string_view document_text,
                              const DocumentFrequencyTable& table,
                              std::size_t k) {
  const std::vector<std::string> sentences = DocumentSentences(document_text);
  const std::vector<double> scores = QueryTfidfScores(query, sentences, table);
  return JoinSentences(sentences, TopSentences(scores, k));
}

}  // namespace snipmine

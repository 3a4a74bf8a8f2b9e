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

#ifndef SNIPMINE_METRICS_H_
#define SNIPMINE_METRICS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snipmine/text_analysis.h"

namespace snipmine {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Lowercased word tokens (punctuation dropped, no stemming, no stop-word
// removal).
std::vector<std::string> MetricTokens(std::string_view text);

// Clipped n-gram overlap. Zero scores when either side has no n-grams.
RougeScore RougeN(std::string_view candidate, std::string_view reference,
                  std::size_t n);
RougeScore RougeNTokens(std::span<const std::string> candidate,
                        std::span<const std::string> reference, std::size_t n);

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

RougeScore RougeL(std::string_view candidate, std::string_view reference);
RougeScore RougeLTokens(std::span<const std::string> candidate,
                        std::span<const std::string> reference);

// ROUGE-L precision of the snippet against its document.
double Reuse(std::string_view snippet, std::string_view document_text);

// |S and S^| / |S^| over strict noun phrase keys; 0 when the snippet has none.
double Factuality(std::string_view snippet, std::string_view document_text,
                  const TaggerBackend& tagger,
                  std::size_t max_words = kMaxPhraseWords);

// Scores a token sequence: one natural-log probability per token.
class FluencyBackend {
 public:
  virtual ~FluencyBackend() = default;
  virtual std::vector<double> TokenLogProbs(
      std::span<const std::string> tokens) const = 0;
};

// Every token has probability 1 / vocabulary_size.
class UniformBackend : public FluencyBackend {
 public:
  explicit UniformBackend(double vocabulary_size);
  std::vector<double> TokenLogProbs(
      std::span<const std::string> tokens) const override;

 private:
  double log_prob_;
};

// Word bigram model with add-one smoothing. Each training text starts from a
// sentence-start history; unseen words share one unknown slot, so V is the
// training vocabulary plus one. Read-only after Train().
class BigramLanguageModel : public FluencyBackend {
 public:
  void Train(std::span<const std::string> texts);
  std::vector<double> TokenLogProbs(
      std::span<const std::string> tokens) const override;
  std::size_t vocabulary_size() const { return vocab_.size() + 1; }

 private:
  std::map<std::string, std::size_t> vocab_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bigrams_;
  std::map<std::size_t, std::size_t> histories_;
};

// exp(-mean log p). Throws InvalidInputError when the snippet has no tokens.
double Fluency(std::string_view snippet, const FluencyBackend& backend);

}  // namespace snipmine

#endif  // SNIPMINE_METRICS_H_

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

#include "snipmine/metrics.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>

#include "snipmine/errors.h"

namespace snipmine {

namespace {

RougeScore FromCounts(std::size_t overlap, std::size_t candidate_total,
                      std::size_t reference_total) {
  RougeScore score;
  if (candidate_total == 0 || reference_total == 0) return score;
  score.precision = static_cast<double>(overlap) / candidate_total;
  score.recall = static_cast<double>(overlap) / reference_total;
  const double sum = score.precision + score.recall;
  score.f1 = sum > 0 ? 2 * score.precision * score.recall / sum : 0.0;
  return score;
}

std::map<std::vector<std::string>, std::size_t> NGramCounts(
    std::span<const std::string> tokens, std::size_t n) {
  std::map<std::vector<std::string>, std::size_t> counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + n)];
  }
  return counts;
}

std::set<std::string> PhraseKeys(std::string_view text,
                                 const TaggerBackend& tagger,
                                 std::size_t max_words) {
  std::set<std::string> keys;
  const std::vector<TaggedToken> tagged = TagText(text, tagger);
  for (const StrictNounPhrase& phrase : StrictNounPhrases(tagged, max_words)) {
    keys.insert(phrase.Key());
  }
  return keys;
}

constexpr std::size_t kStart = 0;
constexpr std::size_t kUnknown = 1;

}  // namespace

std::vector<std::string> MetricTokens(std::string_view text) {
  std::vector<std::string> tokens;
  for (const Token& token : WordTokens(text)) {
    tokens.push_back(ToLowerAscii(token.surface));
  }
  return tokens;
}

RougeScore RougeNTokens(std::span<const std::string> candidate,
                        std::span<const std::string> reference,
                        std::size_t n) {
  if (n == 0) throw InvalidInputError("ROUGE-N needs n >= 1");
  const auto cand = NGramCounts(candidate, n);
  const auto ref = NGramCounts(reference, n);
  std::size_t overlap = 0;
  for (const auto& [gram, count] : cand) {
    if (auto it = ref.find(gram); it != ref.end()) {
      overlap += std::min(count, it->second);
    }
  }
  const std::size_t cand_total =
      candidate.size() >= n ? candidate.size() - n + 1 : 0;
  const std::size_t ref_total =
      reference.size() >= n ? reference.size() - n + 1 : 0;
  return FromCounts(overlap, cand_total, ref_total);
}

RougeScore RougeN(std::string_view candidate, std::string_view reference,
                  std::size_t n) {
  return RougeNTokens(MetricTokens(candidate), MetricTokens(reference), n);
}

namespace {

std::size_t LcsDynamic(std::span<const std::string> a,
                       std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Bit-parallel LCS over a reference of at most 64 tokens.
std::size_t LcsBitParallel(std::span<const std::string> a,
                           std::span<const std::string> b) {
  // Match mask of every distinct token of b.
  std::array<const std::string*, 64> surfaces;
  std::array<std::uint64_t, 64> masks{};
  std::size_t distinct = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::size_t k = 0;
    while (k < distinct && *surfaces[k] != b[j]) ++k;
    if (k == distinct) surfaces[distinct++] = &b[j];
    masks[k] |= std::uint64_t{1} << j;
  }
  std::uint64_t v = ~std::uint64_t{0};
  for (const std::string& token : a) {
    std::uint64_t match = 0;
    for (std::size_t k = 0; k < distinct; ++k) {
      if (*surfaces[k] == token) {
        match = masks[k];
        break;
      }
    }
    const std::uint64_t u = v & match;
    v = (v + u) | (v - u);
  }
  const std::uint64_t used =
      b.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b.size()) - 1;
  return b.size() - static_cast<std::size_t>(std::popcount(v & used));
}

}  // namespace

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() <= 64) return LcsBitParallel(a, b);
  return LcsDynamic(a, b);
}

RougeScore RougeLTokens(std::span<const std::string> candidate,
                        std::span<const std::string> reference) {
  return FromCounts(LcsLength(candidate, reference), candidate.size(),
                    reference.size());
}

RougeScore RougeL(std::string_view candidate, std::string_view reference) {
  return RougeLTokens(MetricTokens(candidate), MetricTokens(reference));
}

double Reuse(std::string_view snippet, std::string_view document_text) {
  return RougeL(snippet, document_text).precision;
}

double Factuality(std::string_view snippet, std::string_view document_text,
                  const TaggerBackend& tagger, std::size_t max_words) {
  const std::set<std::string> generated =
      PhraseKeys(snippet, tagger, max_words);
  if (generated.empty()) return 0.0;
  const std::set<std::string> source =
      PhraseKeys(document_text, tagger, max_words);
  std::size_t shared = 0;
  for (const std::string& key : generated) shared += source.count(key);
  return static_cast<double>(shared) / generated.size();
}

UniformBackend::UniformBackend(double vocabulary_size) {
  if (!(vocabulary_size >= 1.0)) {
    throw InvalidInputError("uniform backend needs a vocabulary size >= 1");
  }
  log_prob_ = -std::log(vocabulary_size);
}

std::vector<double> UniformBackend::TokenLogProbs(
    std::span<const std::string> tokens) const {
  return std::vector<double>(tokens.size(), log_prob_);
}

void BigramLanguageModel::Train(std::span<const std::string> texts) {
  // Ids 0 and 1 are the start history and the unknown word.
  std::vector<std::vector<std::string>> tokenized;
  for (const std::string& text : texts) {
    tokenized.push_back(MetricTokens(text));
    for (const std::string& token : tokenized.back()) vocab_.emplace(token, 0);
  }
  std::size_t next_id = 2;
  for (auto& [token, id] : vocab_) id = next_id++;
  for (const auto& tokens : tokenized) {
    std::size_t prev = kStart;
    for (const std::string& token : tokens) {
      const std::size_t id = vocab_.at(token);
      ++bigrams_[{prev, id}];
      ++histories_[prev];
      prev = id;
    }
  }
}

std::vector<double> BigramLanguageModel::TokenLogProbs(
    std::span<const std::string> tokens) const {
  const double v = static_cast<double>(vocabulary_size());
  std::vector<double> out;
  out.reserve(tokens.size());
  std::size_t prev = kStart;
  for (const std::string& token : tokens) {
    auto vit = vocab_.find(token);
    const std::size_t id = vit == vocab_.end() ? kUnknown : vit->second;
    auto bit = bigrams_.find({prev, id});
    const double pair = bit == bigrams_.end() ? 0.0 : bit->second;
    auto hit = histories_.find(prev);
    const double history = hit == histories_.end() ? 0.0 : hit->second;
    out.push_back(std::log((pair + 1.0) / (history + v)));
    prev = id;
  }
  return out;
}

double Fluency(std::string_view snippet, const FluencyBackend& backend) {
  const std::vector<std::string> tokens = MetricTokens(snippet);
  if (tokens.empty()) {
    throw InvalidInputError("fluency is undefined for an empty snippet");
  }
  const std::vector<double> log_probs = backend.TokenLogProbs(tokens);
  double sum = 0.0;
  for (double lp : log_probs) sum += lp;
  return std::exp(-sum / static_cast<double>(tokens.size()));
}

}  // namespace snipmine

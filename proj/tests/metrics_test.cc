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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "snipmine/errors.h"
#include "test_support.h"

namespace snipmine {
namespace {

const TaggerBackend& Tagger() { return LexiconTagger::Bundled(); }

TEST(RougeNTest, HandCounted) {
  const RougeScore s = RougeN("the cat sat", "the cat", 1);
  EXPECT_DOUBLE_EQ(s.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.recall, 1.0);
  EXPECT_DOUBLE_EQ(s.f1, 0.8);
  const RougeScore b = RougeN("the cat sat", "the cat", 2);
  EXPECT_DOUBLE_EQ(b.precision, 0.5);
  EXPECT_DOUBLE_EQ(b.recall, 1.0);
}

TEST(RougeNTest, IdenticalDisjointEmpty) {
  EXPECT_DOUBLE_EQ(RougeN("A b, c.", "a B c", 1).f1, 1.0);
  EXPECT_DOUBLE_EQ(RougeN("a b c", "a b c", 2).f1, 1.0);
  EXPECT_DOUBLE_EQ(RougeN("a b", "c d", 1).f1, 0.0);
  EXPECT_DOUBLE_EQ(RougeN("", "c d", 1).f1, 0.0);
  EXPECT_DOUBLE_EQ(RougeN("a", "a", 2).f1, 0.0);
  EXPECT_THROW(RougeN("a", "a", 0), InvalidInputError);
}

TEST(RougeNTest, ClippedCounts) {
  // "the" appears 3 times in the candidate but once in the reference.
  const RougeScore s = RougeN("the the the", "the cat", 1);
  EXPECT_DOUBLE_EQ(s.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.recall, 0.5);
}

TEST(RougeLTest, HandLcs) {
  const RougeScore s = RougeL("a b c d", "a c d e");
  EXPECT_DOUBLE_EQ(s.precision, 0.75);
  EXPECT_DOUBLE_EQ(s.recall, 0.75);
  EXPECT_DOUBLE_EQ(s.f1, 0.75);
  const std::vector<std::string> fwd = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> rev = {"e", "d", "c", "b", "a"};
  EXPECT_EQ(LcsLength(fwd, rev), 1u);
  EXPECT_DOUBLE_EQ(RougeL("x y z", "x y z").f1, 1.0);
  EXPECT_DOUBLE_EQ(RougeL("", "x").f1, 0.0);
}

TEST(RougeLTest, ExhaustiveOracleShortSequences) {
  for (std::size_t la = 0; la <= 5; ++la) {
    for (std::size_t lb = 0; lb <= 5; ++lb) {
      for (const auto& a : testing::AllSequences(la, 3)) {
        for (const auto& b : testing::AllSequences(lb, 3)) {
          ASSERT_EQ(LcsLength(a, b), testing::BruteForceLcs(a, b));
        }
      }
    }
  }
}

TEST(RougeLTest, PropertiesOnRandomSequences) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> a(rng() % 12);
    std::vector<std::string> b(rng() % 12);
    for (auto& t : a) t = std::string(1, static_cast<char>('a' + rng() % 4));
    for (auto& t : b) t = std::string(1, static_cast<char>('a' + rng() % 4));
    const RougeScore s = RougeLTokens(a, b);
    EXPECT_GE(s.precision, 0.0);
    EXPECT_LE(s.precision, 1.0);
    EXPECT_LE(s.recall, 1.0);
    EXPECT_LE(s.f1, 1.0);
    EXPECT_EQ(LcsLength(a, b), LcsLength(b, a));
    // Precision 1 exactly when a is an in-order subsequence of b.
    const bool subsequence = !a.empty() && testing::BruteForceLcs(a, b) == a.size();
    EXPECT_EQ(s.precision == 1.0, subsequence);
    if (a.size() == b.size()) {
      EXPECT_DOUBLE_EQ(s.f1, RougeLTokens(b, a).f1);
    }
  }
}

TEST(ReuseTest, Cases) {
  const std::string doc = "one two three four five six seven eight";
  EXPECT_DOUBLE_EQ(Reuse("three four five", doc), 1.0);
  EXPECT_DOUBLE_EQ(Reuse("alpha beta", doc), 0.0);
  // Half the tokens form an in-order subsequence of the document.
  EXPECT_DOUBLE_EQ(Reuse("two alpha five beta seven gamma eight delta", doc),
                   0.5);
  EXPECT_DOUBLE_EQ(Reuse("", doc), 0.0);
}

TEST(FactualityTest, Cases) {
  EXPECT_DOUBLE_EQ(Factuality("The red car passed the blue boat.",
                              "A red car was parked.", Tagger()),
                   0.5);
  EXPECT_DOUBLE_EQ(Factuality("The red car stopped.",
                              "I saw a Red Car yesterday.", Tagger()),
                   1.0);
  EXPECT_DOUBLE_EQ(Factuality("and so it is", "anything", Tagger()), 0.0);
}

TEST(FactualityTest, InvariantUnderSentenceReordering) {
  const std::string snippet = "The keeper visited the old harbor and the museum.";
  const std::string a = "The museum is closed. The old harbor is busy.";
  const std::string b = "The old harbor is busy. The museum is closed.";
  EXPECT_DOUBLE_EQ(Factuality(snippet, a, Tagger()),
                   Factuality(snippet, b, Tagger()));
}

class FixedBackend : public FluencyBackend {
 public:
  explicit FixedBackend(double p) : lp_(std::log(p)) {}
  std::vector<double> TokenLogProbs(
      std::span<const std::string> tokens) const override {
    return std::vector<double>(tokens.size(), lp_);
  }

 private:
  double lp_;
};

TEST(FluencyTest, AnalyticIdentities) {
  EXPECT_NEAR(Fluency("one two three", UniformBackend(50)), 50.0, 1e-9);
  EXPECT_NEAR(Fluency("word", FixedBackend(0.5)), 2.0, 1e-12);
  EXPECT_THROW(Fluency("", UniformBackend(50)), InvalidInputError);
  EXPECT_THROW(Fluency(" ... ", UniformBackend(50)), InvalidInputError);
  EXPECT_THROW(UniformBackend(0), InvalidInputError);
}

TEST(BigramLanguageModelTest, HandComputed) {
  BigramLanguageModel lm;
  const std::vector<std::string> corpus = {"a b", "a c"};
  lm.Train(corpus);
  // Vocabulary {a, b, c} plus unknown.
  EXPECT_EQ(lm.vocabulary_size(), 4u);
  const std::vector<std::string> tokens = {"a", "b", "zzz"};
  const auto lps = lm.TokenLogProbs(tokens);
  ASSERT_EQ(lps.size(), 3u);
  EXPECT_NEAR(lps[0], std::log(3.0 / 6.0), 1e-12);  // (2+1)/(2+4)
  EXPECT_NEAR(lps[1], std::log(2.0 / 6.0), 1e-12);  // (1+1)/(2+4)
  EXPECT_NEAR(lps[2], std::log(1.0 / 4.0), 1e-12);  // b never a history
}

TEST(BigramLanguageModelTest, VerbatimBeatsShuffled) {
  std::vector<std::string> corpus;
  for (unsigned i = 0; i < 30; ++i) corpus.push_back(testing::Prose(80, i));
  BigramLanguageModel lm;
  lm.Train(corpus);
  const std::string text = testing::Prose(40, 3);
  std::vector<std::string> words = MetricTokens(text);
  std::mt19937 rng(1);
  std::shuffle(words.begin(), words.end(), rng);
  std::string shuffled;
  for (const auto& w : words) shuffled += w + " ";
  EXPECT_LT(Fluency(text, lm), Fluency(shuffled, lm));
}

}  // namespace
}  // namespace snipmine

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

#ifndef SNIPMINE_TEXT_ANALYSIS_H_
#define SNIPMINE_TEXT_ANALYSIS_H_

#include <cstddef>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace snipmine {

// Half-open byte range [start, end) into some source string.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool operator==(const Span&) const = default;
};

// A token is a maximal run of letters and digits (an apostrophe between two
// letters stays inside the word), or a single punctuation/symbol character.
// Offsets are byte offsets into the UTF-8 source text.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  bool is_letter_only = false;

  // True for letter/digit tokens; punctuation tokens are not words.
  bool IsWord() const;
};

std::vector<Token> Tokenize(std::string_view text);

// Tokens that are words, i.e. punctuation removed.
std::vector<Token> WordTokens(std::string_view text);
std::size_t CountWords(std::string_view text);

// Sentence boundaries: one of . ! ? (optionally followed by closing quotes or
// brackets), then whitespace, then an uppercase letter or digit; a blank line
// also ends a sentence. A period after a word on the abbreviation allowlist
// does not end a sentence. Spans are trimmed of surrounding whitespace.
std::vector<Span> SplitSentences(std::string_view text);

enum class PosTag { kDet, kAdj, kNoun, kVerb, kOther };

std::string_view PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view name);

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kOther;
};

// Pluggable part-of-speech tagger. Implementations return exactly one tag per
// input token or throw TaggingError.
class TaggerBackend {
 public:
  virtual ~TaggerBackend() = default;
  virtual std::vector<PosTag> Tag(std::span<const Token> tokens) const = 0;
};

using WordSet = std::unordered_set<std::string>;

// Lexicon lookup with context and suffix fallbacks:
//  1. punctuation and numbers are OTHER;
//  2. closed-class words, articles and adjectives come from the lexicon;
//  3. "of" between two capitalized words belongs to the name (NOUN);
//  4. known verb forms are VERB unless preceded by an article or adjective;
//  5. unknown words: -ly OTHER, -ing/-ed VERB (NOUN after article/adjective),
//     common adjective suffixes ADJ, everything else NOUN.
class LexiconTagger : public TaggerBackend {
 public:
  LexiconTagger(std::unordered_map<std::string, PosTag> lexicon, WordSet verbs);

  // Tagger over data/tagger_lexicon.tsv and data/verbs.txt.
  static const LexiconTagger& Bundled();
  // Lexicon file format: "word<TAB>TAG" per line.
  static std::unordered_map<std::string, PosTag> ParseLexicon(
      std::string_view contents);

  std::vector<PosTag> Tag(std::span<const Token> tokens) const override;

 private:
  std::unordered_map<std::string, PosTag> lexicon_;
  WordSet verbs_;
};

// Replays precomputed tags from a sidecar file ("token<TAB>TAG" per line).
// The sidecar must list the same token surfaces in the same order.
class SidecarTagger : public TaggerBackend {
 public:
  explicit SidecarTagger(std::vector<std::pair<std::string, PosTag>> entries);
  static SidecarTagger Parse(std::istream& in);
  static SidecarTagger Load(const std::string& path);

  std::vector<PosTag> Tag(std::span<const Token> tokens) const override;

 private:
  std::vector<std::pair<std::string, PosTag>> entries_;
};

std::vector<TaggedToken> TagTokens(std::span<const Token> tokens,
                                   const TaggerBackend& tagger);

// Convenience: Tokenize + TagTokens.
std::vector<TaggedToken> TagText(std::string_view text,
                                 const TaggerBackend& tagger);

struct StrictNounPhrase {
  std::vector<Token> words;
  Span span;
  bool starts_with_determiner = false;

  // Words joined by single spaces.
  std::string Text() const;
  // Text() without the leading article, lowercased words joined by spaces.
  std::string Key() const;
};

inline constexpr std::size_t kMaxPhraseWords = 6;

// Leftmost-longest matches of DET? ADJ* NOUN+ over the tag sequence. A match
// longer than `max_words` is discarded as a whole.
std::vector<StrictNounPhrase> StrictNounPhrases(
    std::span<const TaggedToken> tagged,
    std::size_t max_words = kMaxPhraseWords);

struct WordLists {
  WordSet stop_words;
  WordSet function_words;
  WordSet verbs;

  static const WordLists& Bundled();
  // One lowercase entry per line; blank lines and '#' comments ignored.
  static WordSet ParseList(std::string_view contents);
  static WordSet LoadList(const std::string& path);
};

// Fraction of tokens whose lowercased surface is a stop word.
// Throws InvalidInputError on an empty token list.
double StopwordRatio(std::span<const Token> tokens, const WordSet& stop_words);
double LetterTokenRatio(std::span<const Token> tokens);
bool ContainsVerb(std::span<const TaggedToken> tagged);
bool ContainsWordFrom(std::span<const Token> tokens, const WordSet& words);

// Profile-based identifier. Each word token votes for every language whose
// profile lists it; the winner must cover at least kMinLanguageEvidence of the
// words and strictly beat the runner-up, otherwise "und".
inline constexpr double kMinLanguageEvidence = 0.10;
std::string DetectLanguage(std::string_view text);

std::string ToLowerAscii(std::string_view text);
// Collapses whitespace runs to one space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

}  // namespace snipmine

#endif  // SNIPMINE_TEXT_ANALYSIS_H_

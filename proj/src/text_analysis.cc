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

#include "snipmine/text_analysis.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "snipmine/bundled_data.h"
#include "snipmine/errors.h"
#include "snipmine/utf8.h"

namespace snipmine {

namespace {

bool IsWordChar(char32_t cp) { return utf8::IsLetter(cp) || utf8::IsDigit(cp); }

bool IsApostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Splits `contents` into lines, dropping CRs, blank lines and '#' comments.
std::vector<std::string_view> DataLines(std::string_view contents) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const WordSet& Abbreviations() {
  static const WordSet kAbbreviations = {
      "mr",  "mrs", "ms",  "dr",  "prof", "sr",   "jr",  "st",  "vs",
      "etc", "e.g", "i.e", "inc", "ltd",  "co",   "corp", "no", "fig",
      "approx", "dept", "est", "jan", "feb", "mar", "apr", "jun", "jul",
      "aug", "sep", "sept", "oct", "nov", "dec", "u.s", "u.k", "a.m",
      "p.m", "mt", "ft", "vol", "ed", "gen", "gov", "rev", "cf", "al"};
  return kAbbreviations;
}

bool IsClosingMark(char c) {
  return c == ')' || c == ']' || c == '}' || c == '"' || c == '\'';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool StartsUpper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t len = 0;
  return utf8::IsUpper(utf8::DecodeAt(s, 0, &len));
}

Span Trim(std::string_view text, std::size_t start, std::size_t end) {
  while (start < end && IsAsciiSpace(text[start])) ++start;
  while (end > start && IsAsciiSpace(text[end - 1])) --end;
  return {start, end};
}

}  // namespace

bool Token::IsWord() const {
  if (surface.empty()) return false;
  std::size_t len = 0;
  return IsWordChar(utf8::DecodeAt(surface, 0, &len));
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    const char32_t cp = utf8::DecodeAt(text, pos, &len);
    if (utf8::IsSpace(cp)) {
      pos += len;
      continue;
    }
    Token token;
    token.start = pos;
    if (!IsWordChar(cp)) {
      token.end = pos + len;
      token.surface = std::string(text.substr(pos, len));
      tokens.push_back(std::move(token));
      pos += len;
      continue;
    }
    bool letters_only = utf8::IsLetter(cp);
    char32_t prev = cp;
    std::size_t end = pos + len;
    while (end < text.size()) {
      std::size_t next_len = 0;
      const char32_t next = utf8::DecodeAt(text, end, &next_len);
      if (IsWordChar(next)) {
        letters_only = letters_only && utf8::IsLetter(next);
        prev = next;
        end += next_len;
        continue;
      }
      if (IsApostrophe(next) && utf8::IsLetter(prev) &&
          end + next_len < text.size()) {
        std::size_t after_len = 0;
        const char32_t after = utf8::DecodeAt(text, end + next_len, &after_len);
        if (utf8::IsLetter(after)) {
          prev = after;
          end += next_len + after_len;
          continue;
        }
      }
      break;
    }
    token.end = end;
    token.surface = std::string(text.substr(pos, end - pos));
    token.is_letter_only = letters_only;
    tokens.push_back(std::move(token));
    pos = end;
  }
  return tokens;
}

std::vector<Token> WordTokens(std::string_view text) {
  std::vector<Token> tokens = Tokenize(text);
  std::erase_if(tokens, [](const Token& t) { return !t.IsWord(); });
  return tokens;
}

std::size_t CountWords(std::string_view text) {
  const std::vector<Token> tokens = Tokenize(text);
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [](const Token& t) { return t.IsWord(); }));
}

std::vector<Span> SplitSentences(std::string_view text) {
  std::vector<Span> spans;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    const Span span = Trim(text, start, end);
    if (span.start < span.end) spans.push_back(span);
    start = end;
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' ||
                                 text[j] == '\r')) {
        ++j;
      }
      if (j < text.size() && text[j] == '\n') {
        emit(i);
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() &&
           (text[j] == '.' || text[j] == '!' || text[j] == '?')) {
      ++j;
    }
    while (j < text.size() && IsClosingMark(text[j])) ++j;
    // Closing curly quote U+201D / U+2019.
    while (j + 2 < text.size() &&
           static_cast<unsigned char>(text[j]) == 0xE2 &&
           static_cast<unsigned char>(text[j + 1]) == 0x80 &&
           (static_cast<unsigned char>(text[j + 2]) == 0x9D ||
            static_cast<unsigned char>(text[j + 2]) == 0x99)) {
      j += 3;
    }
    if (j >= text.size() || !IsAsciiSpace(text[j])) {
      i = j > i ? j : i + 1;
      continue;
    }
    std::size_t k = j;
    while (k < text.size() && IsAsciiSpace(text[k])) ++k;
    if (k >= text.size()) {
      i = k;
      continue;
    }
    std::size_t next = k;
    while (next < text.size() &&
           (text[next] == '"' || text[next] == '\'' || text[next] == '(' ||
            text[next] == '[')) {
      ++next;
    }
    std::size_t len = 0;
    const char32_t first =
        next < text.size() ? utf8::DecodeAt(text, next, &len) : 0;
    if (!(utf8::IsUpper(first) || utf8::IsDigit(first))) {
      i = j;
      continue;
    }
    if (c == '.' && j == i + 1) {
      std::size_t w = i;
      while (w > start &&
             ((text[w - 1] >= 'a' && text[w - 1] <= 'z') ||
              (text[w - 1] >= 'A' && text[w - 1] <= 'Z') ||
              text[w - 1] == '.')) {
        --w;
      }
      if (w < i && Abbreviations().contains(
                       ToLowerAscii(text.substr(w, i - w)))) {
        i = j;
        continue;
      }
    }
    emit(j);
    i = j;
  }
  emit(text.size());
  return spans;
}

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kDet:
      return "DET";
    case PosTag::kAdj:
      return "ADJ";
    case PosTag::kNoun:
      return "NOUN";
    case PosTag::kVerb:
      return "VERB";
    case PosTag::kOther:
      return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> ParsePosTag(std::string_view name) {
  static constexpr std::array<PosTag, 5> kAll = {
      PosTag::kDet, PosTag::kAdj, PosTag::kNoun, PosTag::kVerb, PosTag::kOther};
  for (PosTag tag : kAll) {
    if (PosTagName(tag) == name) return tag;
  }
  return std::nullopt;
}

LexiconTagger::LexiconTagger(std::unordered_map<std::string, PosTag> lexicon,
                             WordSet verbs)
    : lexicon_(std::move(lexicon)), verbs_(std::move(verbs)) {}

const LexiconTagger& LexiconTagger::Bundled() {
  static const LexiconTagger* const kTagger = new LexiconTagger(
      ParseLexicon(bundled::TaggerLexicon()), WordLists::Bundled().verbs);
  return *kTagger;
}

std::unordered_map<std::string, PosTag> LexiconTagger::ParseLexicon(
    std::string_view contents) {
  std::unordered_map<std::string, PosTag> lexicon;
  for (std::string_view line : DataLines(contents)) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError("lexicon line without tab: " + std::string(line));
    }
    const std::optional<PosTag> tag = ParsePosTag(line.substr(tab + 1));
    if (!tag) throw ParseError("unknown tag in lexicon: " + std::string(line));
    lexicon.emplace(ToLowerAscii(line.substr(0, tab)), *tag);
  }
  return lexicon;
}

std::vector<PosTag> LexiconTagger::Tag(std::span<const Token> tokens) const {
  std::vector<PosTag> tags(tokens.size(), PosTag::kOther);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    if (!token.IsWord() || !token.is_letter_only) {
      tags[i] = PosTag::kOther;
      continue;
    }
    const std::string lower = ToLowerAscii(token.surface);
    const bool after_modifier =
        i > 0 && (tags[i - 1] == PosTag::kDet || tags[i - 1] == PosTag::kAdj);

    if (lower == "of" && i > 0 && i + 1 < tokens.size() &&
        tokens[i - 1].is_letter_only && StartsUpper(tokens[i - 1].surface) &&
        tokens[i + 1].is_letter_only && StartsUpper(tokens[i + 1].surface)) {
      tags[i] = PosTag::kNoun;
      continue;
    }
    if (auto it = lexicon_.find(lower); it != lexicon_.end()) {
      tags[i] = it->second;
      continue;
    }
    if (verbs_.contains(lower)) {
      tags[i] = after_modifier ? PosTag::kNoun : PosTag::kVerb;
      continue;
    }
    if (lower.size() > 4 && EndsWith(lower, "ly")) {
      tags[i] = PosTag::kOther;
    } else if (lower.size() > 5 && EndsWith(lower, "ing")) {
      tags[i] = after_modifier ? PosTag::kNoun : PosTag::kVerb;
    } else if (lower.size() > 4 && EndsWith(lower, "ed")) {
      tags[i] = after_modifier ? PosTag::kAdj : PosTag::kVerb;
    } else if (lower.size() > 5 &&
               (EndsWith(lower, "ous") || EndsWith(lower, "ful") ||
                EndsWith(lower, "ive") || EndsWith(lower, "able") ||
                EndsWith(lower, "ible") || EndsWith(lower, "ical") ||
                EndsWith(lower, "less") || EndsWith(lower, "ish"))) {
      tags[i] = PosTag::kAdj;
    } else {
      tags[i] = PosTag::kNoun;
    }
  }
  return tags;
}

SidecarTagger::SidecarTagger(
    std::vector<std::pair<std::string, PosTag>> entries)
    : entries_(std::move(entries)) {}

SidecarTagger SidecarTagger::Parse(std::istream& in) {
  std::vector<std::pair<std::string, PosTag>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw ParseError("sidecar line " + std::to_string(line_no) +
                       ": expected token<TAB>tag");
    }
    const std::optional<PosTag> tag =
        ParsePosTag(std::string_view(line).substr(tab + 1));
    if (!tag) {
      throw ParseError("sidecar line " + std::to_string(line_no) +
                       ": unknown tag");
    }
    entries.emplace_back(line.substr(0, tab), *tag);
  }
  return SidecarTagger(std::move(entries));
}

SidecarTagger SidecarTagger::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sidecar " + path);
  return Parse(in);
}

std::vector<PosTag> SidecarTagger::Tag(std::span<const Token> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i >= entries_.size()) {
      throw TaggingError(i, "sidecar has only " +
                                std::to_string(entries_.size()) + " entries");
    }
    if (entries_[i].first != tokens[i].surface) {
      throw TaggingError(i, "sidecar token '" + entries_[i].first +
                                "' does not match '" + tokens[i].surface + "'");
    }
    tags.push_back(entries_[i].second);
  }
  if (entries_.size() != tokens.size()) {
    throw TaggingError(tokens.size(), "sidecar has extra entries");
  }
  return tags;
}

std::vector<TaggedToken> TagTokens(std::span<const Token> tokens,
                                   const TaggerBackend& tagger) {
  std::vector<PosTag> tags = tagger.Tag(tokens);
  if (tags.size() != tokens.size()) {
    throw TaggingError(std::min(tags.size(), tokens.size()),
                       "backend returned wrong number of tags");
  }
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    tagged.push_back({tokens[i], tags[i]});
  }
  return tagged;
}

std::vector<TaggedToken> TagText(std::string_view text,
                                 const TaggerBackend& tagger) {
  const std::vector<Token> tokens = Tokenize(text);
  return TagTokens(tokens, tagger);
}

std::string StrictNounPhrase::Text() const {
  std::string text;
  for (const Token& word : words) {
    if (!text.empty()) text.push_back(' ');
    text += word.surface;
  }
  return text;
}

std::string StrictNounPhrase::Key() const {
  std::string key;
  for (std::size_t i = starts_with_determiner ? 1 : 0; i < words.size(); ++i) {
    if (!key.empty()) key.push_back(' ');
    key += ToLowerAscii(words[i].surface);
  }
  return key;
}

std::vector<StrictNounPhrase> StrictNounPhrases(
    std::span<const TaggedToken> tagged, std::size_t max_words) {
  std::vector<StrictNounPhrase> phrases;
  std::size_t i = 0;
  while (i < tagged.size()) {
    std::size_t j = i;
    const bool has_det = tagged[j].tag == PosTag::kDet;
    if (has_det) ++j;
    while (j < tagged.size() && tagged[j].tag == PosTag::kAdj) ++j;
    const std::size_t noun_start = j;
    while (j < tagged.size() && tagged[j].tag == PosTag::kNoun) ++j;
    if (j == noun_start) {
      // No head noun; restart after the first token of the failed attempt.
      ++i;
      continue;
    }
    if (j - i <= max_words) {
      StrictNounPhrase phrase;
      phrase.starts_with_determiner = has_det;
      for (std::size_t k = i; k < j; ++k) phrase.words.push_back(tagged[k].token);
      phrase.span = {tagged[i].token.start, tagged[j - 1].token.end};
      phrases.push_back(std::move(phrase));
    }
    i = j;
  }
  return phrases;
}

const WordLists& WordLists::Bundled() {
  static const WordLists* const kLists = new WordLists{
      ParseList(bundled::StopWords()), ParseList(bundled::FunctionWords()),
      ParseList(bundled::Verbs())};
  return *kLists;
}

WordSet WordLists::ParseList(std::string_view contents) {
  WordSet words;
  for (std::string_view line : DataLines(contents)) {
    std::size_t end = line.size();
    while (end > 0 && IsAsciiSpace(line[end - 1])) --end;
    if (end > 0) words.insert(ToLowerAscii(line.substr(0, end)));
  }
  return words;
}

WordSet WordLists::LoadList(const std::string& path) {
  WordSet words = ParseList(ReadFile(path));
  if (words.empty()) throw ConfigError("word list is empty: " + path);
  return words;
}

double StopwordRatio(std::span<const Token> tokens, const WordSet& stop_words) {
  if (tokens.empty()) throw InvalidInputError("stop-word ratio of no tokens");
  std::size_t hits = 0;
  for (const Token& token : tokens) {
    if (stop_words.contains(ToLowerAscii(token.surface))) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(tokens.size());
}

double LetterTokenRatio(std::span<const Token> tokens) {
  if (tokens.empty()) throw InvalidInputError("letter ratio of no tokens");
  const auto letters = std::count_if(
      tokens.begin(), tokens.end(),
      [](const Token& t) { return t.is_letter_only; });
  return static_cast<double>(letters) / static_cast<double>(tokens.size());
}

bool ContainsVerb(std::span<const TaggedToken> tagged) {
  return std::any_of(tagged.begin(), tagged.end(), [](const TaggedToken& t) {
    return t.tag == PosTag::kVerb;
  });
}

bool ContainsWordFrom(std::span<const Token> tokens, const WordSet& words) {
  return std::any_of(tokens.begin(), tokens.end(), [&](const Token& t) {
    return words.contains(ToLowerAscii(t.surface));
  });
}

namespace {

struct LanguageProfiles {
  std::vector<std::string> languages;
  // word -> bitmask over `languages`
  std::unordered_map<std::string, std::uint32_t> membership;
};

const LanguageProfiles& Profiles() {
  static const LanguageProfiles* const kProfiles = [] {
    auto* profiles = new LanguageProfiles;
    for (std::string_view line : DataLines(bundled::LanguageProfiles())) {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) continue;
      const std::string lang(line.substr(0, tab));
      auto it = std::find(profiles->languages.begin(),
                          profiles->languages.end(), lang);
      std::size_t index = static_cast<std::size_t>(
          it - profiles->languages.begin());
      if (it == profiles->languages.end()) profiles->languages.push_back(lang);
      profiles->membership[std::string(line.substr(tab + 1))] |=
          std::uint32_t{1} << index;
    }
    return profiles;
  }();
  return *kProfiles;
}

}  // namespace

std::string DetectLanguage(std::string_view text) {
  const LanguageProfiles& profiles = Profiles();
  std::vector<std::size_t> hits(profiles.languages.size(), 0);
  std::size_t words = 0;
  for (const Token& token : Tokenize(text)) {
    if (!token.is_letter_only) continue;
    ++words;
    auto it = profiles.membership.find(ToLowerAscii(token.surface));
    if (it == profiles.membership.end()) continue;
    for (std::size_t l = 0; l < hits.size(); ++l) {
      if (it->second & (std::uint32_t{1} << l)) ++hits[l];
    }
  }
  if (words == 0) return "und";
  std::size_t best = 0;
  std::size_t runner_up = 0;
  std::size_t best_index = 0;
  for (std::size_t l = 0; l < hits.size(); ++l) {
    if (hits[l] > best) {
      runner_up = best;
      best = hits[l];
      best_index = l;
    } else if (hits[l] > runner_up) {
      runner_up = hits[l];
    }
  }
  if (best == runner_up) return "und";
  if (static_cast<double>(best) <
      kMinLanguageEvidence * static_cast<double>(words)) {
    return "und";
  }
  return profiles.languages[best_index];
}

std::string ToLowerAscii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    const char32_t cp = utf8::DecodeAt(text, pos, &len);
    if (utf8::IsSpace(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(text.substr(pos, len));
    }
    pos += len;
  }
  return out;
}

}  // namespace snipmine

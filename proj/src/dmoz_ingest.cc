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

#include "snipmine/dmoz_ingest.h"

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string_view>

#include "snipmine/errors.h"
#include "snipmine/html.h"
#include "snipmine/parallel.h"
#include "snipmine/text_analysis.h"
#include "snipmine/url.h"
#include "snipmine/utf8.h"

namespace snipmine {

namespace {

std::optional<std::string> Attribute(std::string_view tag,
                                     std::string_view name) {
  std::size_t pos = 0;
  while ((pos = tag.find(name, pos)) != std::string_view::npos) {
    const bool boundary =
        pos > 0 && utf8::IsSpace(static_cast<unsigned char>(tag[pos - 1]));
    std::size_t i = pos + name.size();
    while (i < tag.size() && tag[i] == ' ') ++i;
    if (!boundary || i >= tag.size() || tag[i] != '=') {
      pos += name.size();
      continue;
    }
    ++i;
    while (i < tag.size() && tag[i] == ' ') ++i;
    if (i >= tag.size()) return std::nullopt;
    const char quote = tag[i];
    if (quote != '"' && quote != '\'') return std::nullopt;
    const std::size_t close = tag.find(quote, i + 1);
    if (close == std::string_view::npos) return std::nullopt;
    return std::string(tag.substr(i + 1, close - i - 1));
  }
  return std::nullopt;
}

// Text of the first <name>...</name> child, with or without the "d:" prefix.
std::optional<std::string> Child(std::string_view element,
                                 std::string_view name) {
  for (const std::string prefix : {"d:", ""}) {
    const std::string open = "<" + prefix + std::string(name) + ">";
    const std::string close = "</" + prefix + std::string(name) + ">";
    const std::size_t start = element.find(open);
    if (start == std::string_view::npos) continue;
    const std::size_t body = start + open.size();
    const std::size_t end = element.find(close, body);
    if (end == std::string_view::npos) return std::nullopt;
    return NormalizeWhitespace(DecodeEntities(element.substr(body, end - body)));
  }
  return std::nullopt;
}

class EntrySink {
 public:
  EntrySink(std::vector<DirectoryEntry>* out, DirectoryParseStats* stats)
      : out_(out), stats_(stats) {}

  void Add(DirectoryEntry entry, std::size_t ordinal) {
    entry.description = NormalizeWhitespace(entry.description);
    if (entry.description.empty()) {
      Skip(ordinal, "missing description");
      return;
    }
    if (!ParseUrl(entry.url)) {
      Skip(ordinal, "invalid url '" + entry.url + "'");
      return;
    }
    out_->push_back(std::move(entry));
    if (stats_ != nullptr) ++stats_->entries;
  }

  void Skip(std::size_t ordinal, const std::string& why) {
    if (stats_ == nullptr) return;
    ++stats_->skipped;
    stats_->warnings.push_back("entry " + std::to_string(ordinal) + ": " + why);
  }

 private:
  std::vector<DirectoryEntry>* out_;
  DirectoryParseStats* stats_;
};

void ParseRdf(std::string_view dump, EntrySink* sink) {
  static constexpr std::string_view kOpen = "<ExternalPage";
  static constexpr std::string_view kClose = "</ExternalPage>";
  std::size_t pos = 0;
  std::size_t ordinal = 0;
  while ((pos = dump.find(kOpen, pos)) != std::string_view::npos) {
    ++ordinal;
    const std::size_t tag_end = dump.find('>', pos);
    if (tag_end == std::string_view::npos) {
      sink->Skip(ordinal, "unterminated ExternalPage tag");
      return;
    }
    const std::string_view tag = dump.substr(pos, tag_end - pos + 1);
    const std::optional<std::string> about = Attribute(tag, "about");
    if (tag.size() >= 2 && tag[tag.size() - 2] == '/') {
      sink->Skip(ordinal, "empty ExternalPage element");
      pos = tag_end + 1;
      continue;
    }
    const std::size_t close = dump.find(kClose, tag_end);
    const std::size_t next_open = dump.find(kOpen, tag_end);
    if (close == std::string_view::npos ||
        (next_open != std::string_view::npos && next_open < close)) {
      sink->Skip(ordinal, "unclosed ExternalPage element");
      pos = tag_end + 1;
      continue;
    }
    const std::string_view body = dump.substr(tag_end + 1, close - tag_end - 1);
    pos = close + kClose.size();
    if (!about) {
      sink->Skip(ordinal, "missing about attribute");
      continue;
    }
    DirectoryEntry entry;
    entry.url = DecodeEntities(*about);
    entry.title = Child(body, "Title").value_or("");
    entry.description = Child(body, "Description").value_or("");
    entry.category_path = Child(body, "topic").value_or("");
    sink->Add(std::move(entry), ordinal);
  }
}

void ParseTsv(std::string_view dump, EntrySink* sink) {
  std::size_t ordinal = 0;
  std::size_t start = 0;
  while (start < dump.size()) {
    std::size_t end = dump.find('\n', start);
    if (end == std::string_view::npos) end = dump.size();
    std::string_view line = dump.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (NormalizeWhitespace(line).empty() || line.front() == '#') continue;
    ++ordinal;
    std::vector<std::string> fields;
    std::size_t field_start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', field_start);
      fields.emplace_back(line.substr(field_start, tab - field_start));
      if (tab == std::string_view::npos) break;
      field_start = tab + 1;
    }
    if (fields.size() < 3 || fields.size() > 4) {
      sink->Skip(ordinal, "expected 3 or 4 tab-separated fields");
      continue;
    }
    DirectoryEntry entry;
    entry.url = fields[0];
    entry.title = NormalizeWhitespace(fields[1]);
    entry.description = fields[2];
    if (fields.size() == 4) entry.category_path = fields[3];
    sink->Add(std::move(entry), ordinal);
  }
}

}  // namespace

std::vector<DirectoryEntry> ParseDirectoryDump(std::istream& in,
                                               DirectoryParseStats* stats) {
  const std::string dump((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<DirectoryEntry> entries;
  EntrySink sink(&entries, stats);
  const std::size_t first = dump.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && dump[first] == '<') {
    ParseRdf(dump, &sink);
  } else {
    ParseTsv(dump, &sink);
  }
  return entries;
}

std::vector<DirectoryEntry> ReadDirectoryDump(const std::string& path,
                                              DirectoryParseStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open directory dump " + path);
  return ParseDirectoryDump(in, stats);
}

Verdict EvaluateDescription(const DirectoryEntry& entry,
                            const StepResources& res, const Config& config) {
  const DocumentEntry* target = res.ResolveTarget(entry.url);
  if (target == nullptr) return Verdict::Drop(DropReason::kTargetUnavailable);
  if (DetectLanguage(entry.description) != "en") {
    return Verdict::Drop(DropReason::kNonEnglish);
  }
  const std::vector<Token> tokens = Tokenize(entry.description);
  std::vector<Token> words;
  for (const Token& token : tokens) {
    if (token.IsWord()) words.push_back(token);
  }
  if (words.size() < config.min_context_words) {
    return Verdict::Drop(DropReason::kContextTooShort);
  }
  if (!ContainsVerb(TagTokens(tokens, *res.tagger))) {
    return Verdict::Drop(DropReason::kNoVerb);
  }
  const double ratio = StopwordRatio(words, res.word_lists->stop_words);
  if (ratio < config.min_stopword_ratio || ratio > config.max_stopword_ratio) {
    return Verdict::Drop(DropReason::kStopwordRatio);
  }
  if (target->record.word_count < config.min_target_words) {
    return Verdict::Drop(DropReason::kShortPage);
  }
  return Verdict::Keep();
}

DirectoryFilterResult FilterDescriptions(std::span<const DirectoryEntry> entries,
                                         const StepResources& res,
                                         const Config& config, int threads) {
  std::vector<Verdict> verdicts(entries.size());
  ParallelFor(entries.size(), threads, [&](std::size_t i) {
    verdicts[i] = EvaluateDescription(entries[i], res, config);
  });
  DirectoryFilterResult result;
  result.outcomes.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    result.outcomes.push_back(verdicts[i].reason);
    if (!verdicts[i].keep) {
      ++result.drops[verdicts[i].reason];
      continue;
    }
    SnippetTuple tuple;
    tuple.snippet = entries[i].description;
    tuple.doc_id = res.ResolveTarget(entries[i].url)->record.doc_id;
    tuple.provenance = Provenance::kDirectory;
    tuple.source = entries[i].category_path;
    tuple.target_url = entries[i].url;
    result.tuples.push_back(std::move(tuple));
  }
  return result;
}

}  // namespace snipmine

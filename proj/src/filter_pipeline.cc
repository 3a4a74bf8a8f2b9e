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

#include "snipmine/filter_pipeline.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "snipmine/errors.h"
#include "snipmine/near_dup.h"
#include "snipmine/parallel.h"
#include "snipmine/pipeline_kernels.h"
#include "snipmine/url.h"

namespace snipmine {

std::string_view DropReasonName(DropReason reason) {
  switch (reason) {
    case DropReason::kNone:
      return "kept";
    case DropReason::kMissingSource:
      return "missing-source";
    case DropReason::kInvalidUrl:
      return "invalid-url";
    case DropReason::kIntraSite:
      return "intra-site";
    case DropReason::kTargetUnavailable:
      return "target-unavailable";
    case DropReason::kMissingTarget:
      return "missing-target";
    case DropReason::kNonEnglish:
      return "non-english";
    case DropReason::kSpam:
      return "spam";
    case DropReason::kEmptyAnchor:
      return "empty-anchor";
    case DropReason::kStopAnchorWord:
      return "stop-anchor-word";
    case DropReason::kMultiLink:
      return "multi-link";
    case DropReason::kAnchorTooLong:
      return "anchor-too-long";
    case DropReason::kContextTooShort:
      return "context-too-short";
    case DropReason::kSentenceTooShort:
      return "sentence-too-short";
    case DropReason::kNoVerb:
      return "no-verb";
    case DropReason::kStopwordRatio:
      return "stopword-ratio";
    case DropReason::kNearDuplicate:
      return "near-duplicate";
    case DropReason::kTextReuse:
      return "text-reuse";
    case DropReason::kShortPage:
      return "short-page";
  }
  return "unknown";
}

StepResources StepResources::FromDocuments(std::vector<DocumentRecord> docs,
                                           int threads) {
  StepResources res;
  res.page_index = PageIndex::Build(docs);
  std::vector<DocumentEntry> entries(docs.size());
  ParallelFor(docs.size(), threads, [&](std::size_t i) {
    DocumentEntry& entry = entries[i];
    entry.record = std::move(docs[i]);
    entry.record.word_count = CountWords(entry.record.plain_text);
    entry.language = entry.record.language
                         ? *entry.record.language
                         : DetectLanguage(entry.record.plain_text);
    entry.normalized_text = NormalizeWhitespace(entry.record.plain_text);
  });
  for (DocumentEntry& entry : entries) {
    const std::string id = entry.record.doc_id;
    res.documents.emplace(id, std::move(entry));
  }
  return res;
}

const DocumentEntry* StepResources::FindDocument(
    const std::string& doc_id) const {
  auto it = documents.find(doc_id);
  return it == documents.end() ? nullptr : &it->second;
}

const DocumentEntry* StepResources::ResolveTarget(
    std::string_view target_url) const {
  const std::optional<std::string> doc_id = page_index.Lookup(target_url);
  return doc_id ? FindDocument(*doc_id) : nullptr;
}

std::optional<int> StepResources::SpamPercentile(
    const std::string& doc_id) const {
  if (auto it = spam_scores.find(doc_id); it != spam_scores.end()) {
    return it->second;
  }
  if (const DocumentEntry* entry = FindDocument(doc_id)) {
    return entry->record.spam_percentile;
  }
  return std::nullopt;
}

std::unordered_map<std::string, int> ParseSpamScores(std::istream& in) {
  std::unordered_map<std::string, int> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string doc_id;
    int percentile = -1;
    std::string extra;
    if (!(fields >> doc_id >> percentile) || (fields >> extra) ||
        percentile < 0 || percentile > 100) {
      throw ParseError("spam scores line " + std::to_string(line_no) +
                       ": expected doc_id<TAB>percentile (0-100)");
    }
    scores.emplace(doc_id, percentile);
  }
  return scores;
}

std::unordered_map<std::string, int> LoadSpamScores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spam scores " + path);
  return ParseSpamScores(in);
}

std::unordered_set<std::string> ParseQrels(std::istream& in) {
  std::unordered_set<std::string> judged;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string topic, iteration, doc_id, judgment;
    if (!(fields >> topic)) continue;
    if (!(fields >> iteration >> doc_id >> judgment)) {
      throw ParseError("qrels line " + std::to_string(line_no) +
                       ": expected 'topic iteration doc_id judgment'");
    }
    judged.insert(doc_id);
  }
  return judged;
}

std::unordered_set<std::string> LoadQrels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open qrels " + path);
  return ParseQrels(in);
}

Verdict StepIntraSite(const AnchorContextRecord& rec, const StepResources& res) {
  const DocumentEntry* source = res.FindDocument(rec.source_doc_id);
  if (source == nullptr) return Verdict::Drop(DropReason::kMissingSource);
  try {
    if (RegistrableDomain(source->record.url) ==
        RegistrableDomain(rec.target_url)) {
      return Verdict::Drop(DropReason::kIntraSite);
    }
  } catch (const ParseError&) {
    return Verdict::Drop(DropReason::kInvalidUrl);
  }
  return Verdict::Keep();
}

Verdict StepTargetAvailable(const AnchorContextRecord& rec,
                            const StepResources& res) {
  return res.page_index.Lookup(rec.target_url)
             ? Verdict::Keep()
             : Verdict::Drop(DropReason::kTargetUnavailable);
}

Verdict StepTargetEnglish(const AnchorContextRecord& rec,
                          const StepResources& res) {
  const DocumentEntry* target = res.ResolveTarget(rec.target_url);
  if (target == nullptr) return Verdict::Drop(DropReason::kMissingTarget);
  return target->language == "en" ? Verdict::Keep()
                                  : Verdict::Drop(DropReason::kNonEnglish);
}

Verdict StepSpam(const AnchorContextRecord& rec, const StepResources& res,
                 const Config& config) {
  const DocumentEntry* target = res.ResolveTarget(rec.target_url);
  if (target == nullptr) return Verdict::Drop(DropReason::kMissingTarget);
  if (res.judged_pages.contains(target->record.doc_id)) return Verdict::Keep();
  const std::optional<int> percentile =
      res.SpamPercentile(target->record.doc_id);
  if (percentile && *percentile >= config.spam_min_percentile) {
    return Verdict::Keep();
  }
  return Verdict::Drop(DropReason::kSpam);
}

std::size_t AnchorGap(const Span& a, const Span& b) {
  if (b.start >= a.end) return b.start - a.end;
  if (a.start >= b.end) return a.start - b.end;
  return 0;
}

Verdict StepStopAnchor(const AnchorContextRecord& rec,
                       std::span<const Span> page_anchors,
                       const Config& config) {
  if (NormalizeWhitespace(rec.anchor_text).empty()) {
    return Verdict::Drop(DropReason::kEmptyAnchor);
  }
  const std::string anchor = ToLowerAscii(rec.anchor_text);
  for (const std::string& word : config.stop_anchor_words) {
    if (!word.empty() && anchor.find(ToLowerAscii(word)) != std::string::npos) {
      return Verdict::Drop(DropReason::kStopAnchorWord);
    }
  }
  bool skipped_self = false;
  for (const Span& other : page_anchors) {
    if (!skipped_self && other == rec.page_anchor) {
      skipped_self = true;
      continue;
    }
    if (AnchorGap(rec.page_anchor, other) < config.min_anchor_distance_chars) {
      return Verdict::Drop(DropReason::kMultiLink);
    }
  }
  return Verdict::Keep();
}

std::size_t AnchorSentenceWords(const AnchorContextRecord& rec) {
  const std::vector<Span> sentences = SplitSentences(rec.context);
  const std::string_view context(rec.context);
  for (const Span& sentence : sentences) {
    if (rec.anchor_span.start < sentence.end) {
      return CountWords(context.substr(sentence.start, sentence.size()));
    }
  }
  return 0;
}

Verdict StepImproperText(const AnchorContextRecord& rec,
                         const StepResources& res, const Config& config) {
  if (CountWords(rec.anchor_text) > config.max_anchor_words) {
    return Verdict::Drop(DropReason::kAnchorTooLong);
  }
  const std::vector<Token> tokens = Tokenize(rec.context);
  std::vector<Token> words;
  for (const Token& token : tokens) {
    if (token.IsWord()) words.push_back(token);
  }
  if (words.size() < config.min_context_words) {
    return Verdict::Drop(DropReason::kContextTooShort);
  }
  if (AnchorSentenceWords(rec) < config.min_sentence_words) {
    return Verdict::Drop(DropReason::kSentenceTooShort);
  }
  if (!ContainsVerb(TagTokens(tokens, *res.tagger))) {
    return Verdict::Drop(DropReason::kNoVerb);
  }
  const double ratio = StopwordRatio(words, res.word_lists->stop_words);
  if (ratio < config.min_stopword_ratio || ratio > config.max_stopword_ratio) {
    return Verdict::Drop(DropReason::kStopwordRatio);
  }
  return Verdict::Keep();
}

Verdict StepTextReuse(const AnchorContextRecord& rec, const StepResources& res) {
  const DocumentEntry* target = res.ResolveTarget(rec.target_url);
  if (target == nullptr) return Verdict::Drop(DropReason::kMissingTarget);
  const std::string context = NormalizeWhitespace(rec.context);
  if (target->normalized_text.find(context) != std::string::npos) {
    return Verdict::Drop(DropReason::kTextReuse);
  }
  return Verdict::Keep();
}

Verdict StepShortPage(const AnchorContextRecord& rec, const StepResources& res,
                      const Config& config) {
  const DocumentEntry* target = res.ResolveTarget(rec.target_url);
  if (target == nullptr) return Verdict::Drop(DropReason::kMissingTarget);
  return target->record.word_count >= config.min_target_words
             ? Verdict::Keep()
             : Verdict::Drop(DropReason::kShortPage);
}

std::string FormatDelta(std::size_t previous, std::size_t remaining) {
  if (previous == 0 || remaining >= previous) return "-0.0%";
  const std::uint64_t dropped = previous - remaining;
  // Tenths of a percent, rounded half away from zero in integer arithmetic.
  const std::uint64_t tenths = (dropped * 2000 + previous) / (2 * previous);
  return "-" + std::to_string(tenths / 10) + "." + std::to_string(tenths % 10) +
         "%";
}

std::string GroupThousands(std::size_t value) {
  const std::string digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

const std::array<std::string_view, kPipelineSteps + 1>& StepNames() {
  static constexpr std::array<std::string_view, kPipelineSteps + 1> kNames = {
      "Raw anchor contexts", "1. Intra-site links", "2. Non-existing pages",
      "3. Non-English pages", "4. Spam anchors",    "5. Stop anchors",
      "6. Improper text",    "7. Duplicated",       "8. Text reuse",
      "9. Short web pages"};
  return kNames;
}

std::size_t PipelineStats::Previous(std::size_t step_index) const {
  return step_index == 0 ? input : steps[step_index - 1].remaining;
}

std::string PipelineStats::ToTsv(const Config* config) const {
  std::ostringstream out;
  if (config != nullptr) {
    for (const auto& [key, value] : ConfigEntries(*config)) {
      out << "# " << key << '=' << value << '\n';
    }
  }
  out << "step\tremaining\tdelta\n";
  out << StepNames()[0] << '\t' << input << "\t\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << steps[i].name << '\t' << steps[i].remaining << '\t'
        << FormatDelta(Previous(i), steps[i].remaining) << '\n';
  }
  return out.str();
}

std::string PipelineStats::ToText() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-24s %16s %8s\n", "Mining pipeline",
                "Remaining", "Delta");
  out << line;
  std::snprintf(line, sizeof(line), "%-24s %16s %8s\n", StepNames()[0].data(),
                GroupThousands(input).c_str(), "");
  out << line;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::snprintf(line, sizeof(line), "%-24s %16s %8s\n",
                  steps[i].name.c_str(),
                  GroupThousands(steps[i].remaining).c_str(),
                  FormatDelta(Previous(i), steps[i].remaining).c_str());
    out << line;
  }
  return out.str();
}

std::vector<nlohmann::json> PipelineStats::ToJsonRows() const {
  std::vector<nlohmann::json> rows;
  rows.push_back({{"kind", "pipeline_step"},
                  {"step", 0},
                  {"name", StepNames()[0]},
                  {"remaining", input}});
  for (std::size_t i = 0; i < steps.size(); ++i) {
    nlohmann::json drops = nlohmann::json::object();
    for (const auto& [reason, count] : steps[i].drops) {
      drops[std::string(DropReasonName(reason))] = count;
    }
    rows.push_back({{"kind", "pipeline_step"},
                    {"step", i + 1},
                    {"name", steps[i].name},
                    {"remaining", steps[i].remaining},
                    {"delta", FormatDelta(Previous(i), steps[i].remaining)},
                    {"drops", drops}});
  }
  return rows;
}

SnippetTuple ToSnippetTuple(const AnchorContextRecord& rec,
                            const StepResources& res) {
  SnippetTuple tuple;
  tuple.snippet = rec.context;
  if (const DocumentEntry* target = res.ResolveTarget(rec.target_url)) {
    tuple.doc_id = target->record.doc_id;
  }
  tuple.provenance = Provenance::kAnchorContext;
  tuple.source = rec.source_doc_id;
  tuple.target_url = rec.target_url;
  return tuple;
}

namespace {

// Key that identifies "the same linked page" for step 7.
std::string TargetKey(const AnchorContextRecord& rec, const StepResources& res) {
  if (const DocumentEntry* target = res.ResolveTarget(rec.target_url)) {
    return target->record.doc_id;
  }
  return "url:" + rec.target_url;
}

void SortCanonical(std::span<const AnchorContextRecord> records,
                   std::vector<std::size_t>* indices) {
  std::sort(indices->begin(), indices->end(), [&](std::size_t a, std::size_t b) {
    if (AnchorOrderLess(records[a], records[b])) return true;
    if (AnchorOrderLess(records[b], records[a])) return false;
    return a < b;
  });
}

PipelineResult Finish(std::span<const AnchorContextRecord> records,
                      const StepResources& res, PipelineStats stats,
                      std::vector<DropReason> outcomes) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (outcomes[i] == DropReason::kNone) kept.push_back(i);
  }
  SortCanonical(records, &kept);
  PipelineResult result;
  result.stats = std::move(stats);
  result.outcomes = std::move(outcomes);
  for (std::size_t i : kept) {
    result.survivors.push_back(records[i]);
    result.tuples.push_back(ToSnippetTuple(records[i], res));
  }
  return result;
}

}  // namespace

PipelineResult RunPipeline(std::span<const AnchorContextRecord> records,
                           const StepResources& res, const Config& config,
                           int threads) {
  const kernels::PageAnchors page_anchors =
      kernels::CollectPageAnchors(records);
  std::vector<DropReason> outcomes(records.size(), DropReason::kNone);
  std::vector<std::size_t> active(records.size());
  std::iota(active.begin(), active.end(), 0);

  PipelineStats stats;
  stats.input = records.size();
  for (int step = 1; step <= static_cast<int>(kPipelineSteps); ++step) {
    std::vector<bool> keep(active.size(), true);
    StepStat stat;
    stat.name = std::string(StepNames()[static_cast<std::size_t>(step)]);
    if (step == 7) {
      const std::vector<Signature> signatures =
          kernels::SignAll(records, active, threads);
      std::map<std::string, std::vector<std::size_t>> groups;
      for (std::size_t k = 0; k < active.size(); ++k) {
        groups[TargetKey(records[active[k]], res)].push_back(k);
      }
      std::vector<std::vector<std::size_t>*> group_list;
      for (auto& [key, members] : groups) group_list.push_back(&members);
      std::vector<std::vector<bool>> group_survive(group_list.size());
      ParallelFor(group_list.size(), threads, [&](std::size_t g) {
        std::vector<std::size_t>& members = *group_list[g];
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t b) {
                    const auto& ra = records[active[a]];
                    const auto& rb = records[active[b]];
                    if (AnchorOrderLess(ra, rb)) return true;
                    if (AnchorOrderLess(rb, ra)) return false;
                    return active[a] < active[b];
                  });
        std::vector<Signature> ordered;
        ordered.reserve(members.size());
        for (std::size_t k : members) ordered.push_back(signatures[k]);
        group_survive[g] = GreedyDedup(ordered, config.near_duplicate_cosine);
      });
      for (std::size_t g = 0; g < group_list.size(); ++g) {
        const std::vector<std::size_t>& members = *group_list[g];
        for (std::size_t m = 0; m < members.size(); ++m) {
          if (group_survive[g][m]) continue;
          keep[members[m]] = false;
          outcomes[active[members[m]]] = DropReason::kNearDuplicate;
          ++stat.drops[DropReason::kNearDuplicate];
        }
      }
    } else {
      const std::vector<Verdict> verdicts = kernels::EvaluateStep(
          step, records, active, res, page_anchors, config, threads);
      for (std::size_t k = 0; k < active.size(); ++k) {
        if (!verdicts[k].keep) {
          keep[k] = false;
          outcomes[active[k]] = verdicts[k].reason;
          ++stat.drops[verdicts[k].reason];
        }
      }
    }
    std::vector<std::size_t> next;
    next.reserve(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (keep[k]) next.push_back(active[k]);
    }
    active = std::move(next);
    stat.remaining = active.size();
    stats.steps.push_back(std::move(stat));
  }
  return Finish(records, res, std::move(stats), std::move(outcomes));
}

PipelineResult RunPipelineSerial(std::span<const AnchorContextRecord> records,
                                 const StepResources& res,
                                 const Config& config) {
  const kernels::PageAnchors page_anchors =
      kernels::CollectPageAnchors(records);
  std::vector<DropReason> outcomes(records.size(), DropReason::kNone);
  // Step at which each record was dropped; 0 = survived all steps.
  std::vector<int> dropped_at(records.size(), 0);

  auto run_step = [&](int step, std::size_t i) {
    const Verdict verdict =
        kernels::EvaluateOne(step, records[i], res, page_anchors, config);
    if (!verdict.keep) {
      outcomes[i] = verdict.reason;
      dropped_at[i] = step;
    }
    return verdict.keep;
  };

  for (std::size_t i = 0; i < records.size(); ++i) {
    for (int step = 1; step <= 6; ++step) {
      if (!run_step(step, i)) break;
    }
  }

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (dropped_at[i] == 0) groups[TargetKey(records[i], res)].push_back(i);
  }
  for (auto& [key, members] : groups) {
    SortCanonical(records, &members);
    std::vector<Signature> survivors;
    for (std::size_t i : members) {
      const Signature sig = Sign(records[i].context);
      bool duplicate = false;
      for (const Signature& kept : survivors) {
        if (Cosine(sig, kept) > config.near_duplicate_cosine) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) {
        outcomes[i] = DropReason::kNearDuplicate;
        dropped_at[i] = 7;
      } else {
        survivors.push_back(sig);
      }
    }
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (dropped_at[i] != 0) continue;
    if (run_step(8, i)) run_step(9, i);
  }

  PipelineStats stats;
  stats.input = records.size();
  std::size_t remaining = records.size();
  for (int step = 1; step <= static_cast<int>(kPipelineSteps); ++step) {
    StepStat stat;
    stat.name = std::string(StepNames()[static_cast<std::size_t>(step)]);
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (dropped_at[i] == step) {
        ++stat.drops[outcomes[i]];
        --remaining;
      }
    }
    stat.remaining = remaining;
    stats.steps.push_back(std::move(stat));
  }
  return Finish(records, res, std::move(stats), std::move(outcomes));
}

}  // namespace snipmine

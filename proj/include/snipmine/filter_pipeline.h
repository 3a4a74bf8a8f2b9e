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

#ifndef SNIPMINE_FILTER_PIPELINE_H_
#define SNIPMINE_FILTER_PIPELINE_H_

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "snipmine/archive_ingest.h"
#include "snipmine/config.h"
#include "snipmine/records.h"
#include "snipmine/text_analysis.h"

namespace snipmine {

// Closed set of reasons a record can leave the pipeline.
enum class DropReason {
  kNone,
  kMissingSource,
  kInvalidUrl,
  kIntraSite,
  kTargetUnavailable,
  kMissingTarget,
  kNonEnglish,
  kSpam,
  kEmptyAnchor,
  kStopAnchorWord,
  kMultiLink,
  kAnchorTooLong,
  kContextTooShort,
  kSentenceTooShort,
  kNoVerb,
  kStopwordRatio,
  kNearDuplicate,
  kTextReuse,
  kShortPage,
};

std::string_view DropReasonName(DropReason reason);

struct Verdict {
  bool keep = true;
  DropReason reason = DropReason::kNone;

  static Verdict Keep() { return {}; }
  static Verdict Drop(DropReason reason) { return {false, reason}; }
  bool operator==(const Verdict&) const = default;
};

// A document plus values derived from it once, up front.
struct DocumentEntry {
  DocumentRecord record;
  // Metadata language if present, otherwise detected from plain_text.
  std::string language;
  std::string normalized_text;
};

// Everything the per-record steps look up. Accessors are total: a missing
// entry is a nullptr/nullopt, never an exception.
struct StepResources {
  PageIndex page_index;
  std::unordered_map<std::string, DocumentEntry> documents;
  std::unordered_map<std::string, int> spam_scores;
  std::unordered_set<std::string> judged_pages;
  const WordLists* word_lists = &WordLists::Bundled();
  const TaggerBackend* tagger = &LexiconTagger::Bundled();

  // Documents must already carry plain_text (see ExtractContent).
  static StepResources FromDocuments(std::vector<DocumentRecord> docs,
                                     int threads = 1);

  const DocumentEntry* FindDocument(const std::string& doc_id) const;
  const DocumentEntry* ResolveTarget(std::string_view target_url) const;
  // Score file entry, else the document's own field.
  std::optional<int> SpamPercentile(const std::string& doc_id) const;
};

// "doc_id<TAB>percentile" per line.
std::unordered_map<std::string, int> ParseSpamScores(std::istream& in);
std::unordered_map<std::string, int> LoadSpamScores(const std::string& path);
// TREC qrels: "topic iteration doc_id judgment" per line.
std::unordered_set<std::string> ParseQrels(std::istream& in);
std::unordered_set<std::string> LoadQrels(const std::string& path);

// The per-record steps. Step 7 (near duplicates) works on groups and lives
// in near_dup.h / RunPipeline.
Verdict StepIntraSite(const AnchorContextRecord& rec, const StepResources& res);
Verdict StepTargetAvailable(const AnchorContextRecord& rec,
                            const StepResources& res);
Verdict StepTargetEnglish(const AnchorContextRecord& rec,
                          const StepResources& res);
Verdict StepSpam(const AnchorContextRecord& rec, const StepResources& res,
                 const Config& config = {});
// `page_anchors` are the anchor spans of every link on the source page,
// including this record's own span.
Verdict StepStopAnchor(const AnchorContextRecord& rec,
                       std::span<const Span> page_anchors,
                       const Config& config = {});
Verdict StepImproperText(const AnchorContextRecord& rec,
                         const StepResources& res, const Config& config = {});
Verdict StepTextReuse(const AnchorContextRecord& rec, const StepResources& res);
Verdict StepShortPage(const AnchorContextRecord& rec, const StepResources& res,
                      const Config& config = {});

// Distance in characters between two anchors; 0 when they overlap.
std::size_t AnchorGap(const Span& a, const Span& b);

// Word count of the sentence of `context` that contains the anchor.
std::size_t AnchorSentenceWords(const AnchorContextRecord& rec);

inline constexpr std::size_t kPipelineSteps = 9;

struct StepStat {
  std::string name;
  std::size_t remaining = 0;
  std::map<DropReason, std::size_t> drops;

  bool operator==(const StepStat&) const = default;
};

// Attrition table: the raw input count followed by one row per step.
struct PipelineStats {
  std::size_t input = 0;
  std::vector<StepStat> steps;

  std::size_t Previous(std::size_t step_index) const;
  // Tab-separated: optional "# key=value" provenance header, then
  // "step<TAB>remaining<TAB>delta" rows.
  std::string ToTsv(const Config* config = nullptr) const;
  // Aligned, comma-grouped table for terminals.
  std::string ToText() const;
  std::vector<nlohmann::json> ToJsonRows() const;

  bool operator==(const PipelineStats&) const = default;
};

// Relative change from `previous` to `remaining`, one decimal, rounded half
// away from zero: 514337093 -> 91007214 renders "-82.3%". A step that drops
// nothing renders "-0.0%", as does an empty previous step.
std::string FormatDelta(std::size_t previous, std::size_t remaining);

// Groups thousands with commas: 91007214 -> "91,007,214".
std::string GroupThousands(std::size_t value);

const std::array<std::string_view, kPipelineSteps + 1>& StepNames();

struct PipelineResult {
  // Survivors ordered by (source doc_id, anchor offset).
  std::vector<AnchorContextRecord> survivors;
  std::vector<SnippetTuple> tuples;
  PipelineStats stats;
  // Drop reason per input record (kNone for survivors), in input order.
  std::vector<DropReason> outcomes;
};

// Step-major execution: each step is an OpenMP-parallel map over the
// current survivors, near-duplicate groups are deduplicated in parallel.
PipelineResult RunPipeline(std::span<const AnchorContextRecord> records,
                           const StepResources& res, const Config& config = {},
                           int threads = 1);

// Record-major single-threaded reference implementation; must agree with
// RunPipeline exactly.
PipelineResult RunPipelineSerial(std::span<const AnchorContextRecord> records,
                                 const StepResources& res,
                                 const Config& config = {});

SnippetTuple ToSnippetTuple(const AnchorContextRecord& rec,
                            const StepResources& res);

}  // namespace snipmine

#endif  // SNIPMINE_FILTER_PIPELINE_H_

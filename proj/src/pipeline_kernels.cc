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

#include "snipmine/pipeline_kernels.h"

#include <algorithm>

#include "snipmine/archive_ingest.h"
#include "snipmine/errors.h"
#include "snipmine/parallel.h"

namespace snipmine::kernels {

std::vector<DocumentRecord> ExtractContentAll(std::vector<DocumentRecord> docs,
                                              const ContentConfig& config,
                                              int threads) {
  ParallelFor(docs.size(), threads, [&](std::size_t i) {
    docs[i] = ExtractContent(std::move(docs[i]), config);
  });
  return docs;
}

std::vector<AnchorContextRecord> ExtractAnchorsAll(
    std::span<const DocumentRecord> docs, std::size_t window, int threads,
    std::size_t* malformed_pages) {
  std::vector<std::vector<AnchorContextRecord>> per_doc(docs.size());
  std::vector<char> malformed(docs.size(), 0);
  ParallelFor(docs.size(), threads, [&](std::size_t i) {
    bool bad = false;
    per_doc[i] = ExtractAnchorContexts(docs[i], window, &bad);
    malformed[i] = bad ? 1 : 0;
  });
  std::vector<AnchorContextRecord> all;
  for (auto& records : per_doc) {
    std::move(records.begin(), records.end(), std::back_inserter(all));
  }
  if (malformed_pages) {
    *malformed_pages = static_cast<std::size_t>(
        std::count(malformed.begin(), malformed.end(), 1));
  }
  return all;
}

std::vector<Signature> SignAll(std::span<const AnchorContextRecord> records,
                               std::span<const std::size_t> indices,
                               int threads) {
  std::vector<Signature> signatures(indices.size());
  ParallelFor(indices.size(), threads, [&](std::size_t k) {
    signatures[k] = Sign(records[indices[k]].context);
  });
  return signatures;
}

PageAnchors CollectPageAnchors(std::span<const AnchorContextRecord> records) {
  PageAnchors anchors;
  for (const AnchorContextRecord& rec : records) {
    anchors[rec.source_doc_id].push_back(rec.page_anchor);
  }
  for (auto& [page, spans] : anchors) {
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
      return a.start != b.start ? a.start < b.start : a.end < b.end;
    });
  }
  return anchors;
}

Verdict EvaluateOne(int step, const AnchorContextRecord& rec,
                    const StepResources& res, const PageAnchors& page_anchors,
                    const Config& config) {
  switch (step) {
    case 1:
      return StepIntraSite(rec, res);
    case 2:
      return StepTargetAvailable(rec, res);
    case 3:
      return StepTargetEnglish(rec, res);
    case 4:
      return StepSpam(rec, res, config);
    case 5: {
      auto it = page_anchors.find(rec.source_doc_id);
      if (it == page_anchors.end()) {
        const Span own[] = {rec.page_anchor};
        return StepStopAnchor(rec, own, config);
      }
      return StepStopAnchor(rec, it->second, config);
    }
    case 6:
      return StepImproperText(rec, res, config);
    case 8:
      return StepTextReuse(rec, res);
    case 9:
      return StepShortPage(rec, res, config);
    default:
      throw InvalidInputError("step " + std::to_string(step) +
                              " is not a per-record step");
  }
}

std::vector<Verdict> EvaluateStep(int step,
                                  std::span<const AnchorContextRecord> records,
                                  std::span<const std::size_t> indices,
                                  const StepResources& res,
                                  const PageAnchors& page_anchors,
                                  const Config& config, int threads) {
  std::vector<Verdict> verdicts(indices.size());
  ParallelFor(indices.size(), threads, [&](std::size_t k) {
    verdicts[k] = EvaluateOne(step, records[indices[k]], res, page_anchors, config);
  });
  return verdicts;
}

}  // namespace snipmine::kernels

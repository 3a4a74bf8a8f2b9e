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

#ifndef SNIPMINE_PIPELINE_KERNELS_H_
#define SNIPMINE_PIPELINE_KERNELS_H_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "snipmine/content_extraction.h"
#include "snipmine/filter_pipeline.h"
#include "snipmine/near_dup.h"
#include "snipmine/records.h"

// OpenMP data-parallel building blocks. Every kernel writes results by input
// index, so output is identical for any worker count.
namespace snipmine::kernels {

std::vector<DocumentRecord> ExtractContentAll(std::vector<DocumentRecord> docs,
                                              const ContentConfig& config,
                                              int threads);

// Anchor contexts of all documents, concatenated in document order.
std::vector<AnchorContextRecord> ExtractAnchorsAll(
    std::span<const DocumentRecord> docs, std::size_t window, int threads,
    std::size_t* malformed_pages = nullptr);

std::vector<Signature> SignAll(std::span<const AnchorContextRecord> records,
                               std::span<const std::size_t> indices,
                               int threads);

using PageAnchors = std::unordered_map<std::string, std::vector<Span>>;

// Anchor spans of every record, grouped by source page and sorted.
PageAnchors CollectPageAnchors(std::span<const AnchorContextRecord> records);

// Evaluates per-record step `step` (1-6, 8 or 9) on records[indices[k]].
std::vector<Verdict> EvaluateStep(int step,
                                  std::span<const AnchorContextRecord> records,
                                  std::span<const std::size_t> indices,
                                  const StepResources& res,
                                  const PageAnchors& page_anchors,
                                  const Config& config, int threads);

// Same step, one record, no parallelism.
Verdict EvaluateOne(int step, const AnchorContextRecord& rec,
                    const StepResources& res, const PageAnchors& page_anchors,
                    const Config& config);

}  // namespace snipmine::kernels

#endif  // SNIPMINE_PIPELINE_KERNELS_H_

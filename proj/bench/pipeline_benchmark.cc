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

#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "snipmine/archive_ingest.h"
#include "snipmine/content_extraction.h"
#include "snipmine/filter_pipeline.h"
#include "snipmine/near_dup.h"
#include "snipmine/pipeline_kernels.h"

namespace snipmine {
namespace {

// The fixture archive with every source page copied `copies` times, so the
// link set grows while the target pages stay shared.
struct Workload {
  std::vector<DocumentRecord> documents;
  std::vector<AnchorContextRecord> anchors;
  StepResources resources;
};

const Workload& GetWorkload(int copies) {
  static std::vector<std::unique_ptr<Workload>> cache(64);
  auto& slot = cache.at(static_cast<std::size_t>(copies));
  if (slot) return *slot;
  const std::string dir = SNIPMINE_FIXTURE_DIR "/mini_archive/";
  std::vector<DocumentRecord> base = kernels::ExtractContentAll(
      ReadArchive(dir + "mini.warc"), ContentConfig{}, 1);
  const std::vector<AnchorContextRecord> base_anchors =
      kernels::ExtractAnchorsAll(base, kContextWindowChars, 1);
  slot = std::make_unique<Workload>();
  slot->documents = base;
  for (int k = 1; k < copies; ++k) {
    const std::string suffix = "-" + std::to_string(k);
    for (const DocumentRecord& doc : base) {
      DocumentRecord copy = doc;
      copy.doc_id += suffix;
      slot->documents.push_back(std::move(copy));
    }
  }
  for (int k = 0; k < copies; ++k) {
    const std::string suffix = k == 0 ? "" : "-" + std::to_string(k);
    for (AnchorContextRecord rec : base_anchors) {
      rec.source_doc_id += suffix;
      slot->anchors.push_back(std::move(rec));
    }
  }
  slot->resources = StepResources::FromDocuments(slot->documents);
  slot->resources.spam_scores = LoadSpamScores(dir + "spam.tsv");
  slot->resources.judged_pages = LoadQrels(dir + "qrels.txt");
  return *slot;
}

void BM_PipelineSerial(benchmark::State& state) {
  const Workload& w = GetWorkload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunPipelineSerial(w.anchors, w.resources));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.anchors.size()));
}

void BM_PipelineParallel(benchmark::State& state) {
  const Workload& w = GetWorkload(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunPipeline(w.anchors, w.resources, {}, threads));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(w.anchors.size()));
}

void BM_SignSerial(benchmark::State& state) {
  const Workload& w = GetWorkload(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::vector<Signature> sigs;
    sigs.reserve(w.anchors.size());
    for (const auto& rec : w.anchors) sigs.push_back(Sign(rec.context));
    benchmark::DoNotOptimize(sigs);
  }
}

void BM_SignParallel(benchmark::State& state) {
  const Workload& w = GetWorkload(static_cast<int>(state.range(0)));
  std::vector<std::size_t> indices(w.anchors.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::SignAll(w.anchors, indices, threads));
  }
}

// Wall-clock time throughout: CPU time only covers the calling thread.
BENCHMARK(BM_PipelineSerial)
    ->Arg(1)
    ->Arg(16)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PipelineParallel)
    ->ArgsProduct({{1, 16}, {1, 2, 4, 8}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignSerial)->Arg(16)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignParallel)
    ->ArgsProduct({{16}, {1, 2, 4, 8}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace snipmine

BENCHMARK_MAIN();

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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "snipmine/filter_pipeline.h"
#include "snipmine/near_dup.h"
#include "snipmine/pipeline_kernels.h"
#include "test_support.h"

namespace snipmine {
namespace {

class MiniArchiveTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    mini_ = new testing::MiniArchive(testing::LoadMiniArchive());
  }
  static void TearDownTestSuite() {
    delete mini_;
    mini_ = nullptr;
  }

  static testing::MiniArchive* mini_;
};

testing::MiniArchive* MiniArchiveTest::mini_ = nullptr;

TEST_F(MiniArchiveTest, ShapeOfFixture) {
  EXPECT_EQ(mini_->documents.size(), 48u);
  EXPECT_EQ(mini_->anchors.size(), 30u);
  EXPECT_EQ(mini_->expected.size(), 30u);
}

TEST_F(MiniArchiveTest, PerRecordOutcomesMatchGolden) {
  const PipelineResult result =
      RunPipeline(mini_->anchors, mini_->resources, {}, 4);
  ASSERT_EQ(result.outcomes.size(), mini_->expected.size());
  for (std::size_t i = 0; i < mini_->anchors.size(); ++i) {
    const auto& rec = mini_->anchors[i];
    const auto& want = mini_->expected[i];
    EXPECT_EQ(rec.source_doc_id, want.source_doc_id) << i;
    EXPECT_EQ(rec.target_url, want.target_url) << i;
    EXPECT_EQ(rec.anchor_text, want.anchor_text) << i;
    EXPECT_EQ(DropReasonName(result.outcomes[i]), want.reason)
        << i << " " << rec.anchor_text;
  }
}

TEST_F(MiniArchiveTest, SurvivorsMatchGolden) {
  const PipelineResult result = RunPipeline(mini_->anchors, mini_->resources);
  ASSERT_EQ(result.survivors.size(), mini_->expected_survivors.size());
  for (std::size_t i = 0; i < result.survivors.size(); ++i) {
    const auto& got = result.survivors[i];
    const auto& want = mini_->expected_survivors[i];
    EXPECT_EQ(got.source_doc_id, want.at("source_doc_id").get<std::string>());
    EXPECT_EQ(got.target_url, want.at("target_url").get<std::string>());
    EXPECT_EQ(got.anchor_text, want.at("anchor_text").get<std::string>());
    EXPECT_EQ(got.context, want.at("context").get<std::string>());
    EXPECT_EQ(result.tuples[i].doc_id,
              want.at("target_doc_id").get<std::string>());
  }
}

TEST_F(MiniArchiveTest, StatsMatchGolden) {
  const PipelineResult result = RunPipeline(mini_->anchors, mini_->resources);
  EXPECT_EQ(testing::StripComments(result.stats.ToTsv(nullptr)),
            testing::StripComments(mini_->expected_stats_tsv));
}

TEST_F(MiniArchiveTest, StatsAccounting) {
  const PipelineResult result = RunPipeline(mini_->anchors, mini_->resources);
  const PipelineStats& stats = result.stats;
  ASSERT_EQ(stats.steps.size(), kPipelineSteps);
  EXPECT_EQ(stats.input, mini_->anchors.size());
  for (std::size_t i = 0; i < stats.steps.size(); ++i) {
    const std::size_t previous = stats.Previous(i);
    EXPECT_LE(stats.steps[i].remaining, previous);
    std::size_t dropped = 0;
    for (const auto& [reason, count] : stats.steps[i].drops) dropped += count;
    EXPECT_EQ(dropped + stats.steps[i].remaining, previous) << i;
  }
  std::map<DropReason, std::size_t> from_outcomes;
  for (DropReason r : result.outcomes) {
    if (r != DropReason::kNone) ++from_outcomes[r];
  }
  std::map<DropReason, std::size_t> from_stats;
  for (const auto& step : stats.steps) {
    for (const auto& [reason, count] : step.drops) from_stats[reason] += count;
  }
  EXPECT_EQ(from_outcomes, from_stats);
  EXPECT_EQ(stats.steps.back().remaining, result.survivors.size());
}

TEST_F(MiniArchiveTest, SerialMatchesParallel) {
  const PipelineResult serial =
      RunPipelineSerial(mini_->anchors, mini_->resources);
  for (int threads : {1, 2, 4, 8}) {
    const PipelineResult parallel =
        RunPipeline(mini_->anchors, mini_->resources, {}, threads);
    EXPECT_EQ(parallel.survivors, serial.survivors) << threads;
    EXPECT_EQ(parallel.tuples, serial.tuples) << threads;
    EXPECT_EQ(parallel.stats, serial.stats) << threads;
    EXPECT_EQ(parallel.outcomes, serial.outcomes) << threads;
  }
}

TEST_F(MiniArchiveTest, LoadingIsThreadAndCompressionIndependent) {
  for (int threads : {1, 4, 8}) {
    for (bool gzip : {false, true}) {
      const testing::MiniArchive other = testing::LoadMiniArchive(threads, gzip);
      EXPECT_EQ(other.documents, mini_->documents);
      EXPECT_EQ(other.anchors, mini_->anchors);
    }
  }
}

TEST_F(MiniArchiveTest, InputOrderDoesNotChangeSurvivors) {
  const PipelineResult base = RunPipeline(mini_->anchors, mini_->resources);
  std::vector<AnchorContextRecord> shuffled = mini_->anchors;
  std::mt19937 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const PipelineResult again = RunPipeline(shuffled, mini_->resources, {}, 4);
    EXPECT_EQ(again.survivors, base.survivors);
    EXPECT_EQ(again.stats, base.stats);
  }
}

TEST_F(MiniArchiveTest, SurvivorsPassEveryStepOnRecheck) {
  const PipelineResult result = RunPipeline(mini_->anchors, mini_->resources);
  const kernels::PageAnchors page_anchors =
      kernels::CollectPageAnchors(mini_->anchors);
  for (const AnchorContextRecord& rec : result.survivors) {
    for (int step : {1, 2, 3, 4, 5, 6, 8, 9}) {
      EXPECT_EQ(kernels::EvaluateOne(step, rec, mini_->resources, page_anchors,
                                     {}),
                Verdict::Keep())
          << step << " " << rec.anchor_text;
    }
  }
  // Survivors sharing a target are pairwise below the similarity threshold.
  for (std::size_t i = 0; i < result.survivors.size(); ++i) {
    for (std::size_t j = i + 1; j < result.survivors.size(); ++j) {
      if (result.tuples[i].doc_id != result.tuples[j].doc_id) continue;
      EXPECT_LE(Cosine(Sign(result.survivors[i].context),
                       Sign(result.survivors[j].context)),
                0.9);
    }
  }
  // Running the pipeline on its own output keeps everything.
  const PipelineResult rerun = RunPipeline(result.survivors, mini_->resources);
  EXPECT_EQ(rerun.survivors, result.survivors);
}

TEST_F(MiniArchiveTest, SurvivorsAreCanonicallyOrdered) {
  const PipelineResult result = RunPipeline(mini_->anchors, mini_->resources);
  EXPECT_TRUE(std::is_sorted(result.survivors.begin(), result.survivors.end(),
                             AnchorOrderLess));
}

}  // namespace
}  // namespace snipmine

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

#ifndef SNIPMINE_DMOZ_INGEST_H_
#define SNIPMINE_DMOZ_INGEST_H_

#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "snipmine/config.h"
#include "snipmine/filter_pipeline.h"
#include "snipmine/records.h"

namespace snipmine {

struct DirectoryEntry {
  std::string url;
  std::string title;
  std::string description;
  std::string category_path;

  bool operator==(const DirectoryEntry&) const = default;
};

struct DirectoryParseStats {
  std::size_t entries = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

// Reads an open-directory content dump: ExternalPage elements with an
// `about` URL, d:Title, d:Description and topic children. Input whose first
// non-blank character is not '<' is read as "url<TAB>title<TAB>description"
// lines (an optional fourth column is the category). Entries without a
// description or a valid URL are skipped with a warning.
std::vector<DirectoryEntry> ParseDirectoryDump(
    std::istream& in, DirectoryParseStats* stats = nullptr);
std::vector<DirectoryEntry> ReadDirectoryDump(
    const std::string& path, DirectoryParseStats* stats = nullptr);

// Target lookup, description language, the text-quality conditions of the
// anchor filter that apply without an anchor (context length, verb, stop-word
// band), then the target length floor.
Verdict EvaluateDescription(const DirectoryEntry& entry,
                            const StepResources& res,
                            const Config& config = {});

struct DirectoryFilterResult {
  std::vector<SnippetTuple> tuples;
  // Per input entry, in input order.
  std::vector<DropReason> outcomes;
  std::map<DropReason, std::size_t> drops;
};

DirectoryFilterResult FilterDescriptions(std::span<const DirectoryEntry> entries,
                                         const StepResources& res,
                                         const Config& config = {},
                                         int threads = 1);

}  // namespace snipmine

#endif  // SNIPMINE_DMOZ_INGEST_H_

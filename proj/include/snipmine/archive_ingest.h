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

#ifndef SNIPMINE_ARCHIVE_INGEST_H_
#define SNIPMINE_ARCHIVE_INGEST_H_

#include <cstddef>
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "snipmine/records.h"

namespace snipmine {

struct IngestStats {
  std::size_t records = 0;        // WARC records read, any type
  std::size_t documents = 0;      // response records yielded
  std::size_t malformed = 0;      // skipped with a warning
  std::size_t non_ok_status = 0;  // responses without a 2xx status
  std::vector<std::string> warnings;
};

// Streams DocumentRecords out of a WARC/1.0 archive. Only `response` records
// with a 2xx HTTP status are yielded. A gzip stream (one member per record,
// or one for the whole file) is decompressed transparently.
//
// doc_id is WARC-TREC-ID when present, else WARC-Record-ID; the language
// override comes from WARC-Identified-Content-Language.
class WarcReader {
 public:
  explicit WarcReader(std::istream& in);

  // Returns false at end of input. Throws IngestError if the archive ends in
  // the middle of a record payload.
  bool Next(DocumentRecord* doc);

  const IngestStats& stats() const { return stats_; }

 private:
  bool ReadHeaderBlock(std::vector<std::pair<std::string, std::string>>* fields,
                       std::string* version);
  void Warn(std::string message);

  std::unique_ptr<std::istringstream> inflated_;
  std::istream* in_;
  IngestStats stats_;
  bool resyncing_ = false;
};

std::vector<DocumentRecord> ReadArchive(const std::string& path,
                                        IngestStats* stats = nullptr);

inline constexpr std::size_t kContextWindowChars = 1500;

// One record per hyperlink whose href resolves to an absolute http(s) URL.
// The context is the rendered page text from `window` characters before the
// anchor to `window` characters after it, clamped to the page. Returns an
// empty list (and sets *malformed) when the markup cannot be parsed.
std::vector<AnchorContextRecord> ExtractAnchorContexts(
    const DocumentRecord& doc, std::size_t window = kContextWindowChars,
    bool* malformed = nullptr);

// Normalized URL -> doc_id. The first record wins on collisions.
class PageIndex {
 public:
  PageIndex() = default;
  static PageIndex Build(std::span<const DocumentRecord> records);

  // Total: invalid URLs are simply not found.
  std::optional<std::string> Lookup(std::string_view url) const;
  bool Insert(std::string_view url, const std::string& doc_id);

  std::size_t size() const { return index_.size(); }
  std::size_t collisions() const { return collisions_; }
  std::size_t invalid_urls() const { return invalid_urls_; }

 private:
  std::unordered_map<std::string, std::string> index_;
  std::size_t collisions_ = 0;
  std::size_t invalid_urls_ = 0;
};

}  // namespace snipmine

#endif  // SNIPMINE_ARCHIVE_INGEST_H_

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

#ifndef SNIPMINE_CORPUS_FORMAT_H_
#define SNIPMINE_CORPUS_FORMAT_H_

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "snipmine/records.h"

// Line-delimited JSON interchange format shared by every stage. Each line is
// one object with a "kind" discriminator; see docs/corpus_format.md.
namespace snipmine::corpus {

using Json = nlohmann::json;

// A generated snippet for the triple with the given id.
struct GeneratedSnippet {
  std::string triple_id;
  std::string snippet;
};

// Query-biased model input prepared from a triple's document.
struct PreparedInput {
  std::string triple_id;
  std::string query;
  std::string input;
};

Json ToJson(const DocumentRecord& doc);
Json ToJson(const AnchorContextRecord& rec);
Json ToJson(const SnippetTuple& tuple);
Json ToJson(const TrainingTriple& triple);
Json ToJson(const GeneratedSnippet& generated);
Json ToJson(const PreparedInput& prepared);

// Each throws ParseError when the object has the wrong kind or fields.
DocumentRecord DocumentFromJson(const Json& json);
AnchorContextRecord AnchorFromJson(const Json& json);
SnippetTuple TupleFromJson(const Json& json);
TrainingTriple TripleFromJson(const Json& json);
GeneratedSnippet GeneratedFromJson(const Json& json);

// Compact single-line dump; keys sorted, invalid UTF-8 replaced.
std::string Dump(const Json& json);

// Calls `fn` for every non-blank line. Parse errors carry the line number.
void ForEachLine(std::istream& in, const std::function<void(const Json&)>& fn);

std::vector<DocumentRecord> ReadDocuments(const std::string& path);
std::vector<AnchorContextRecord> ReadAnchors(const std::string& path);
std::vector<SnippetTuple> ReadTuples(const std::string& path);
std::vector<TrainingTriple> ReadTriples(const std::string& path);
std::vector<GeneratedSnippet> ReadGenerated(const std::string& path);

template <typename Record>
void WriteLines(std::ostream& out, const std::vector<Record>& records) {
  for (const Record& record : records) out << Dump(ToJson(record)) << '\n';
}

// Writes to `path`, or standard output when path is "-".
template <typename Record>
void WriteFile(const std::string& path, const std::vector<Record>& records);

}  // namespace snipmine::corpus

#endif  // SNIPMINE_CORPUS_FORMAT_H_

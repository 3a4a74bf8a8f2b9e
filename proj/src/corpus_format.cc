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

#include "snipmine/corpus_format.h"

#include <fstream>
#include <iostream>

#include "snipmine/errors.h"

namespace snipmine::corpus {

namespace {

void ExpectKind(const Json& json, std::string_view kind) {
  if (!json.is_object() || !json.contains("kind") ||
      json.at("kind").get<std::string>() != kind) {
    throw ParseError("expected a '" + std::string(kind) + "' record");
  }
}

Json SpanToJson(const Span& span) { return Json::array({span.start, span.end}); }

Span SpanFromJson(const Json& json) {
  if (!json.is_array() || json.size() != 2) {
    throw ParseError("span must be a [start, end] pair");
  }
  Span span{json[0].get<std::size_t>(), json[1].get<std::size_t>()};
  if (span.start > span.end) throw ParseError("span start after end");
  return span;
}

template <typename Fn>
auto Guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

template <typename Record, typename Convert>
std::vector<Record> ReadAll(const std::string& path, Convert convert) {
  std::ifstream in = OpenInput(path);
  std::vector<Record> records;
  ForEachLine(in, [&](const Json& json) { records.push_back(convert(json)); });
  return records;
}

}  // namespace

Json ToJson(const DocumentRecord& doc) {
  Json json = {{"kind", "document"},
               {"doc_id", doc.doc_id},
               {"url", doc.url},
               {"raw_html", doc.raw_html},
               {"plain_text", doc.plain_text},
               {"word_count", doc.word_count}};
  if (doc.language) json["language"] = *doc.language;
  if (doc.spam_percentile) json["spam_percentile"] = *doc.spam_percentile;
  if (doc.relevance) json["relevance"] = *doc.relevance;
  return json;
}

Json ToJson(const AnchorContextRecord& rec) {
  return {{"kind", "anchor_context"},
          {"source_doc_id", rec.source_doc_id},
          {"source_url", rec.source_url},
          {"target_url", rec.target_url},
          {"anchor_text", rec.anchor_text},
          {"context", rec.context},
          {"anchor_span", SpanToJson(rec.anchor_span)},
          {"page_anchor", SpanToJson(rec.page_anchor)}};
}

Json ToJson(const SnippetTuple& tuple) {
  return {{"kind", "snippet_tuple"},
          {"snippet", tuple.snippet},
          {"doc_id", tuple.doc_id},
          {"provenance", ProvenanceName(tuple.provenance)},
          {"source", tuple.source},
          {"target_url", tuple.target_url}};
}

Json ToJson(const TrainingTriple& triple) {
  return {{"kind", "training_triple"},
          {"triple_id", triple.triple_id},
          {"query", triple.query},
          {"snippet", triple.snippet},
          {"doc_id", triple.doc_id},
          {"query_span", SpanToJson(triple.query_span)},
          {"provenance", ProvenanceName(triple.provenance)}};
}

Json ToJson(const GeneratedSnippet& generated) {
  return {{"kind", "generated"},
          {"triple_id", generated.triple_id},
          {"snippet", generated.snippet}};
}

Json ToJson(const PreparedInput& prepared) {
  return {{"kind", "prepared_input"},
          {"triple_id", prepared.triple_id},
          {"query", prepared.query},
          {"input", prepared.input}};
}

DocumentRecord DocumentFromJson(const Json& json) {
  return Guard([&] {
    ExpectKind(json, "document");
    DocumentRecord doc;
    doc.doc_id = json.at("doc_id").get<std::string>();
    doc.url = json.at("url").get<std::string>();
    doc.raw_html = json.value("raw_html", "");
    doc.plain_text = json.value("plain_text", "");
    doc.word_count = json.value("word_count", std::size_t{0});
    if (json.contains("language")) doc.language = json["language"].get<std::string>();
    if (json.contains("spam_percentile")) {
      doc.spam_percentile = json["spam_percentile"].get<int>();
    }
    if (json.contains("relevance")) doc.relevance = json["relevance"].get<int>();
    if (doc.doc_id.empty()) throw ParseError("document without doc_id");
    return doc;
  });
}

AnchorContextRecord AnchorFromJson(const Json& json) {
  return Guard([&] {
    ExpectKind(json, "anchor_context");
    AnchorContextRecord rec;
    rec.source_doc_id = json.at("source_doc_id").get<std::string>();
    rec.source_url = json.value("source_url", "");
    rec.target_url = json.at("target_url").get<std::string>();
    rec.anchor_text = json.at("anchor_text").get<std::string>();
    rec.context = json.at("context").get<std::string>();
    rec.anchor_span = SpanFromJson(json.at("anchor_span"));
    rec.page_anchor = SpanFromJson(json.at("page_anchor"));
    if (rec.anchor_span.end > rec.context.size()) {
      throw ParseError("anchor_span outside context");
    }
    return rec;
  });
}

SnippetTuple TupleFromJson(const Json& json) {
  return Guard([&] {
    ExpectKind(json, "snippet_tuple");
    SnippetTuple tuple;
    tuple.snippet = json.at("snippet").get<std::string>();
    tuple.doc_id = json.at("doc_id").get<std::string>();
    const auto provenance =
        ParseProvenance(json.at("provenance").get<std::string>());
    if (!provenance) throw ParseError("unknown provenance");
    tuple.provenance = *provenance;
    tuple.source = json.value("source", "");
    tuple.target_url = json.value("target_url", "");
    return tuple;
  });
}

TrainingTriple TripleFromJson(const Json& json) {
  return Guard([&] {
    ExpectKind(json, "training_triple");
    TrainingTriple triple;
    triple.triple_id = json.at("triple_id").get<std::string>();
    triple.query = json.at("query").get<std::string>();
    triple.snippet = json.at("snippet").get<std::string>();
    triple.doc_id = json.at("doc_id").get<std::string>();
    triple.query_span = SpanFromJson(json.at("query_span"));
    const auto provenance =
        ParseProvenance(json.value("provenance", "anchor-context"));
    if (!provenance) throw ParseError("unknown provenance");
    triple.provenance = *provenance;
    if (triple.query_span.end > triple.snippet.size()) {
      throw ParseError("query_span outside snippet");
    }
    return triple;
  });
}

GeneratedSnippet GeneratedFromJson(const Json& json) {
  return Guard([&] {
    ExpectKind(json, "generated");
    return GeneratedSnippet{json.at("triple_id").get<std::string>(),
                            json.at("snippet").get<std::string>()};
  });
}

std::string Dump(const Json& json) {
  return json.dump(-1, ' ', false, Json::error_handler_t::replace);
}

void ForEachLine(std::istream& in, const std::function<void(const Json&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json json;
    try {
      json = Json::parse(line);
    } catch (const Json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      fn(json);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::vector<DocumentRecord> ReadDocuments(const std::string& path) {
  return ReadAll<DocumentRecord>(path, DocumentFromJson);
}

std::vector<AnchorContextRecord> ReadAnchors(const std::string& path) {
  return ReadAll<AnchorContextRecord>(path, AnchorFromJson);
}

std::vector<SnippetTuple> ReadTuples(const std::string& path) {
  return ReadAll<SnippetTuple>(path, TupleFromJson);
}

std::vector<TrainingTriple> ReadTriples(const std::string& path) {
  return ReadAll<TrainingTriple>(path, TripleFromJson);
}

std::vector<GeneratedSnippet> ReadGenerated(const std::string& path) {
  return ReadAll<GeneratedSnippet>(path, GeneratedFromJson);
}

template <typename Record>
void WriteFile(const std::string& path, const std::vector<Record>& records) {
  if (path == "-") {
    WriteLines(std::cout, records);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  WriteLines(out, records);
  if (!out) throw IoError("write failed: " + path);
}

template void WriteFile(const std::string&, const std::vector<DocumentRecord>&);
template void WriteFile(const std::string&,
                        const std::vector<AnchorContextRecord>&);
template void WriteFile(const std::string&, const std::vector<SnippetTuple>&);
template void WriteFile(const std::string&, const std::vector<TrainingTriple>&);
template void WriteFile(const std::string&,
                        const std::vector<GeneratedSnippet>&);
template void WriteFile(const std::string&, const std::vector<PreparedInput>&);

}  // namespace snipmine::corpus

namespace snipmine {

std::string_view ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kDirectory ? "directory" : "anchor-context";
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  if (name == "anchor-context") return Provenance::kAnchorContext;
  if (name == "directory") return Provenance::kDirectory;
  return std::nullopt;
}

}  // namespace snipmine

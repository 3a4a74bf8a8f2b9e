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

#include "snipmine/archive_ingest.h"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>

#include "snipmine/errors.h"
#include "snipmine/html.h"
#include "snipmine/url.h"
#include "snipmine/utf8.h"

namespace snipmine {

namespace {

std::string Inflate(const std::string& compressed) {
  std::string out;
  z_stream zs{};
  // 16 + MAX_WBITS: gzip wrapper.
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) {
    throw IngestError("zlib init failed");
  }
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  char buffer[1 << 16];
  while (true) {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof(buffer);
    const int rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buffer, sizeof(buffer) - zs.avail_out);
    if (rc == Z_STREAM_END) {
      if (zs.avail_in == 0) break;
      // Next gzip member.
      inflateReset(&zs);
      continue;
    }
    if (rc != Z_OK) {
      inflateEnd(&zs);
      throw IngestError("truncated or corrupt gzip stream");
    }
    if (zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      throw IngestError("truncated gzip stream");
    }
  }
  inflateEnd(&zs);
  return out;
}

std::string TrimLine(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                           line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  std::size_t start = 0;
  while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) {
    ++start;
  }
  return line.substr(start);
}

std::string LowerAscii(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

const std::string* FindField(
    const std::vector<std::pair<std::string, std::string>>& fields,
    std::string_view name) {
  for (const auto& [key, value] : fields) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::optional<std::size_t> ParseLength(const std::string& value) {
  if (value.empty() || value.size() > 18) return std::nullopt;
  std::size_t length = 0;
  for (char c : value) {
    if (c < '0' || c > '9') return std::nullopt;
    length = length * 10 + static_cast<std::size_t>(c - '0');
  }
  return length;
}

std::string NormalizeLanguage(std::string value) {
  value = LowerAscii(value.substr(0, value.find(',')));
  static const std::unordered_map<std::string, std::string> kIso3 = {
      {"eng", "en"}, {"deu", "de"}, {"ger", "de"}, {"fra", "fr"},
      {"fre", "fr"}, {"spa", "es"}, {"ita", "it"}, {"nld", "nl"},
      {"dut", "nl"}};
  if (auto it = kIso3.find(value); it != kIso3.end()) return it->second;
  return value;
}

// Splits an HTTP response into status code and body.
std::optional<std::pair<int, std::string>> ParseHttpResponse(
    const std::string& payload) {
  if (!payload.starts_with("HTTP/")) return std::nullopt;
  const std::size_t space = payload.find(' ');
  const std::size_t eol = payload.find('\n');
  if (space == std::string::npos || eol == std::string::npos || space > eol ||
      space + 4 > payload.size()) {
    return std::nullopt;
  }
  int status = 0;
  for (std::size_t i = space + 1; i < space + 4; ++i) {
    if (payload[i] < '0' || payload[i] > '9') return std::nullopt;
    status = status * 10 + (payload[i] - '0');
  }
  std::size_t body = payload.find("\r\n\r\n");
  std::size_t skip = 4;
  const std::size_t lf = payload.find("\n\n");
  if (body == std::string::npos || (lf != std::string::npos && lf < body)) {
    body = lf;
    skip = 2;
  }
  if (body == std::string::npos) return std::make_pair(status, std::string());
  return std::make_pair(status, payload.substr(body + skip));
}

}  // namespace

WarcReader::WarcReader(std::istream& in) : in_(&in) {
  const int first = in.peek();
  if (first == 0x1f) {
    std::string compressed((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    if (compressed.size() >= 2 &&
        static_cast<unsigned char>(compressed[1]) == 0x8b) {
      inflated_ = std::make_unique<std::istringstream>(Inflate(compressed));
    } else {
      inflated_ = std::make_unique<std::istringstream>(std::move(compressed));
    }
    in_ = inflated_.get();
  }
}

void WarcReader::Warn(std::string message) {
  ++stats_.malformed;
  stats_.warnings.push_back(std::move(message));
}

bool WarcReader::ReadHeaderBlock(
    std::vector<std::pair<std::string, std::string>>* fields,
    std::string* version) {
  std::string line;
  // Skip inter-record blank lines; anything else before "WARC/" is garbage
  // from a damaged record and is skipped with one warning.
  bool garbage = false;
  while (true) {
    if (!std::getline(*in_, line)) {
      if (garbage && !resyncing_) Warn("trailing garbage after last record");
      resyncing_ = false;
      return false;
    }
    const std::string trimmed = TrimLine(line);
    if (trimmed.empty()) continue;
    if (trimmed.starts_with("WARC/")) {
      if (garbage && !resyncing_) Warn("skipped bytes before WARC header");
      resyncing_ = false;
      *version = trimmed;
      break;
    }
    garbage = true;
  }
  while (std::getline(*in_, line)) {
    const std::string trimmed = TrimLine(line);
    if (trimmed.empty()) return true;
    const std::size_t colon = trimmed.find(':');
    if (colon == std::string::npos) {
      fields->emplace_back("", trimmed);
      continue;
    }
    fields->emplace_back(LowerAscii(TrimLine(trimmed.substr(0, colon))),
                         TrimLine(trimmed.substr(colon + 1)));
  }
  throw IngestError("archive ends inside a WARC header block");
}

bool WarcReader::Next(DocumentRecord* doc) {
  while (true) {
    std::vector<std::pair<std::string, std::string>> fields;
    std::string version;
    if (!ReadHeaderBlock(&fields, &version)) return false;
    ++stats_.records;

    const std::string* length_field = FindField(fields, "content-length");
    const std::optional<std::size_t> length =
        length_field ? ParseLength(*length_field) : std::nullopt;
    if (!length) {
      // Payload extent unknown; resynchronize on the next "WARC/" line.
      Warn("record " + std::to_string(stats_.records) +
           ": missing or invalid Content-Length");
      resyncing_ = true;
      continue;
    }
    std::string payload(*length, '\0');
    in_->read(payload.data(), static_cast<std::streamsize>(*length));
    if (static_cast<std::size_t>(in_->gcount()) != *length) {
      throw IngestError("archive truncated inside record " +
                        std::to_string(stats_.records));
    }

    const std::string* type = FindField(fields, "warc-type");
    if (type == nullptr) {
      Warn("record " + std::to_string(stats_.records) + ": missing WARC-Type");
      continue;
    }
    if (LowerAscii(*type) != "response") continue;

    const std::string* uri = FindField(fields, "warc-target-uri");
    const std::string* trec_id = FindField(fields, "warc-trec-id");
    const std::string* record_id = FindField(fields, "warc-record-id");
    std::string id = trec_id ? *trec_id : (record_id ? *record_id : "");
    if (id.size() >= 2 && id.front() == '<' && id.back() == '>') {
      id = id.substr(1, id.size() - 2);
    }
    std::string url = uri ? *uri : "";
    if (url.size() >= 2 && url.front() == '<' && url.back() == '>') {
      url = url.substr(1, url.size() - 2);
    }
    if (id.empty() || !ParseUrl(url)) {
      Warn("record " + std::to_string(stats_.records) +
           ": response without id or valid target URI");
      continue;
    }
    auto response = ParseHttpResponse(payload);
    if (!response) {
      Warn("record " + std::to_string(stats_.records) +
           ": payload is not an HTTP response");
      continue;
    }
    if (response->first < 200 || response->first > 299) {
      ++stats_.non_ok_status;
      continue;
    }
    *doc = DocumentRecord{};
    doc->doc_id = std::move(id);
    doc->url = std::move(url);
    doc->raw_html = std::move(response->second);
    if (const std::string* lang =
            FindField(fields, "warc-identified-content-language")) {
      doc->language = NormalizeLanguage(*lang);
    }
    ++stats_.documents;
    return true;
  }
}

std::vector<DocumentRecord> ReadArchive(const std::string& path,
                                        IngestStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open archive " + path);
  WarcReader reader(in);
  std::vector<DocumentRecord> docs;
  DocumentRecord doc;
  while (reader.Next(&doc)) docs.push_back(std::move(doc));
  if (stats) *stats = reader.stats();
  return docs;
}

std::vector<AnchorContextRecord> ExtractAnchorContexts(
    const DocumentRecord& doc, std::size_t window, bool* malformed) {
  std::vector<AnchorContextRecord> records;
  const RenderedPage page = RenderHtml(doc.raw_html);
  if (malformed) *malformed = page.malformed;
  if (page.malformed) return records;

  std::string base = doc.url;
  if (!page.base_href.empty()) {
    if (auto resolved = ResolveHref(doc.url, page.base_href)) base = *resolved;
  }
  const std::string_view text = page.text;
  // Links come in document order, so character offsets accumulate.
  std::size_t char_pos = 0;
  std::size_t byte_pos = 0;
  for (const RenderedLink& link : page.links) {
    std::optional<std::string> target = ResolveHref(base, link.href);
    if (!target) continue;
    if (link.start >= byte_pos) {
      char_pos += utf8::CharCount(text.substr(byte_pos, link.start - byte_pos));
      byte_pos = link.start;
    } else {
      char_pos = utf8::CharCount(text.substr(0, link.start));
      byte_pos = link.start;
    }
    const std::size_t from = utf8::Retreat(text, link.start, window);
    const std::size_t to = utf8::Advance(text, link.end, window);

    AnchorContextRecord rec;
    rec.source_doc_id = doc.doc_id;
    rec.source_url = doc.url;
    rec.target_url = std::move(*target);
    rec.anchor_text = std::string(text.substr(link.start, link.end - link.start));
    rec.context = std::string(text.substr(from, to - from));
    rec.anchor_span = {link.start - from, link.end - from};
    rec.page_anchor = {char_pos, char_pos + utf8::CharCount(rec.anchor_text)};
    records.push_back(std::move(rec));
  }
  return records;
}

PageIndex PageIndex::Build(std::span<const DocumentRecord> records) {
  PageIndex index;
  for (const DocumentRecord& doc : records) index.Insert(doc.url, doc.doc_id);
  return index;
}

bool PageIndex::Insert(std::string_view url, const std::string& doc_id) {
  std::string key;
  try {
    key = NormalizeUrl(url);
  } catch (const ParseError&) {
    ++invalid_urls_;
    return false;
  }
  const bool inserted = index_.emplace(std::move(key), doc_id).second;
  if (!inserted) ++collisions_;
  return inserted;
}

std::optional<std::string> PageIndex::Lookup(std::string_view url) const {
  std::string key;
  try {
    key = NormalizeUrl(url);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return std::nullopt;
}

}  // namespace snipmine

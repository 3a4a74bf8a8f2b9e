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

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "snipmine/errors.h"
#include "snipmine/html.h"
#include "test_support.h"

namespace snipmine {
namespace {

std::string WarcRecord(const std::string& type, const std::string& id,
                       const std::string& uri, const std::string& payload,
                       const std::string& extra = "") {
  std::string rec = "WARC/1.0\r\nWARC-Type: " + type + "\r\n";
  if (!id.empty()) rec += "WARC-TREC-ID: " + id + "\r\n";
  if (!uri.empty()) rec += "WARC-Target-URI: " + uri + "\r\n";
  rec += extra;
  rec += "Content-Length: " + std::to_string(payload.size()) + "\r\n\r\n";
  return rec + payload + "\r\n\r\n";
}

std::string Http(int status, const std::string& body) {
  return "HTTP/1.1 " + std::to_string(status) +
         " X\r\nContent-Type: text/html\r\n\r\n" + body;
}

std::vector<DocumentRecord> ReadAll(const std::string& bytes,
                                    IngestStats* stats = nullptr) {
  std::istringstream in(bytes);
  WarcReader reader(in);
  std::vector<DocumentRecord> docs;
  DocumentRecord doc;
  while (reader.Next(&doc)) docs.push_back(doc);
  if (stats) *stats = reader.stats();
  return docs;
}

TEST(WarcReaderTest, ReadsResponsesInOrder) {
  const std::string archive =
      WarcRecord("warcinfo", "", "", "software: test\r\n") +
      WarcRecord("response", "d-1", "http://a.com/", Http(200, "<p>one</p>")) +
      WarcRecord("response", "d-2", "http://b.com/x", Http(200, "<p>two</p>")) +
      WarcRecord("response", "d-3", "<http://c.com/>",
                 Http(200, "<p>three</p>"),
                 "WARC-Identified-Content-Language: deu\r\n");
  IngestStats stats;
  const auto docs = ReadAll(archive, &stats);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].doc_id, "d-1");
  EXPECT_EQ(docs[1].url, "http://b.com/x");
  EXPECT_EQ(docs[1].raw_html, "<p>two</p>");
  EXPECT_EQ(docs[2].url, "http://c.com/");
  EXPECT_EQ(docs[2].language, "de");
  EXPECT_FALSE(docs[0].language.has_value());
  EXPECT_EQ(stats.records, 4u);
  EXPECT_EQ(stats.documents, 3u);
  EXPECT_EQ(stats.malformed, 0u);
}

TEST(WarcReaderTest, MalformedRecordIsSkippedWithWarning) {
  std::string bad = "WARC/1.0\r\nWARC-Type: response\r\nWARC-TREC-ID: d-bad\r\n"
                    "Content-Length: banana\r\n\r\nHTTP/1.1 200 OK\r\n\r\nxx\r\n\r\n";
  const std::string archive =
      WarcRecord("response", "d-1", "http://a.com/", Http(200, "a")) + bad +
      WarcRecord("response", "d-3", "http://c.com/", Http(200, "c"));
  IngestStats stats;
  const auto docs = ReadAll(archive, &stats);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].doc_id, "d-1");
  EXPECT_EQ(docs[1].doc_id, "d-3");
  EXPECT_EQ(stats.malformed, 1u);
  ASSERT_EQ(stats.warnings.size(), 1u);
  EXPECT_NE(stats.warnings[0].find("Content-Length"), std::string::npos);
}

TEST(WarcReaderTest, EmptyInputYieldsNothing) {
  IngestStats stats;
  EXPECT_TRUE(ReadAll("", &stats).empty());
  EXPECT_EQ(stats.records, 0u);
  EXPECT_TRUE(stats.warnings.empty());
}

TEST(WarcReaderTest, TruncatedPayloadThrows) {
  std::string archive =
      WarcRecord("response", "d-1", "http://a.com/", Http(200, "<p>hello</p>"));
  archive.resize(archive.size() - 10);
  EXPECT_THROW(ReadAll(archive), IngestError);
}

TEST(WarcReaderTest, NonOkStatusIsCountedNotYielded) {
  const std::string archive =
      WarcRecord("response", "d-1", "http://a.com/", Http(404, "gone")) +
      WarcRecord("response", "d-2", "http://a.com/ok", Http(200, "ok")) +
      WarcRecord("response", "d-3", "http://a.com/moved", Http(301, ""));
  IngestStats stats;
  const auto docs = ReadAll(archive, &stats);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].doc_id, "d-2");
  EXPECT_EQ(stats.non_ok_status, 2u);
  EXPECT_EQ(stats.malformed, 0u);
}

TEST(WarcReaderTest, RecordIdFallbackAndInvalidUri) {
  const std::string archive =
      WarcRecord("response", "", "http://a.com/", Http(200, "x"),
                 "WARC-Record-ID: <urn:uuid:1234>\r\n") +
      WarcRecord("response", "d-2", "not a url", Http(200, "y"));
  IngestStats stats;
  const auto docs = ReadAll(archive, &stats);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].doc_id, "urn:uuid:1234");
  EXPECT_EQ(stats.malformed, 1u);
}

TEST(WarcReaderTest, GzipArchiveMatchesPlain) {
  const auto plain =
      ReadArchive(testing::FixturePath("mini_archive/mini.warc"));
  const auto gz =
      ReadArchive(testing::FixturePath("mini_archive/mini.warc.gz"));
  ASSERT_FALSE(plain.empty());
  EXPECT_EQ(plain, gz);
}

TEST(WarcReaderTest, MissingFileThrowsIoError) {
  EXPECT_THROW(ReadArchive("/nonexistent/archive.warc"), IoError);
}

DocumentRecord HtmlDoc(const std::string& html) {
  DocumentRecord doc;
  doc.doc_id = "src";
  doc.url = "http://src.example.com/dir/page.html";
  doc.raw_html = html;
  return doc;
}

TEST(AnchorContextTest, ShortPageClampsToWholeText) {
  const std::string before(50, 'a');
  const std::string after(46, 'b');
  const auto doc = HtmlDoc("<p>" + before + " <a href=\"/t\">link</a> " +
                           after + "</p>");
  const auto recs = ExtractAnchorContexts(doc);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].context, before + " link " + after);
  EXPECT_EQ(recs[0].context.size(), 102u);
  EXPECT_EQ(recs[0].anchor_text, "link");
  EXPECT_EQ(recs[0].target_url, "http://src.example.com/t");
  EXPECT_EQ(recs[0].anchor_span.start, 51u);
  EXPECT_EQ(recs[0].page_anchor.start, 51u);
}

TEST(AnchorContextTest, NoLinksNoRecords) {
  EXPECT_TRUE(ExtractAnchorContexts(HtmlDoc("<p>plain text only</p>")).empty());
}

TEST(AnchorContextTest, LongPageUsesFullWindows) {
  const std::string filler(2000, 'x');
  const auto doc = HtmlDoc("<p>" + filler + "<a href=\"http://t.org/\">anchor"
                           "</a>" + filler + "</p>");
  const auto recs = ExtractAnchorContexts(doc);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].context.size(), 1500u + 6u + 1500u);
  EXPECT_EQ(recs[0].anchor_span.start, 1500u);
  EXPECT_EQ(recs[0].page_anchor.start, 2000u);
}

TEST(AnchorContextTest, WindowCountsCharactersNotBytes) {
  // Two-byte characters on both sides of the link.
  std::string filler;
  for (int i = 0; i < 20; ++i) filler += "\xc3\xa9";
  const auto doc = HtmlDoc("<p>" + filler + "<a href=\"/t\">x</a>" + filler +
                           "</p>");
  const auto recs = ExtractAnchorContexts(doc, 5);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].context.size(), 5u * 2 + 1 + 5u * 2);
  EXPECT_EQ(recs[0].anchor_span.start, 10u);
  EXPECT_EQ(recs[0].page_anchor.start, 20u);
}

TEST(AnchorContextTest, SkipsNonHttpTargets) {
  const auto doc = HtmlDoc(
      "<p><a href=\"mailto:x@y.com\">mail</a> <a href=\"javascript:void(0)\">"
      "js</a> <a href=\"page2.html\">rel</a></p>");
  const auto recs = ExtractAnchorContexts(doc);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].target_url, "http://src.example.com/dir/page2.html");
}

TEST(AnchorContextTest, SpanInvariantOnMiniArchive) {
  const auto docs = ReadArchive(testing::FixturePath("mini_archive/mini.warc"));
  std::size_t total = 0;
  for (const DocumentRecord& doc : docs) {
    const std::string text = RenderHtml(doc.raw_html).text;
    for (const auto& rec : ExtractAnchorContexts(doc)) {
      ++total;
      ASSERT_LE(rec.anchor_span.end, rec.context.size());
      EXPECT_EQ(rec.context.substr(rec.anchor_span.start,
                                   rec.anchor_span.end - rec.anchor_span.start),
                rec.anchor_text);
      EXPECT_NE(text.find(rec.context), std::string::npos);
      EXPECT_EQ(rec.source_doc_id, doc.doc_id);
    }
  }
  EXPECT_EQ(total, 30u);
}

TEST(PageIndexTest, BuildAndLookupNormalizes) {
  std::vector<DocumentRecord> docs(2);
  docs[0].doc_id = "a";
  docs[0].url = "HTTP://Example.COM:80";
  docs[1].doc_id = "b";
  docs[1].url = "http://example.com/";
  const PageIndex index = PageIndex::Build(docs);
  EXPECT_EQ(index.size(), 1u);
  EXPECT_EQ(index.collisions(), 1u);
  EXPECT_EQ(index.Lookup("http://example.com/#top"), "a");
}

}  // namespace
}  // namespace snipmine

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

#include "snipmine/url.h"

#include "gtest/gtest.h"
#include "snipmine/archive_ingest.h"
#include "snipmine/errors.h"

namespace snipmine {
namespace {

TEST(RegistrableDomainTest, PublicSuffixLookups) {
  EXPECT_EQ(RegistrableDomain("http://www.example.com/a"), "example.com");
  EXPECT_EQ(RegistrableDomain("https://news.bbc.co.uk/x"), "bbc.co.uk");
  EXPECT_EQ(RegistrableDomain("http://example.com"),
            RegistrableDomain("http://EXAMPLE.com"));
}

TEST(RegistrableDomainTest, WildcardAndExceptionRules) {
  const PublicSuffixList& psl = PublicSuffixList::Bundled();
  EXPECT_EQ(psl.RegistrableDomain("a.b.kawasaki.jp"), "a.b.kawasaki.jp");
  EXPECT_EQ(psl.RegistrableDomain("www.city.kawasaki.jp"), "city.kawasaki.jp");
  EXPECT_EQ(psl.RegistrableDomain("www.ck"), "www.ck");
  EXPECT_EQ(psl.RegistrableDomain("shop.foo.ck"), "shop.foo.ck");
}

TEST(RegistrableDomainTest, CustomList) {
  const PublicSuffixList psl =
      PublicSuffixList::Parse("// comment\ncom\n*.example\n!keep.example\n");
  EXPECT_EQ(psl.RegistrableDomain("a.b.com"), "b.com");
  EXPECT_EQ(psl.RegistrableDomain("x.y.example"), "x.y.example");
  EXPECT_EQ(psl.RegistrableDomain("w.keep.example"), "keep.example");
}

TEST(RegistrableDomainTest, UnknownTldFallsBackToLastLabel) {
  EXPECT_EQ(RegistrableDomain("http://a.b.zzunknown/"), "b.zzunknown");
}

TEST(RegistrableDomainTest, InvalidUrlThrows) {
  EXPECT_THROW(RegistrableDomain("not a url"), ParseError);
  EXPECT_THROW(RegistrableDomain("http://"), ParseError);
}

TEST(RegistrableDomainTest, IndependentOfSchemePathAndCase) {
  const std::string hosts[] = {"www.example.com", "news.bbc.co.uk",
                               "deep.sub.site.org", "x.city.kawasaki.jp"};
  const std::string variants[] = {"http://{}/", "https://{}/a/b?c=d",
                                  "HTTP://{}:8080/x#frag", "http://{}"};
  for (const std::string& host : hosts) {
    std::string first;
    for (std::string v : variants) {
      v.replace(v.find("{}"), 2, host);
      const std::string domain = RegistrableDomain(v);
      if (first.empty()) first = domain;
      EXPECT_EQ(domain, first) << v;
    }
  }
}

TEST(NormalizeUrlTest, PinnedRules) {
  EXPECT_EQ(NormalizeUrl("HTTP://Example.COM:80/a#frag"), "http://example.com/a");
  EXPECT_EQ(NormalizeUrl("http://example.com"), "http://example.com/");
  EXPECT_EQ(NormalizeUrl("https://example.com:443/p?q=1#x"),
            "https://example.com/p?q=1");
  EXPECT_EQ(NormalizeUrl("http://example.com:8080/Case"),
            "http://example.com:8080/Case");
  EXPECT_THROW(NormalizeUrl("ftp//broken"), ParseError);
}

TEST(ResolveHrefTest, RelativeAndSpecialTargets) {
  const std::string base = "http://www.site.org/dir/page.html";
  EXPECT_EQ(ResolveHref(base, "other.html"), "http://www.site.org/dir/other.html");
  EXPECT_EQ(ResolveHref(base, "../up.html"), "http://www.site.org/up.html");
  EXPECT_EQ(ResolveHref(base, "/root?x=1"), "http://www.site.org/root?x=1");
  EXPECT_EQ(ResolveHref(base, "//cdn.net/a"), "http://cdn.net/a");
  EXPECT_EQ(ResolveHref(base, "https://b.com/"), "https://b.com/");
  EXPECT_FALSE(ResolveHref(base, "mailto:a@b.com"));
  EXPECT_FALSE(ResolveHref(base, "javascript:void(0)"));
  EXPECT_FALSE(ResolveHref(base, ""));
}

TEST(PageIndexTest, DistinctUrls) {
  std::vector<DocumentRecord> docs(2);
  docs[0].doc_id = "d1";
  docs[0].url = "http://a.com/";
  docs[1].doc_id = "d2";
  docs[1].url = "http://b.com/";
  const PageIndex index = PageIndex::Build(docs);
  EXPECT_EQ(index.size(), 2u);
  EXPECT_EQ(index.Lookup("http://b.com/"), "d2");
}

TEST(PageIndexTest, DuplicateUrlFirstWins) {
  std::vector<DocumentRecord> docs(2);
  docs[0].doc_id = "first";
  docs[0].url = "http://a.com/x";
  docs[1].doc_id = "second";
  docs[1].url = "HTTP://A.com/x#top";
  const PageIndex index = PageIndex::Build(docs);
  EXPECT_EQ(index.size(), 1u);
  EXPECT_EQ(index.collisions(), 1u);
  EXPECT_EQ(index.Lookup("http://a.com/x"), "first");
}

TEST(PageIndexTest, LookupIsTotal) {
  PageIndex index;
  index.Insert("http://a.com/page", "d1");
  EXPECT_FALSE(index.Lookup("http://absent.com/"));
  EXPECT_FALSE(index.Lookup("::garbage::"));
  EXPECT_EQ(index.Lookup("http://a.com/page#section"), "d1");
}

}  // namespace
}  // namespace snipmine

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

#include "snipmine/html.h"

#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "snipmine/text_analysis.h"
#include "snipmine/utf8.h"

namespace snipmine {

namespace {

const std::unordered_map<std::string_view, char32_t>& NamedEntities() {
  static const auto* const kEntities =
      new std::unordered_map<std::string_view, char32_t>{
          {"amp", '&'},      {"lt", '<'},        {"gt", '>'},
          {"quot", '"'},     {"apos", '\''},     {"nbsp", ' '},
          {"copy", 0xA9},    {"reg", 0xAE},      {"trade", 0x2122},
          {"mdash", 0x2014}, {"ndash", 0x2013},  {"hellip", 0x2026},
          {"lsquo", 0x2018}, {"rsquo", 0x2019},  {"ldquo", 0x201C},
          {"rdquo", 0x201D}, {"laquo", 0xAB},    {"raquo", 0xBB},
          {"middot", 0xB7},  {"bull", 0x2022},   {"deg", 0xB0},
          {"eacute", 0xE9},  {"egrave", 0xE8},   {"aacute", 0xE1},
          {"agrave", 0xE0},  {"uuml", 0xFC},     {"ouml", 0xF6},
          {"auml", 0xE4},    {"Uuml", 0xDC},     {"Ouml", 0xD6},
          {"Auml", 0xC4},    {"szlig", 0xDF},    {"ccedil", 0xE7},
          {"ntilde", 0xF1},  {"iacute", 0xED},   {"oacute", 0xF3},
          {"uacute", 0xFA},  {"euro", 0x20AC},   {"pound", 0xA3},
          {"sect", 0xA7},    {"para", 0xB6},     {"times", 0xD7}};
  return *kEntities;
}

const std::unordered_set<std::string_view>& BlockTags() {
  static const auto* const kTags = new std::unordered_set<std::string_view>{
      "address", "article", "aside",   "blockquote", "body",     "br",
      "caption", "center",  "dd",      "div",        "dl",       "dt",
      "fieldset", "figcaption", "figure", "footer",  "form",     "h1",
      "h2",      "h3",      "h4",      "h5",         "h6",       "header",
      "hr",      "html",    "li",      "main",       "menu",     "nav",
      "ol",      "option",  "p",       "pre",        "section",  "select",
      "table",   "tbody",   "td",      "tfoot",      "th",       "thead",
      "tr",      "ul"};
  return *kTags;
}

const std::unordered_set<std::string_view>& RawTextTags() {
  static const auto* const kTags = new std::unordered_set<std::string_view>{
      "script", "style", "title", "noscript", "template", "textarea"};
  return *kTags;
}

bool IsNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '-' || c == ':' || c == '_';
}

bool IsAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsHtmlSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

// Case-insensitive search for `needle` (lowercase) starting at `from`.
std::size_t FindNoCase(std::string_view hay, std::string_view needle,
                       std::size_t from) {
  if (needle.size() > hay.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k) {
      char c = hay[i + k];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != needle[k]) {
        match = false;
        break;
      }
    }
    if (match) return i;
  }
  return std::string_view::npos;
}

struct Tag {
  std::string name;  // lowercase
  bool closing = false;
  bool self_closing = false;
  std::unordered_map<std::string, std::string> attributes;
};

// Parses a tag starting at html[pos] == '<'. On success returns the tag and
// sets *next past '>'; returns nullopt when no '>' follows.
std::optional<Tag> ParseTag(std::string_view html, std::size_t pos,
                            std::size_t* next) {
  Tag tag;
  std::size_t i = pos + 1;
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < html.size() && IsNameChar(html[i])) ++i;
  tag.name = ToLowerAscii(html.substr(name_start, i - name_start));
  while (i < html.size()) {
    while (i < html.size() && IsHtmlSpace(html[i])) ++i;
    if (i >= html.size()) break;
    if (html[i] == '>') {
      *next = i + 1;
      return tag;
    }
    if (html[i] == '/') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    const std::size_t attr_start = i;
    while (i < html.size() && !IsHtmlSpace(html[i]) && html[i] != '=' &&
           html[i] != '>' && !(html[i] == '/' && i + 1 < html.size() &&
                               html[i + 1] == '>')) {
      ++i;
    }
    std::string name = ToLowerAscii(html.substr(attr_start, i - attr_start));
    if (name.empty()) {
      ++i;
      continue;
    }
    while (i < html.size() && IsHtmlSpace(html[i])) ++i;
    std::string value;
    if (i < html.size() && html[i] == '=') {
      ++i;
      while (i < html.size() && IsHtmlSpace(html[i])) ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        const char quote = html[i];
        const std::size_t close = html.find(quote, i + 1);
        if (close == std::string_view::npos) return std::nullopt;
        value = DecodeEntities(html.substr(i + 1, close - i - 1));
        i = close + 1;
      } else {
        const std::size_t value_start = i;
        while (i < html.size() && !IsHtmlSpace(html[i]) && html[i] != '>') ++i;
        value = DecodeEntities(html.substr(value_start, i - value_start));
      }
    }
    tag.attributes.emplace(std::move(name), std::move(value));
  }
  return std::nullopt;
}

class Renderer {
 public:
  RenderedPage Run(std::string_view html) {
    if (html.find('\0') != std::string_view::npos) page_.malformed = true;
    std::size_t pos = 0;
    while (pos < html.size()) {
      const std::size_t lt = html.find('<', pos);
      if (lt == std::string_view::npos) {
        AppendText(DecodeEntities(html.substr(pos)));
        break;
      }
      if (lt > pos) AppendText(DecodeEntities(html.substr(pos, lt - pos)));
      pos = HandleMarkup(html, lt);
    }
    FlushBlock();
    // Links that never received text sit at the end of the text.
    for (OpenLink& link : open_) Finalize(link, page_.text.size(), 0);
    open_.clear();
    return std::move(page_);
  }

 private:
  struct OpenLink {
    std::size_t index;
    bool started = false;
    bool closed = false;
    std::size_t start_rel = 0;
    std::size_t end_rel = 0;
  };

  std::size_t HandleMarkup(std::string_view html, std::size_t lt) {
    if (lt + 1 >= html.size()) {
      AppendText("<");
      return lt + 1;
    }
    const char c = html[lt + 1];
    if (c == '!') {
      if (html.substr(lt, 4) == "<!--") {
        const std::size_t end = html.find("-->", lt + 4);
        return end == std::string_view::npos ? html.size() : end + 3;
      }
      const std::size_t end = html.find('>', lt);
      return end == std::string_view::npos ? html.size() : end + 1;
    }
    if (c == '?') {
      const std::size_t end = html.find('>', lt);
      return end == std::string_view::npos ? html.size() : end + 1;
    }
    if (!(IsAlpha(c) || (c == '/' && lt + 2 < html.size() &&
                         IsAlpha(html[lt + 2])))) {
      AppendText("<");
      return lt + 1;
    }
    std::size_t next = 0;
    std::optional<Tag> tag = ParseTag(html, lt, &next);
    if (!tag) {
      page_.malformed = true;
      return html.size();
    }
    HandleTag(*tag);
    if (!tag->closing && !tag->self_closing && RawTextTags().contains(tag->name)) {
      const std::size_t close = FindNoCase(html, "</" + tag->name, next);
      if (close == std::string_view::npos) return html.size();
      const std::size_t end = html.find('>', close);
      return end == std::string_view::npos ? html.size() : end + 1;
    }
    return next;
  }

  void HandleTag(const Tag& tag) {
    if (tag.name == "a") {
      if (tag.closing) {
        CloseLink();
      } else if (auto it = tag.attributes.find("href");
                 it != tag.attributes.end()) {
        CloseLink();
        page_.links.push_back({it->second, 0, 0});
        open_.push_back({page_.links.size() - 1});
        if (tag.self_closing) CloseLink();
      }
      return;
    }
    if (tag.name == "base" && !tag.closing && page_.base_href.empty()) {
      if (auto it = tag.attributes.find("href"); it != tag.attributes.end()) {
        page_.base_href = it->second;
      }
      return;
    }
    if (BlockTags().contains(tag.name)) FlushBlock();
  }

  void CloseLink() {
    for (OpenLink& link : open_) {
      if (link.closed) continue;
      link.closed = true;
      link.end_rel = current_.size();
      if (!link.started) link.start_rel = link.end_rel;
    }
  }

  void AppendText(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t len = 0;
      const char32_t cp = utf8::DecodeAt(text, pos, &len);
      if (utf8::IsSpace(cp)) {
        pending_space_ = !current_.empty();
      } else {
        if (pending_space_) current_.push_back(' ');
        pending_space_ = false;
        for (OpenLink& link : open_) {
          if (!link.closed && !link.started) {
            link.started = true;
            link.start_rel = current_.size();
          }
        }
        current_.append(text.substr(pos, len));
      }
      pos += len;
    }
  }

  void FlushBlock() {
    pending_space_ = false;
    if (current_.empty()) return;
    const std::size_t base = page_.text.empty() ? 0 : page_.text.size() + 2;
    if (!page_.text.empty()) page_.text += "\n\n";
    page_.text += current_;
    page_.blocks.push_back(current_);
    std::vector<OpenLink> carried;
    for (OpenLink& link : open_) {
      if (link.started) {
        Finalize(link, base, link.closed ? link.end_rel : current_.size());
      } else if (link.closed) {
        Finalize(link, base + link.start_rel, 0);
      } else {
        carried.push_back(link);
      }
    }
    open_ = std::move(carried);
    current_.clear();
  }

  // Assigns absolute offsets. For started links `offset_or_end` is the
  // block-relative end; otherwise the link is empty at `base`.
  void Finalize(const OpenLink& link, std::size_t base,
                std::size_t offset_or_end) {
    RenderedLink& out = page_.links[link.index];
    if (link.started) {
      out.start = base + link.start_rel;
      out.end = base + offset_or_end;
    } else {
      out.start = out.end = std::min(base, page_.text.size());
    }
  }

  RenderedPage page_;
  std::string current_;
  bool pending_space_ = false;
  std::vector<OpenLink> open_;
};

}  // namespace

RenderedPage RenderHtml(std::string_view html) { return Renderer().Run(html); }

std::string DecodeEntities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t amp = text.find('&', pos);
    if (amp == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, amp - pos));
    const std::size_t semi = text.find(';', amp + 1);
    if (semi == std::string_view::npos || semi - amp > 12) {
      out.push_back('&');
      pos = amp + 1;
      continue;
    }
    const std::string_view name = text.substr(amp + 1, semi - amp - 1);
    std::optional<char32_t> cp;
    if (name.size() > 1 && name[0] == '#') {
      char32_t value = 0;
      bool ok = true;
      const bool hex = name[1] == 'x' || name[1] == 'X';
      const std::string_view digits = name.substr(hex ? 2 : 1);
      if (digits.empty()) ok = false;
      for (char c : digits) {
        int d = -1;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        if (d < 0 || value > 0x10FFFF) {
          ok = false;
          break;
        }
        value = value * (hex ? 16 : 10) + static_cast<char32_t>(d);
      }
      if (ok && value > 0 && value <= 0x10FFFF) cp = value;
    } else if (auto it = NamedEntities().find(name);
               it != NamedEntities().end()) {
      cp = it->second;
    }
    if (!cp) {
      out.push_back('&');
      pos = amp + 1;
      continue;
    }
    utf8::Append(*cp, &out);
    pos = semi + 1;
  }
  return out;
}

}  // namespace snipmine

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

#include <algorithm>
#include <vector>

#include "snipmine/bundled_data.h"
#include "snipmine/errors.h"
#include "snipmine/text_analysis.h"

namespace snipmine {

namespace {

bool IsSchemeChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

bool IsHostChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
         c == '.' || c == '_' || static_cast<unsigned char>(c) >= 0x80;
}

std::string_view TrimAscii(std::string_view s) {
  while (!s.empty() && static_cast<unsigned char>(s.front()) <= ' ') {
    s.remove_prefix(1);
  }
  while (!s.empty() && static_cast<unsigned char>(s.back()) <= ' ') {
    s.remove_suffix(1);
  }
  return s;
}

// Splits "path?query#fragment" into its parts.
void SplitPathQueryFragment(std::string_view rest, Url* url) {
  const std::size_t hash = rest.find('#');
  if (hash != std::string_view::npos) {
    url->has_fragment = true;
    url->fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  const std::size_t question = rest.find('?');
  if (question != std::string_view::npos) {
    url->has_query = true;
    url->query = std::string(rest.substr(question + 1));
    rest = rest.substr(0, question);
  }
  url->path = std::string(rest);
}

std::string RemoveDotSegments(std::string_view path) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  const bool trailing_slash =
      path.ends_with("/") || path.ends_with("/.") || path.ends_with("/..");
  while (pos <= path.size()) {
    std::size_t slash = path.find('/', pos);
    if (slash == std::string_view::npos) slash = path.size();
    const std::string_view segment = path.substr(pos, slash - pos);
    if (segment == "..") {
      if (!out.empty()) out.pop_back();
    } else if (segment != "." && !segment.empty()) {
      out.push_back(segment);
    }
    pos = slash + 1;
  }
  std::string result;
  for (std::string_view segment : out) {
    result.push_back('/');
    result += segment;
  }
  if (result.empty() || (trailing_slash && result.back() != '/')) {
    result.push_back('/');
  }
  return result;
}

bool IsIpLiteral(std::string_view host) {
  if (!host.empty() && host.front() == '[') return true;
  return !host.empty() && std::all_of(host.begin(), host.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.';
  });
}

std::string Join(const std::vector<std::string_view>& labels,
                 std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < labels.size(); ++i) {
    if (!out.empty()) out.push_back('.');
    out += labels[i];
  }
  return out;
}

}  // namespace

std::string Url::ToString() const {
  std::string out = scheme + "://" + host;
  if (!port.empty()) out += ":" + port;
  out += path;
  if (has_query) out += "?" + query;
  if (has_fragment) out += "#" + fragment;
  return out;
}

std::optional<Url> ParseUrl(std::string_view text) {
  text = TrimAscii(text);
  const std::size_t colon = text.find("://");
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  const std::string_view scheme = text.substr(0, colon);
  if (!std::all_of(scheme.begin(), scheme.end(), IsSchemeChar) ||
      !((scheme[0] >= 'a' && scheme[0] <= 'z') ||
        (scheme[0] >= 'A' && scheme[0] <= 'Z'))) {
    return std::nullopt;
  }
  Url url;
  url.scheme = ToLowerAscii(scheme);
  std::string_view rest = text.substr(colon + 3);
  const std::size_t authority_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, authority_end);
  rest = authority_end == std::string_view::npos ? std::string_view()
                                                 : rest.substr(authority_end);
  if (const std::size_t at = authority.rfind('@');
      at != std::string_view::npos) {
    authority = authority.substr(at + 1);
  }
  std::string_view host = authority;
  if (!authority.empty() && authority.front() == '[') {
    const std::size_t close = authority.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    host = authority.substr(0, close + 1);
    if (close + 1 < authority.size()) {
      if (authority[close + 1] != ':') return std::nullopt;
      url.port = std::string(authority.substr(close + 2));
    }
  } else if (const std::size_t port_colon = authority.rfind(':');
             port_colon != std::string_view::npos) {
    host = authority.substr(0, port_colon);
    url.port = std::string(authority.substr(port_colon + 1));
  }
  if (!std::all_of(url.port.begin(), url.port.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  url.host = ToLowerAscii(host);
  while (!url.host.empty() && url.host.back() == '.') url.host.pop_back();
  if (url.host.empty()) return std::nullopt;
  if (url.host.front() != '[' &&
      !std::all_of(url.host.begin(), url.host.end(), IsHostChar)) {
    return std::nullopt;
  }
  SplitPathQueryFragment(rest, &url);
  return url;
}

std::optional<std::string> ResolveHref(std::string_view base,
                                       std::string_view href) {
  href = TrimAscii(href);
  if (href.empty()) return std::nullopt;

  // Absolute reference, or another scheme entirely.
  const std::size_t scheme_end = href.find(':');
  const std::size_t first_delim = href.find_first_of("/?#");
  if (scheme_end != std::string_view::npos && scheme_end > 0 &&
      (first_delim == std::string_view::npos || scheme_end < first_delim) &&
      std::all_of(href.begin(), href.begin() + scheme_end, IsSchemeChar)) {
    const std::string scheme = ToLowerAscii(href.substr(0, scheme_end));
    if (scheme != "http" && scheme != "https") return std::nullopt;
    std::optional<Url> url = ParseUrl(href);
    if (!url) return std::nullopt;
    if (url->path.empty()) url->path = "/";
    url->path = RemoveDotSegments(url->path);
    return url->ToString();
  }

  std::optional<Url> base_url = ParseUrl(base);
  if (!base_url) return std::nullopt;
  if (base_url->scheme != "http" && base_url->scheme != "https") {
    return std::nullopt;
  }
  if (href.starts_with("//")) {
    return ResolveHref(base, base_url->scheme + ":" + std::string(href));
  }

  Url ref;
  SplitPathQueryFragment(href, &ref);
  Url out = *base_url;
  out.has_fragment = ref.has_fragment;
  out.fragment = ref.fragment;
  if (ref.path.empty()) {
    if (ref.has_query) {
      out.has_query = true;
      out.query = ref.query;
    }
  } else {
    out.has_query = ref.has_query;
    out.query = ref.query;
    if (ref.path.front() == '/') {
      out.path = RemoveDotSegments(ref.path);
    } else {
      std::string dir = base_url->path.empty() ? "/" : base_url->path;
      dir.erase(dir.rfind('/') + 1);
      out.path = RemoveDotSegments(dir + ref.path);
    }
  }
  if (out.path.empty()) out.path = "/";
  return out.ToString();
}

std::string NormalizeUrl(std::string_view text) {
  std::optional<Url> url = ParseUrl(text);
  if (!url) throw ParseError("invalid URL: " + std::string(text));
  if ((url->scheme == "http" && url->port == "80") ||
      (url->scheme == "https" && url->port == "443")) {
    url->port.clear();
  }
  if (url->path.empty()) url->path = "/";
  url->has_fragment = false;
  url->fragment.clear();
  return url->ToString();
}

PublicSuffixList PublicSuffixList::Parse(std::string_view contents) {
  PublicSuffixList list;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = TrimAscii(contents.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.starts_with("//")) continue;
    // Rules end at the first whitespace.
    line = line.substr(0, line.find_first_of(" \t"));
    const std::string rule = ToLowerAscii(line);
    if (rule.starts_with("!")) {
      list.exceptions_.insert(rule.substr(1));
    } else if (rule.starts_with("*.")) {
      list.wildcards_.insert(rule.substr(2));
    } else {
      list.rules_.insert(rule);
    }
  }
  return list;
}

const PublicSuffixList& PublicSuffixList::Bundled() {
  static const PublicSuffixList* const kList =
      new PublicSuffixList(Parse(bundled::PublicSuffixList()));
  return *kList;
}

std::string PublicSuffixList::RegistrableDomain(std::string_view host_in) const {
  std::string host = ToLowerAscii(host_in);
  while (!host.empty() && host.back() == '.') host.pop_back();
  if (host.empty() || IsIpLiteral(host)) return host;

  std::vector<std::string_view> labels;
  std::size_t pos = 0;
  const std::string_view view(host);
  while (pos <= view.size()) {
    std::size_t dot = view.find('.', pos);
    if (dot == std::string_view::npos) dot = view.size();
    labels.push_back(view.substr(pos, dot - pos));
    pos = dot + 1;
  }

  // Number of labels in the public suffix; the implicit "*" rule gives 1.
  std::size_t suffix_labels = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string candidate = Join(labels, i);
    if (exceptions_.contains(candidate)) {
      suffix_labels = labels.size() - i - 1;
      break;
    }
    const std::size_t length = labels.size() - i;
    if (length > suffix_labels &&
        (rules_.contains(candidate) ||
         (i + 1 < labels.size() && wildcards_.contains(Join(labels, i + 1))))) {
      suffix_labels = length;
    }
  }
  if (suffix_labels >= labels.size()) return host;
  return Join(labels, labels.size() - suffix_labels - 1);
}

std::string RegistrableDomain(std::string_view url) {
  const std::optional<Url> parsed = ParseUrl(url);
  if (!parsed) throw ParseError("invalid URL: " + std::string(url));
  return PublicSuffixList::Bundled().RegistrableDomain(parsed->host);
}

}  // namespace snipmine

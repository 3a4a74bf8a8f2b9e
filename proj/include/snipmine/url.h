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

#ifndef SNIPMINE_URL_H_
#define SNIPMINE_URL_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace snipmine {

// Absolute hierarchical URL (scheme://host[:port]/path?query#fragment).
// Scheme and host are stored lowercase.
struct Url {
  std::string scheme;
  std::string host;
  std::string port;
  std::string path;
  std::string query;
  std::string fragment;
  bool has_query = false;
  bool has_fragment = false;

  std::string ToString() const;
};

std::optional<Url> ParseUrl(std::string_view text);

// Resolves an href found on the page at `base`. Returns nullopt for empty
// hrefs and for non-http(s) targets (mailto:, javascript:, ...).
std::optional<std::string> ResolveHref(std::string_view base,
                                       std::string_view href);

// Index key: lowercase scheme and host, default port dropped, empty path
// becomes "/", fragment stripped, query kept. Throws ParseError.
std::string NormalizeUrl(std::string_view url);

// publicsuffix.org matching (normal, wildcard and exception rules).
class PublicSuffixList {
 public:
  static PublicSuffixList Parse(std::string_view contents);
  static const PublicSuffixList& Bundled();

  // Public suffix plus one label; the host itself when it has no label left
  // of its public suffix, or when it is an IP literal.
  std::string RegistrableDomain(std::string_view host) const;

 private:
  std::unordered_set<std::string> rules_;
  std::unordered_set<std::string> wildcards_;
  std::unordered_set<std::string> exceptions_;
};

// Registrable domain of a URL against the bundled snapshot.
// Throws ParseError for invalid URLs.
std::string RegistrableDomain(std::string_view url);

}  // namespace snipmine

#endif  // SNIPMINE_URL_H_

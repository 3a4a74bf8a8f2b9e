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

#ifndef SNIPMINE_HTML_H_
#define SNIPMINE_HTML_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace snipmine {

// A hyperlink as it appears in the rendered text. Offsets are byte offsets
// into RenderedPage::text; start == end for links without visible text.
struct RenderedLink {
  std::string href;
  std::size_t start = 0;
  std::size_t end = 0;
};

struct RenderedPage {
  // Block-level text runs, whitespace-collapsed, never empty.
  std::vector<std::string> blocks;
  // blocks joined by blank lines ("\n\n").
  std::string text;
  std::vector<RenderedLink> links;
  // Value of <base href>, if present.
  std::string base_href;
  // Binary content or a tag left open at end of input.
  bool malformed = false;
};

// Lenient markup-to-text renderer. Block elements (p, div, li, h1..h6, br,
// td, ...) separate blocks; script, style, title, noscript and template
// content is dropped; inline markup is flattened.
RenderedPage RenderHtml(std::string_view html);

// Decodes numeric character references and the common named entities;
// unknown entities are left as is.
std::string DecodeEntities(std::string_view text);

}  // namespace snipmine

#endif  // SNIPMINE_HTML_H_

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

#ifndef SNIPMINE_BUNDLED_DATA_H_
#define SNIPMINE_BUNDLED_DATA_H_

#include <string_view>

// Raw contents of the files under data/, compiled into the library.
namespace snipmine::bundled {

std::string_view StopWords();
std::string_view FunctionWords();
std::string_view Verbs();
std::string_view TaggerLexicon();
std::string_view PublicSuffixList();
std::string_view LanguageProfiles();

}  // namespace snipmine::bundled

#endif  // SNIPMINE_BUNDLED_DATA_H_

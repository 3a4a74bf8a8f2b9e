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

#ifndef SNIPMINE_CLI_H_
#define SNIPMINE_CLI_H_

#include <ostream>

namespace snipmine {

// Entry point of the `snipmine` tool. Returns 0 on success, 1 on an input,
// output or configuration failure and 2 on a usage error.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace snipmine

#endif  // SNIPMINE_CLI_H_

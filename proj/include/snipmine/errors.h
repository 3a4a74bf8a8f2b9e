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

#ifndef SNIPMINE_ERRORS_H_
#define SNIPMINE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snipmine {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A function was called outside its domain (e.g. a ratio over zero tokens).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Malformed URL, config value or record.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Archive-level failure that makes the rest of the stream unreadable.
class IngestError : public Error {
 public:
  using Error::Error;
};

class TaggingError : public Error {
 public:
  TaggingError(std::size_t token_index, const std::string& what)
      : Error("tagging failed at token " + std::to_string(token_index) +
              ": " + what),
        token_index_(token_index) {}

  std::size_t token_index() const { return token_index_; }

 private:
  std::size_t token_index_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace snipmine

#endif  // SNIPMINE_ERRORS_H_

// Copyright 2026 The biasaudit Authors
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

#ifndef BIASAUDIT_ERRORS_HPP_
#define BIASAUDIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace biasaudit {

// Base class for all toolkit errors. Messages are prefixed with the module
// that raised them ("corpus: ...", "stats: ...").
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Unreadable/missing files and unwritable output directories. The CLI maps
// these to exit code 2.
class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(message) {}
};

// Input data that parses but violates a documented invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
};

}  // namespace biasaudit

#endif  // BIASAUDIT_ERRORS_HPP_

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

#ifndef BIASAUDIT_CSV_HPP_
#define BIASAUDIT_CSV_HPP_

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace biasaudit::csv {

// Minimal quoting, UTF-8, "\n" line endings, mandatory header row.
class Writer {
 public:
  Writer(std::ostream& out, std::initializer_list<std::string_view> header)
      : out_(out) {
    write_row(std::vector<std::string_view>(header));
  }

  void row(std::initializer_list<std::string_view> fields) {
    write_row(std::vector<std::string_view>(fields));
  }

  void row(const std::vector<std::string>& fields) {
    write_row(std::vector<std::string_view>(fields.begin(), fields.end()));
  }

 private:
  void write_row(const std::vector<std::string_view>& fields);

  std::ostream& out_;
};

// Escapes a single field: quoted only when it contains a comma, quote, or
// newline.
std::string escape(std::string_view field);

// Parses CSV text produced by Writer back into rows of fields (header
// included). Used by round-trip tests and the anonymisation audit.
std::vector<std::vector<std::string>> parse(std::string_view text);

}  // namespace biasaudit::csv

#endif  // BIASAUDIT_CSV_HPP_

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

#include <doctest.h>

#include <sstream>

#include "biasaudit/csv.hpp"
#include "testutil.hpp"

namespace csv = biasaudit::csv;

TEST_SUITE("csv") {
  TEST_CASE("minimal quoting") {
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape("with,comma") == "\"with,comma\"");
    CHECK(csv::escape("with \"quote\"") == "\"with \"\"quote\"\"\"");
    CHECK(csv::escape("line\nbreak") == "\"line\nbreak\"");
  }

  TEST_CASE("writer emits header and rows") {
    std::ostringstream out;
    csv::Writer writer(out, {"a", "b"});
    writer.row({"1", "x,y"});
    CHECK(out.str() == "a,b\n1,\"x,y\"\n");
  }

  TEST_CASE("random fields round-trip through parse") {
    const char* pieces[] = {"plain", "with,comma", "q\"uote", "new\nline",
                            "", "ünïcode", "  spaces  "};
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::vector<std::string>> rows;
      const int nrows = static_cast<int>(testutil::rand_int(1, 6));
      const int ncols = static_cast<int>(testutil::rand_int(1, 5));
      std::ostringstream out;
      for (int r = 0; r < nrows; ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < ncols; ++c) {
          row.push_back(pieces[testutil::rand_int(0, 6)]);
        }
        for (int c = 0; c < ncols; ++c) {
          if (c > 0) out << ',';
          out << csv::escape(row[c]);
        }
        out << '\n';
        rows.push_back(std::move(row));
      }
      CHECK(csv::parse(out.str()) == rows);
    }
  }
}

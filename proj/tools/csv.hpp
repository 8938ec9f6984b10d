// Copyright 2026 The dampsearch Authors
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

#ifndef DAMPSEARCH_TOOLS_CSV_HPP
#define DAMPSEARCH_TOOLS_CSV_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dampsearch::csv {

// 17 significant digits, '.' separator, independent of the global locale.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Comma-separated, header row first, LF line endings. Fields never contain
// commas or quotes, so no quoting is done.
class Writer {
 public:
  Writer(std::ostream& out, std::vector<std::string> header);

  Writer& add(double v);
  Writer& add(std::int64_t v);
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::vector<std::string> pending_;
};

// Throws std::runtime_error on an empty input or a row whose column count
// differs from the header.
Table read(std::istream& in);

double parse_double(std::string_view field);

}  // namespace dampsearch::csv

#endif  // DAMPSEARCH_TOOLS_CSV_HPP

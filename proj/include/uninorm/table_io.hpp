// Copyright 2026 The uninorm Authors
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

#ifndef UNINORM_TABLE_IO_HPP
#define UNINORM_TABLE_IO_HPP

#include <string>
#include <string_view>

#include "uninorm/chain.hpp"

namespace uninorm {

/// A table document as read from disk: well formed, not yet validated
/// against the uninorm axioms.
struct TableDocument {
  OpTable table;
  Index neutral;
};

/// Reads the table format:
///
///   # comment lines and trailing comments are allowed
///   scale <n>
///   neutral <e>
///   <n+1 lines of n+1 space-separated integers>
///
/// Throws ParseError with the line/column of the first defect (bad token,
/// wrong row length, entry out of range, asymmetric cell).
TableDocument parse_table(std::string_view text);

/// Writes the canonical form: no comments, single spaces, trailing newline.
std::string write_table(const OpTable& table, Index neutral);

/// Lower-level entry used by the decomposition reader: parses one table
/// document starting at `line_no` (1-based) from the given lines. Advances
/// `line_no` past the consumed lines.
TableDocument parse_table_lines(const std::vector<std::string>& lines, std::size_t& line_no);

/// Splits into lines, stripping '#' comments and trailing whitespace.
std::vector<std::string> split_document(std::string_view text);

}  // namespace uninorm

#endif  // UNINORM_TABLE_IO_HPP

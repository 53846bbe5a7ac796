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

#include "uninorm/table_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace uninorm {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int to_int(const Token& tok, int line_no) {
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct Keyed {
  int value;
  int line;
  int column;
};

Keyed keyed_value(const std::vector<std::string>& lines, std::size_t& line_no, std::string_view key) {
  while (line_no <= lines.size() && blank(lines[line_no - 1])) ++line_no;
  if (line_no > lines.size()) {
    throw ParseError(static_cast<int>(line_no), 1, "missing '" + std::string(key) + "' line");
  }
  const auto toks = tokenize(lines[line_no - 1]);
  const int ln = static_cast<int>(line_no);
  if (toks[0].text != key) {
    throw ParseError(ln, toks[0].column, "expected '" + std::string(key) + "', got '" + std::string(toks[0].text) + "'");
  }
  if (toks.size() != 2) throw ParseError(ln, toks[0].column, "'" + std::string(key) + "' takes exactly one integer");
  const int v = to_int(toks[1], ln);
  ++line_no;
  return {v, ln, toks[1].column};
}

}  // namespace

std::vector<std::string> split_document(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

TableDocument parse_table_lines(const std::vector<std::string>& lines, std::size_t& line_no) {
  const Keyed scale = keyed_value(lines, line_no, "scale");
  const int n = scale.value;
  if (n < 1) throw ParseError(scale.line, scale.column, "scale must be at least 1");
  const Keyed neutral = keyed_value(lines, line_no, "neutral");
  const int e = neutral.value;
  if (e < 0 || e > n) {
    throw ParseError(neutral.line, neutral.column, "neutral element must lie in 0.." + std::to_string(n));
  }

  const int m = n + 1;
  std::vector<Index> values(static_cast<std::size_t>(m) * m);
  std::vector<std::pair<int, int>> where(values.size());  // (line, column) of each entry
  for (int x = 0; x < m; ++x) {
    while (line_no <= lines.size() && blank(lines[line_no - 1])) ++line_no;
    if (line_no > lines.size()) {
      throw ParseError(static_cast<int>(lines.size()), 1,
                       "expected " + std::to_string(m) + " rows, found " + std::to_string(x));
    }
    const int ln = static_cast<int>(line_no);
    const auto toks = tokenize(lines[line_no - 1]);
    if (static_cast<int>(toks.size()) != m) {
      const int col = static_cast<int>(toks.size()) > m ? toks[m].column : static_cast<int>(lines[line_no - 1].size()) + 1;
      throw ParseError(ln, col, "row " + std::to_string(x) + " has " + std::to_string(toks.size()) +
                                    " entries, expected " + std::to_string(m));
    }
    for (int y = 0; y < m; ++y) {
      const int v = to_int(toks[y], ln);
      if (v < 0 || v > n) {
        throw ParseError(ln, toks[y].column, "entry " + std::to_string(v) + " is outside 0.." + std::to_string(n));
      }
      values[static_cast<std::size_t>(x) * m + y] = v;
      where[static_cast<std::size_t>(x) * m + y] = {ln, toks[y].column};
    }
    ++line_no;
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < x; ++y) {
      const auto a = values[static_cast<std::size_t>(x) * m + y];
      const auto b = values[static_cast<std::size_t>(y) * m + x];
      if (a != b) {
        const auto [ln, col] = where[static_cast<std::size_t>(x) * m + y];
        throw ParseError(ln, col, "table is not symmetric: (" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                                      std::to_string(a) + " but (" + std::to_string(y) + "," + std::to_string(x) +
                                      ") = " + std::to_string(b));
      }
    }
  }
  return TableDocument{OpTable(ChainScale(n), std::move(values)), e};
}

TableDocument parse_table(std::string_view text) {
  const auto lines = split_document(text);
  std::size_t line_no = 1;
  TableDocument doc = parse_table_lines(lines, line_no);
  while (line_no <= lines.size()) {
    if (!blank(lines[line_no - 1])) {
      throw ParseError(static_cast<int>(line_no), 1, "unexpected content after the last row");
    }
    ++line_no;
  }
  return doc;
}

std::string write_table(const OpTable& table, Index neutral) {
  std::ostringstream os;
  os << "scale " << table.n() << "\nneutral " << neutral << '\n';
  for (Index x = 0; x <= table.n(); ++x) {
    for (Index y = 0; y <= table.n(); ++y) os << (y ? " " : "") << table(x, y);
    os << '\n';
  }
  return os.str();
}

}  // namespace uninorm

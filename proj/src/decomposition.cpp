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

#include "uninorm/decomposition.hpp"

#include <sstream>

#include "uninorm/table_io.hpp"

namespace uninorm {

namespace {

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << to_string(v.law) << " at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
  os << ")";
  if (!v.values.empty()) {
    os << " values";
    for (auto x : v.values) os << ' ' << x;
  }
  if (!v.detail.empty()) os << " (" << v.detail << ")";
  return os.str();
}

[[noreturn]] void reject(const std::string& msg) { throw Error(Errc::composition, msg); }

// Keys of the selection domain in canonical order.
std::vector<std::pair<Index, Index>> selection_domain(TheoremCase c, int n, Index e2) {
  std::vector<std::pair<Index, Index>> keys;
  if (c == TheoremCase::greater_neutral) {
    for (Index x = 0; x < e2; ++x) {
      for (Index y = e2; y <= n; ++y) keys.emplace_back(x, y);
    }
  } else {
    for (Index x = e2 + 1; x <= n; ++x) {
      for (Index y = 0; y <= e2; ++y) keys.emplace_back(x, y);
    }
  }
  return keys;
}

void require_component(const std::optional<Uninorm>& u, bool wanted, int n, Index e, const char* name) {
  if (!wanted) {
    if (u) reject(std::string(name) + " must be absent for this neutral element");
    return;
  }
  if (!u) reject(std::string(name) + " is missing");
  if (u->n() != n || u->neutral() != e) {
    reject(std::string(name) + " must live on L_" + std::to_string(n) + " with neutral " + std::to_string(e) +
           ", got L_" + std::to_string(u->n()) + " with neutral " + std::to_string(u->neutral()));
  }
}

Uninorm candidate(OpTable table, Index e, const char* which) {
  try {
    return Uninorm(std::move(table), e);
  } catch (const InvalidUninorm& err) {
    reject(std::string(which) + " candidate is not a uninorm: " + describe(err.report().violations().front()));
  }
}

}  // namespace

Decomposition decompose(const Uninorm& u1, const Uninorm& u2) {
  const Classification cls = classify_and_check(u1, u2);
  if (cls.theorem_case == TheoremCase::equal_neutral) {
    throw Error(Errc::wrong_case, "decomposition needs e1 != e2");
  }
  if (!cls.distributive()) {
    throw Error(Errc::refused, "pair is not distributive: " + describe(cls.distributivity.violations().front()));
  }
  if (!cls.theorem.verdict()) {
    throw Error(Errc::refused, "theorem divergence, structure conditions fail on a distributive pair: " +
                                   describe(cls.theorem.violations().front()));
  }

  const int n = u1.n();
  const Index e1 = u1.neutral();
  const Index e2 = u2.neutral();
  const bool greater = cls.theorem_case == TheoremCase::greater_neutral;

  std::optional<Uninorm> residual;
  if (greater && e2 > 0) residual.emplace(restrict_table(u1.table(), 0, e2), e2);
  if (!greater && e2 < n) residual.emplace(restrict_table(u1.table(), e2, n), 0);

  Decomposition d{
      cls.theorem_case,
      n,
      e1,
      e2,
      greater ? Uninorm(restrict_table(u1.table(), e2, n), e1 - e2) : Uninorm(restrict_table(u1.table(), 0, e2), e1),
      greater ? Uninorm(restrict_table(u2.table(), e2, n), 0) : Uninorm(restrict_table(u2.table(), 0, e2), e2),
      std::move(residual),
      {},
  };
  for (const auto& [x, y] : selection_domain(d.theorem_case, n, e2)) {
    d.selection[{x, y}] = u1(x, y) == x ? Choice::first : Choice::second;
  }
  return d;
}

std::pair<Uninorm, Uninorm> compose(const Decomposition& d, ChainScale scale, Index e1, Index e2) {
  const int n = scale.n();
  if (d.n != n || d.e1 != e1 || d.e2 != e2) {
    reject("decomposition was made for (n, e1, e2) = (" + std::to_string(d.n) + ", " + std::to_string(d.e1) + ", " +
           std::to_string(d.e2) + ")");
  }
  if (!scale.contains(e1) || !scale.contains(e2)) reject("neutral elements outside the chain");
  const bool greater = d.theorem_case == TheoremCase::greater_neutral;
  if (d.theorem_case == TheoremCase::equal_neutral || (greater != (e1 > e2)) || e1 == e2) {
    reject(std::string("case ") + std::string(to_string(d.theorem_case)) + " does not match e1 = " +
           std::to_string(e1) + ", e2 = " + std::to_string(e2));
  }

  if (greater) {
    require_component(d.inner, true, n - e2, e1 - e2, "inner");
    require_component(d.boundary, true, n - e2, 0, "boundary");
    require_component(d.residual, e2 > 0, e2, e2, "residual");
  } else {
    require_component(d.inner, true, e2, e1, "inner");
    require_component(d.boundary, true, e2, e2, "boundary");
    require_component(d.residual, e2 < n, n - e2, 0, "residual");
  }

  const auto domain = selection_domain(d.theorem_case, n, e2);
  if (d.selection.size() != domain.size()) {
    reject("selection has " + std::to_string(d.selection.size()) + " points, expected " +
           std::to_string(domain.size()));
  }
  for (const auto& key : domain) {
    const auto it = d.selection.find(key);
    if (it == d.selection.end()) {
      reject("selection is missing (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
    const auto [x, y] = key;
    const bool on_strip = greater ? (y <= e1) : (y >= e1);
    if (on_strip && it->second != Choice::first) {
      reject("selection must pick the " + std::string(greater ? "minimum" : "maximum") + " at (" + std::to_string(x) +
             "," + std::to_string(y) + ")");
    }
    const bool side_range = greater ? (y >= e1) : (y <= e1);
    if (side_range && it->second == Choice::second) {
      const Index local = greater ? y - e2 : y;
      if (d.boundary(local, local) != local) {
        reject("selection picks " + std::to_string(y) + " at (" + std::to_string(x) + "," + std::to_string(y) +
               ") but u2(" + std::to_string(y) + "," + std::to_string(y) + ") = " +
               std::to_string(d.boundary(local, local) + (greater ? e2 : 0)));
      }
    }
  }

  auto selected = [&](Index x, Index y) {
    // Callers pass x <= y; orient the key the way the selection stores it.
    const auto key = greater ? std::make_pair(x, y) : std::make_pair(y, x);
    const Choice c = d.selection.at(key);
    return c == Choice::first ? key.first : key.second;
  };

  OpTable t1 = OpTable::from_function(scale, [&](Index x, Index y) -> Index {
    if (greater) {
      if (x >= e2 && y >= e2) return d.inner(x - e2, y - e2) + e2;
      if (x <= e2 && y <= e2) return d.residual ? (*d.residual)(x, y) : x;
    } else {
      if (x <= e2 && y <= e2) return d.inner(x, y);
      if (x >= e2 && y >= e2) return d.residual ? (*d.residual)(x - e2, y - e2) + e2 : x;
    }
    return selected(x, y);
  });
  OpTable t2 = OpTable::from_function(scale, [&](Index x, Index y) -> Index {
    if (greater) {
      if (x >= e2 && y >= e2) return d.boundary(x - e2, y - e2) + e2;
      if (x <= e2 && y <= e2) return std::min(x, y);
    } else {
      if (x <= e2 && y <= e2) return d.boundary(x, y);
      if (x >= e2 && y >= e2) return std::max(x, y);
    }
    return selected(x, y);
  });

  Uninorm u1 = candidate(std::move(t1), e1, "u1");
  Uninorm u2 = candidate(std::move(t2), e2, "u2");
  const CheckReport conditions = theorem_conditions(u1, u2);
  if (!conditions.verdict()) {
    reject("composed pair fails the structure conditions: " + describe(conditions.violations().front()));
  }
  return {std::move(u1), std::move(u2)};
}

std::string write_decomposition(const Decomposition& d) {
  std::ostringstream os;
  os << "case " << to_string(d.theorem_case) << "\nscale " << d.n << "\ne1 " << d.e1 << "\ne2 " << d.e2 << '\n';
  os << "inner\n" << write_table(d.inner.table(), d.inner.neutral());
  os << "boundary\n" << write_table(d.boundary.table(), d.boundary.neutral());
  if (d.residual) os << "residual\n" << write_table(d.residual->table(), d.residual->neutral());
  os << "selection\n";
  for (const auto& [key, choice] : d.selection) {
    os << key.first << ' ' << key.second << ' ' << (choice == Choice::first ? "first" : "second") << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::size_t skip_blank(const std::vector<std::string>& lines, std::size_t line_no) {
  while (line_no <= lines.size() && words(lines[line_no - 1]).empty()) ++line_no;
  return line_no;
}

int keyed_int(const std::vector<std::string>& lines, std::size_t& line_no, const std::string& key) {
  line_no = skip_blank(lines, line_no);
  const int ln = static_cast<int>(line_no);
  if (line_no > lines.size()) throw ParseError(ln, 1, "missing '" + key + "'");
  const auto w = words(lines[line_no - 1]);
  if (w.size() != 2 || w[0] != key) throw ParseError(ln, 1, "expected '" + key + " <integer>'");
  try {
    std::size_t used = 0;
    const int v = std::stoi(w[1], &used);
    if (used != w[1].size()) throw std::invalid_argument(w[1]);
    ++line_no;
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(ln, static_cast<int>(lines[line_no - 1].find(w[1])) + 1, "expected an integer");
  }
}

Uninorm component(const std::vector<std::string>& lines, std::size_t& line_no, const std::string& header) {
  const int ln = static_cast<int>(line_no);
  TableDocument doc = parse_table_lines(lines, line_no);
  try {
    return Uninorm(std::move(doc.table), doc.neutral);
  } catch (const InvalidUninorm& err) {
    throw ParseError(ln, 1, header + " is not a uninorm: " + describe(err.report().violations().front()));
  }
}

}  // namespace

Decomposition parse_decomposition(std::string_view text) {
  const auto lines = split_document(text);
  std::size_t line_no = skip_blank(lines, 1);
  if (line_no > lines.size()) throw ParseError(1, 1, "empty decomposition document");
  auto w = words(lines[line_no - 1]);
  if (w.size() != 2 || w[0] != "case") throw ParseError(static_cast<int>(line_no), 1, "expected 'case <name>'");
  TheoremCase c;
  if (w[1] == "greater-neutral") {
    c = TheoremCase::greater_neutral;
  } else if (w[1] == "less-neutral") {
    c = TheoremCase::less_neutral;
  } else {
    throw ParseError(static_cast<int>(line_no), 6, "case must be greater-neutral or less-neutral");
  }
  ++line_no;
  const int n = keyed_int(lines, line_no, "scale");
  const Index e1 = keyed_int(lines, line_no, "e1");
  const Index e2 = keyed_int(lines, line_no, "e2");

  auto header = [&](const std::string& name, bool optional) {
    const std::size_t l = skip_blank(lines, line_no);
    if (l <= lines.size() && words(lines[l - 1]) == std::vector<std::string>{name}) {
      line_no = l + 1;
      return true;
    }
    if (!optional) throw ParseError(static_cast<int>(std::min(l, lines.size())), 1, "expected '" + name + "'");
    return false;
  };

  header("inner", false);
  Uninorm inner = component(lines, line_no, "inner");
  header("boundary", false);
  Uninorm boundary = component(lines, line_no, "boundary");
  std::optional<Uninorm> residual;
  if (header("residual", true)) residual = component(lines, line_no, "residual");
  header("selection", false);

  std::map<std::pair<Index, Index>, Choice> selection;
  for (; line_no <= lines.size(); ++line_no) {
    w = words(lines[line_no - 1]);
    if (w.empty()) continue;
    const int ln = static_cast<int>(line_no);
    if (w.size() != 3) throw ParseError(ln, 1, "expected '<x> <y> first|second'");
    Index x = 0, y = 0;
    try {
      x = std::stoi(w[0]);
      y = std::stoi(w[1]);
    } catch (const std::logic_error&) {
      throw ParseError(ln, 1, "selection coordinates must be integers");
    }
    Choice choice;
    if (w[2] == "first") {
      choice = Choice::first;
    } else if (w[2] == "second") {
      choice = Choice::second;
    } else {
      throw ParseError(ln, static_cast<int>(lines[line_no - 1].rfind(w[2])) + 1, "choice must be first or second");
    }
    if (!selection.emplace(std::make_pair(x, y), choice).second) {
      throw ParseError(ln, 1, "duplicate selection point");
    }
  }
  return Decomposition{c, n, e1, e2, std::move(inner), std::move(boundary), std::move(residual), std::move(selection)};
}

}  // namespace uninorm

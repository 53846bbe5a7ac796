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

#include "uninorm/uninorm.hpp"

#include <algorithm>
#include <sstream>

namespace uninorm {

namespace {

std::string summarize(const CheckReport& report) {
  std::ostringstream os;
  os << "table is not a uninorm:";
  for (const auto& v : report.violations()) {
    os << ' ' << to_string(v.law) << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ')';
    if (!v.detail.empty()) os << " [" << v.detail << ']';
    os << ';';
  }
  return os.str();
}

}  // namespace

CheckReport validate_uninorm(const OpTable& t, Index e, Witnesses policy) {
  CheckReport report(policy);
  const int n = t.n();
  if (!t.scale().contains(e)) {
    report.add(Law::structure, {}, {e}, "neutral element outside 0.." + std::to_string(n));
    return report;
  }

  for (Index x = 0; x <= n; ++x) {
    if (t(e, x) != x && report.wants(Law::neutrality)) report.add(Law::neutrality, {x}, {t(e, x)});
  }

  // Adjacent rows suffice for monotonicity; symmetry covers columns.
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y <= n; ++y) {
      if (t(x, y) > t(x + 1, y) && report.wants(Law::monotonicity)) {
        report.add(Law::monotonicity, {x, y}, {t(x, y), t(x + 1, y)});
      }
    }
  }

  // Under commutativity the triples (x,y,z) and (z,y,x) state the same
  // equation, so x <= z is enough.
  for (Index x = 0; x <= n; ++x) {
    for (Index y = 0; y <= n; ++y) {
      const Index xy = t(x, y);
      for (Index z = x; z <= n; ++z) {
        const Index lhs = t(xy, z);
        const Index rhs = t(x, t(y, z));
        if (lhs != rhs) {
          if (!report.wants(Law::associativity)) goto done;
          report.add(Law::associativity, {x, y, z}, {lhs, rhs});
        }
      }
    }
  }
done:
  return report;
}

CheckReport validate_rows(int n, const std::vector<std::vector<Index>>& rows, Index e, Witnesses policy) {
  CheckReport report(policy);
  if (n < 1) {
    report.add(Law::structure, {}, {n}, "scale must be at least 1");
    return report;
  }
  const auto m = static_cast<std::size_t>(n) + 1;
  if (rows.size() != m) {
    report.add(Law::structure, {}, {static_cast<Index>(rows.size())}, "expected " + std::to_string(m) + " rows");
    return report;
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (rows[x].size() != m) {
      report.add(Law::structure, {static_cast<Index>(x)}, {static_cast<Index>(rows[x].size())},
                 "row has wrong length");
      return report;
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Index v = rows[x][y];
      if (v < 0 || v > n) {
        report.add(Law::structure, {static_cast<Index>(x), static_cast<Index>(y)}, {v}, "entry out of range");
      } else if (v != rows[y][x] && x < y) {
        report.add(Law::structure, {static_cast<Index>(x), static_cast<Index>(y)}, {v, rows[y][x]},
                   "asymmetric cell");
      }
    }
  }
  if (!report.verdict()) return report;
  std::vector<Index> flat;
  flat.reserve(m * m);
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return validate_uninorm(OpTable(ChainScale(n), std::move(flat)), e, policy);
}

InvalidUninorm::InvalidUninorm(CheckReport report)
    : Error(Errc::invalid_uninorm, summarize(report)), report_(std::move(report)) {}

Uninorm::Uninorm(OpTable table, Index e) : table_(std::move(table)), e_(e) {
  CheckReport report = validate_uninorm(table_, e_);
  if (!report.verdict()) throw InvalidUninorm(std::move(report));
}

RegionTag region_of(Index x, Index y, Index e) noexcept {
  if (x <= e && y <= e) return RegionTag::lower_square;
  if (x >= e && y >= e) return RegionTag::upper_square;
  return RegionTag::off_diagonal;
}

bool square_is_closed(const OpTable& t, Index lo, Index hi) {
  for (Index x = lo; x <= hi; ++x) {
    for (Index y = x; y <= hi; ++y) {
      if (t(x, y) < lo || t(x, y) > hi) return false;
    }
  }
  return true;
}

OpTable restrict_table(const OpTable& t, Index lo, Index hi) {
  if (lo < 0 || hi > t.n() || hi <= lo) {
    throw Error(Errc::argument, "restriction [" + std::to_string(lo) + "," + std::to_string(hi) + "] is not a chain");
  }
  for (Index x = lo; x <= hi; ++x) {
    for (Index y = x; y <= hi; ++y) {
      if (t(x, y) < lo || t(x, y) > hi) {
        throw Error(Errc::domain, "restriction to [" + std::to_string(lo) + "," + std::to_string(hi) +
                                      "] is not closed: U(" + std::to_string(x) + "," + std::to_string(y) +
                                      ") = " + std::to_string(t(x, y)));
      }
    }
  }
  return OpTable::from_function(ChainScale(hi - lo), [&](Index x, Index y) { return t(x + lo, y + lo) - lo; });
}

Uninorm underlying_tnorm(const Uninorm& u) {
  const Index e = u.neutral();
  if (e == 0) throw Error(Errc::empty_restriction, "neutral element 0 leaves no lower square");
  return Uninorm(restrict_table(u.table(), 0, e), e);
}

Uninorm underlying_tconorm(const Uninorm& u) {
  const Index e = u.neutral();
  if (e == u.n()) throw Error(Errc::empty_restriction, "neutral element n leaves no upper square");
  return Uninorm(restrict_table(u.table(), e, u.n()), 0);
}

bool is_idempotent(const Uninorm& u) noexcept {
  for (Index x = 0; x <= u.n(); ++x) {
    if (u(x, x) != x) return false;
  }
  return true;
}

bool is_locally_internal(const Uninorm& u) noexcept {
  const Index e = u.neutral();
  for (Index x = 0; x < e; ++x) {
    for (Index y = e + 1; y <= u.n(); ++y) {
      const Index v = u(x, y);
      if (v != x && v != y) return false;
    }
  }
  return true;
}

bool is_conjunctive(const Uninorm& u) {
  if (!u.is_proper()) {
    throw Error(Errc::domain, "conjunctive/disjunctive is defined for proper uninorms only (0 < e < n)");
  }
  const Index corner = u(0, u.n());
  if (corner == 0) return true;
  if (corner == u.n()) return false;
  throw Error(Errc::internal, "valid proper uninorm with U(0,n) = " + std::to_string(corner));
}

Uninorm dual(const Uninorm& u) {
  const int n = u.n();
  return Uninorm(OpTable::from_function(u.scale(), [&](Index x, Index y) { return n - u(n - x, n - y); }),
                 n - u.neutral());
}

}  // namespace uninorm

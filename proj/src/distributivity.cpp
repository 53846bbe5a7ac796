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

#include "uninorm/distributivity.hpp"

#include <algorithm>

namespace uninorm {

std::string_view to_string(TheoremCase c) noexcept {
  switch (c) {
    case TheoremCase::equal_neutral: return "equal-neutral";
    case TheoremCase::greater_neutral: return "greater-neutral";
    case TheoremCase::less_neutral: return "less-neutral";
  }
  return "unknown";
}

TheoremCase theorem_case(const Uninorm& u1, const Uninorm& u2) noexcept {
  if (u1.neutral() == u2.neutral()) return TheoremCase::equal_neutral;
  return u1.neutral() > u2.neutral() ? TheoremCase::greater_neutral : TheoremCase::less_neutral;
}

namespace {

void require_same_scale(const Uninorm& u1, const Uninorm& u2) {
  if (u1.n() != u2.n()) {
    throw Error(Errc::domain, "scale mismatch: L_" + std::to_string(u1.n()) + " vs L_" + std::to_string(u2.n()));
  }
}

bool either(Index v, Index x, Index y) { return v == x || v == y; }

// Distributivity of `inner` over `outer` on a subchain, with witnesses
// shifted back by `offset` into the caller's coordinates.
void distributivity_into(CheckReport& report, Law law, const Uninorm& inner, const Uninorm& outer, Index offset) {
  const CheckReport sub = check_distributivity(inner, outer, report.policy());
  for (const auto& v : sub.violations()) {
    std::vector<Index> w = v.witness;
    std::vector<Index> vals = v.values;
    for (auto& i : w) i += offset;
    for (auto& i : vals) i += offset;
    report.add(law, std::move(w), std::move(vals));
  }
}

// u2 locally internal on A(e2); recorded as a hypothesis violation.
void local_internality(CheckReport& report, const Uninorm& u2) {
  const Index e2 = u2.neutral();
  for (Index x = 0; x < e2; ++x) {
    for (Index y = e2 + 1; y <= u2.n(); ++y) {
      if (!either(u2(x, y), x, y) && report.wants(Law::hypothesis)) {
        report.add(Law::hypothesis, {x, y}, {u2(x, y)}, "u2 not locally internal");
      }
    }
  }
}

// Index ranges of the greater-neutral clauses (e2 < e1):
//   hypothesis   (x, y) in [0,e2]^2               u2 = min
//   clause i     x in [0,e2[, y in [e2,n]          u1 = u2 in {x, y}
//   side cond.   x0 in [0,e2[, y0 in [e1,n]        u2(x0,y0) = y0 => u2(y0,y0) = y0
//   clause ii    x in [0,e2[, y in [e2,e1]         u1 = u2 = min
//   clause iii   [e2,n]^2                          closed, distributes over S2
void greater_clauses(CheckReport& r, const Uninorm& u1, const Uninorm& u2) {
  const int n = u1.n();
  const Index e1 = u1.neutral();
  const Index e2 = u2.neutral();

  for (Index x = 0; x <= e2; ++x) {
    for (Index y = x; y <= e2; ++y) {
      if (u2(x, y) != std::min(x, y) && r.wants(Law::hypothesis)) {
        r.add(Law::hypothesis, {x, y}, {u2(x, y)}, "underlying t-norm of u2 is not min");
      }
    }
  }
  local_internality(r, u2);

  for (Index x = 0; x < e2; ++x) {
    for (Index y = e2; y <= n; ++y) {
      const Index a = u1(x, y);
      const Index b = u2(x, y);
      if ((a != b || !either(b, x, y)) && r.wants(Law::clause_i)) r.add(Law::clause_i, {x, y}, {a, b});
      if (y >= e1 && b == y && u2(y, y) != y && r.wants(Law::side_condition)) {
        r.add(Law::side_condition, {x, y}, {b, u2(y, y)});
      }
    }
  }

  for (Index x = 0; x < e2; ++x) {
    for (Index y = e2; y <= e1; ++y) {
      const Index a = u1(x, y);
      const Index b = u2(x, y);
      if ((a != x || b != x) && r.wants(Law::clause_ii)) r.add(Law::clause_ii, {x, y}, {a, b});
    }
  }

  for (Index x = e2; x <= n; ++x) {
    for (Index y = x; y <= n; ++y) {
      if (u1(x, y) < e2 && r.wants(Law::clause_iii_closure)) {
        r.add(Law::clause_iii_closure, {x, y}, {u1(x, y)}, "u1 leaves [e2,n]^2");
      }
    }
  }
  if (r.has(Law::clause_iii_closure)) return;
  const Uninorm inner(restrict_table(u1.table(), e2, n), e1 - e2);
  const Uninorm boundary(restrict_table(u2.table(), e2, n), 0);
  distributivity_into(r, Law::clause_iii, inner, boundary, e2);
}

// Index ranges of the less-neutral clauses (e1 < e2):
//   hypothesis   (x, y) in [e2,n]^2               u2 = max
//   clause i     x in ]e2,n], y in [0,e2]          u1 = u2 in {x, y}
//   side cond.   x0 in ]e2,n], y0 in [0,e1]        u2(x0,y0) = y0 => u2(y0,y0) = y0
//   clause ii    x in ]e2,n], y in [e1,e2]         u1 = u2 = max
//   clause iii   [0,e2]^2                          closed, distributes over T2
void less_clauses(CheckReport& r, const Uninorm& u1, const Uninorm& u2) {
  const int n = u1.n();
  const Index e1 = u1.neutral();
  const Index e2 = u2.neutral();

  for (Index x = e2; x <= n; ++x) {
    for (Index y = x; y <= n; ++y) {
      if (u2(x, y) != std::max(x, y) && r.wants(Law::hypothesis)) {
        r.add(Law::hypothesis, {x, y}, {u2(x, y)}, "underlying t-conorm of u2 is not max");
      }
    }
  }
  local_internality(r, u2);

  for (Index x = e2 + 1; x <= n; ++x) {
    for (Index y = 0; y <= e2; ++y) {
      const Index a = u1(x, y);
      const Index b = u2(x, y);
      if ((a != b || !either(b, x, y)) && r.wants(Law::clause_i)) r.add(Law::clause_i, {x, y}, {a, b});
      if (y <= e1 && b == y && u2(y, y) != y && r.wants(Law::side_condition)) {
        r.add(Law::side_condition, {x, y}, {b, u2(y, y)});
      }
    }
  }

  for (Index x = e2 + 1; x <= n; ++x) {
    for (Index y = e1; y <= e2; ++y) {
      const Index a = u1(x, y);
      const Index b = u2(x, y);
      if ((a != x || b != x) && r.wants(Law::clause_ii)) r.add(Law::clause_ii, {x, y}, {a, b});
    }
  }

  for (Index x = 0; x <= e2; ++x) {
    for (Index y = x; y <= e2; ++y) {
      if (u1(x, y) > e2 && r.wants(Law::clause_iii_closure)) {
        r.add(Law::clause_iii_closure, {x, y}, {u1(x, y)}, "u1 leaves [0,e2]^2");
      }
    }
  }
  if (r.has(Law::clause_iii_closure)) return;
  const Uninorm inner(restrict_table(u1.table(), 0, e2), e1);
  const Uninorm boundary(restrict_table(u2.table(), 0, e2), e2);
  distributivity_into(r, Law::clause_iii, inner, boundary, 0);
}

}  // namespace

CheckReport check_distributivity(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  CheckReport report(policy);
  const int n = u1.n();
  for (Index x = 0; x <= n; ++x) {
    for (Index y = 0; y <= n; ++y) {
      const Index xy = u1(x, y);
      for (Index z = y; z <= n; ++z) {
        const Index lhs = u1(x, u2(y, z));
        const Index rhs = u2(xy, u1(x, z));
        if (lhs != rhs) {
          report.add(Law::distributivity, {x, y, z}, {lhs, rhs});
          if (policy == Witnesses::first) return report;
        }
      }
    }
  }
  return report;
}

CheckReport verify_ordered_semiring(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  CheckReport report(policy);
  report.merge(validate_uninorm(u1.table(), u1.neutral(), policy));
  report.merge(validate_uninorm(u2.table(), u2.neutral(), policy));
  report.merge(check_distributivity(u1, u2, policy));
  return report;
}

CheckReport equal_neutral_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  if (u1.neutral() != u2.neutral()) throw Error(Errc::wrong_case, "equal-neutral conditions need e1 = e2");
  CheckReport r(policy);
  const Index e = u1.neutral();
  for (Index x = 0; x <= u2.n(); ++x) {
    if (u2(x, x) != x && r.wants(Law::idempotency)) r.add(Law::idempotency, {x}, {u2(x, x)});
  }
  for (Index x = 0; x < e; ++x) {
    for (Index y = e + 1; y <= u1.n(); ++y) {
      const Index a = u1(x, y);
      const Index b = u2(x, y);
      if ((a != b || !either(b, x, y)) && r.wants(Law::off_diagonal)) r.add(Law::off_diagonal, {x, y}, {a, b});
    }
  }
  return r;
}

CheckReport greater_neutral_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  if (u1.neutral() <= u2.neutral()) throw Error(Errc::wrong_case, "greater-neutral conditions need e1 > e2");
  CheckReport r(policy);
  greater_clauses(r, u1, u2);
  return r;
}

CheckReport less_neutral_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  if (u1.neutral() >= u2.neutral()) throw Error(Errc::wrong_case, "less-neutral conditions need e1 < e2");
  CheckReport r(policy);
  less_clauses(r, u1, u2);
  return r;
}

CheckReport theorem_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  switch (theorem_case(u1, u2)) {
    case TheoremCase::equal_neutral: return equal_neutral_conditions(u1, u2, policy);
    case TheoremCase::greater_neutral: return greater_neutral_conditions(u1, u2, policy);
    case TheoremCase::less_neutral: return less_neutral_conditions(u1, u2, policy);
  }
  throw Error(Errc::internal, "unhandled theorem case");
}

Classification classify_and_check(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  return Classification{theorem_case(u1, u2), theorem_conditions(u1, u2, policy),
                        check_distributivity(u1, u2, policy)};
}

CheckReport necessity_battery(const Uninorm& u1, const Uninorm& u2, Witnesses policy) {
  require_same_scale(u1, u2);
  const int n = u1.n();
  const Index e1 = u1.neutral();
  const Index e2 = u2.neutral();
  CheckReport r(policy);
  switch (theorem_case(u1, u2)) {
    case TheoremCase::equal_neutral:
      return equal_neutral_conditions(u1, u2, policy);
    case TheoremCase::greater_neutral:
      // The sufficient clauses plus the strip statements on their closed
      // ranges: u1 = min for x in [0,e2] (x = e2 included), y in [e2,e1].
      greater_clauses(r, u1, u2);
      for (Index x = 0; x <= e2; ++x) {
        for (Index y = e2; y <= e1; ++y) {
          if (u1(x, y) != std::min(x, y) && r.wants(Law::necessity_strip_u1)) {
            r.add(Law::necessity_strip_u1, {x, y}, {u1(x, y), u2(x, y)});
          }
          if (x < e2 && u2(x, y) != std::min(x, y) && r.wants(Law::necessity_strip_u2)) {
            r.add(Law::necessity_strip_u2, {x, y}, {u1(x, y), u2(x, y)});
          }
        }
      }
      return r;
    case TheoremCase::less_neutral:
      less_clauses(r, u1, u2);
      for (Index x = e2; x <= n; ++x) {
        for (Index y = e1; y <= e2; ++y) {
          if (u1(x, y) != std::max(x, y) && r.wants(Law::necessity_strip_u1)) {
            r.add(Law::necessity_strip_u1, {x, y}, {u1(x, y), u2(x, y)});
          }
          if (x > e2 && u2(x, y) != std::max(x, y) && r.wants(Law::necessity_strip_u2)) {
            r.add(Law::necessity_strip_u2, {x, y}, {u1(x, y), u2(x, y)});
          }
        }
      }
      return r;
  }
  throw Error(Errc::internal, "unhandled theorem case");
}

}  // namespace uninorm

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

#ifndef UNINORM_DISTRIBUTIVITY_HPP
#define UNINORM_DISTRIBUTIVITY_HPP

#include <string_view>

#include "uninorm/uninorm.hpp"

namespace uninorm {

/// Ordering of the two neutral elements, which selects the structure theorem
/// that applies to a pair.
enum class TheoremCase { equal_neutral, greater_neutral, less_neutral };

std::string_view to_string(TheoremCase c) noexcept;

TheoremCase theorem_case(const Uninorm& u1, const Uninorm& u2) noexcept;

/// Brute-force check of U1(x, U2(y, z)) = U2(U1(x, y), U1(x, z)) over every
/// triple. Both sides are symmetric in y and z, so only y <= z is scanned.
/// Throws Errc::domain on a scale mismatch.
CheckReport check_distributivity(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

/// Both operations re-validated as commutative monotone semigroups with
/// identity, plus distributivity of u1 over u2: (L_n, u2, u1, <=) is then a
/// commutative ordered semiring.
CheckReport verify_ordered_semiring(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

/// e1 = e2 = e. True iff u2 is idempotent and u1 = u2 in {x, y} on the
/// off-diagonal region. Throws Errc::wrong_case otherwise.
CheckReport equal_neutral_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

/// e2 < e1. Checks, in order:
///   hypothesis  u2 = min on [0,e2]^2 and u2 locally internal
///   clause i    x in [0,e2[, y in [e2,n]: u1 = u2 in {x, y};
///               u2(x0,y0) = y0 with y0 in [e1,n] forces u2(y0,y0) = y0
///   clause ii   x in [0,e2[, y in [e2,e1]: u1 = u2 = min
///   clause iii  u1 closed on [e2,n]^2, and the reindexed restriction
///               (neutral e1 - e2) distributes over u2's t-conorm
/// The boundary values e2 = 0 and e1 = n are accepted; the clauses then
/// degenerate (empty ranges, or the whole chain as the upper square).
/// Throws Errc::wrong_case when e1 <= e2.
CheckReport greater_neutral_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

/// e1 < e2. The order-reversed counterpart, checked directly:
///   hypothesis  u2 = max on [e2,n]^2 and u2 locally internal
///   clause i    x in ]e2,n], y in [0,e2]: u1 = u2 in {x, y};
///               u2(x0,y0) = y0 with y0 in [0,e1] forces u2(y0,y0) = y0
///   clause ii   x in ]e2,n], y in [e1,e2]: u1 = u2 = max
///   clause iii  u1 closed on [0,e2]^2, and that square (neutral e1)
///               distributes over u2's t-norm
/// Throws Errc::wrong_case when e1 >= e2.
CheckReport less_neutral_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

/// Runs the predicate selected by theorem_case.
CheckReport theorem_conditions(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

struct Classification {
  TheoremCase theorem_case;
  CheckReport theorem;
  CheckReport distributivity;

  bool distributive() const noexcept { return distributivity.verdict(); }
  /// False is a theorem divergence: the structural predicate and the brute
  /// force disagree on this pair.
  bool agreement() const noexcept { return theorem.verdict() == distributivity.verdict(); }
};

/// Theorem predicate and brute force side by side. Throws Errc::domain on a
/// scale mismatch.
Classification classify_and_check(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

/// Consequences every distributive pair must satisfy, including the wider
/// closed ranges of the necessity statements (u1 = min for x in [0,e2]
/// rather than [0,e2[). Used as an assertion battery over brute-force
/// distributive pairs; it is not an equivalence.
CheckReport necessity_battery(const Uninorm& u1, const Uninorm& u2, Witnesses policy = Witnesses::first);

}  // namespace uninorm

#endif  // UNINORM_DISTRIBUTIVITY_HPP

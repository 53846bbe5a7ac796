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

#ifndef UNINORM_REPORT_HPP
#define UNINORM_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "uninorm/chain.hpp"

namespace uninorm {

/// The law or theorem clause a violation refers to.
///
/// Witness layouts (all chain indices in the coordinates of the input tables):
///   structure          point (x, y) of the offending cell, or empty for a size/neutral-range defect
///   neutrality         point (x); values {U(e, x)}
///   monotonicity       (x, y) with U(x, y) > U(x + 1, y); values {U(x, y), U(x + 1, y)}
///   associativity      (x, y, z); values {U(U(x,y),z), U(x,U(y,z))}
///   distributivity     (x, y, z); values {U1(x,U2(y,z)), U2(U1(x,y),U1(x,z))}
///   idempotency        (x); values {U2(x, x)}
///   off_diagonal       (x, y); values {U1(x, y), U2(x, y)}
///   hypothesis         (x, y); values {U2(x, y)}
///   clause_i           (x, y); values {U1(x, y), U2(x, y)}
///   side_condition     (x0, y0); values {U2(x0, y0), U2(y0, y0)}
///   clause_ii          (x, y); values {U1(x, y), U2(x, y)}
///   clause_iii_closure (x, y); values {U1(x, y)}
///   clause_iii         (x, y, z); values as distributivity
///   necessity_*        (x, y); values {U1(x, y), U2(x, y)}
enum class Law {
  structure,
  neutrality,
  monotonicity,
  associativity,
  distributivity,
  idempotency,
  off_diagonal,
  hypothesis,
  clause_i,
  side_condition,
  clause_ii,
  clause_iii_closure,
  clause_iii,
  necessity_strip_u1,
  necessity_strip_u2,
};

std::string_view to_string(Law law) noexcept;

struct Violation {
  Law law;
  std::vector<Index> witness;
  std::vector<Index> values;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Collect one witness per law, or every witness found.
enum class Witnesses { first, all };

/// Verdict plus witnesses. The verdict is true exactly when no violation
/// was recorded.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(Witnesses policy) : policy_(policy) {}

  bool verdict() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return verdict(); }

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  Witnesses policy() const noexcept { return policy_; }

  bool has(Law law) const noexcept;
  /// False when the policy is `first` and `law` already has a witness.
  bool wants(Law law) const noexcept { return policy_ == Witnesses::all || !has(law); }

  void add(Violation v);
  void add(Law law, std::vector<Index> witness, std::vector<Index> values, std::string detail = {});
  /// Appends all violations of `other`, honouring this report's policy.
  void merge(const CheckReport& other);

  friend bool operator==(const CheckReport& a, const CheckReport& b) {
    return a.violations_ == b.violations_;
  }

 private:
  Witnesses policy_ = Witnesses::first;
  std::vector<Violation> violations_;
};

}  // namespace uninorm

#endif  // UNINORM_REPORT_HPP

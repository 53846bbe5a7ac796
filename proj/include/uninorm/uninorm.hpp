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

#ifndef UNINORM_UNINORM_HPP
#define UNINORM_UNINORM_HPP

#include <vector>

#include "uninorm/chain.hpp"
#include "uninorm/report.hpp"

namespace uninorm {

/// Checks neutrality, monotonicity and associativity of `table` with
/// neutral element `e`. Commutativity is structural. A neutral index
/// outside the chain is reported as a structure violation.
CheckReport validate_uninorm(const OpTable& table, Index e, Witnesses policy = Witnesses::first);

/// Validates raw rows that have not been through OpTable construction.
/// Wrong dimensions, out-of-range entries and asymmetric cells come back as
/// structure violations; a structurally sound table is then checked against
/// the axioms.
CheckReport validate_rows(int n, const std::vector<std::vector<Index>>& rows, Index e,
                          Witnesses policy = Witnesses::first);

/// A table that satisfies the uninorm axioms for neutral element e. The
/// constructor validates; there is no unchecked path.
class Uninorm {
 public:
  /// Throws InvalidUninorm when the axioms fail.
  Uninorm(OpTable table, Index e);

  const OpTable& table() const noexcept { return table_; }
  const ChainScale& scale() const noexcept { return table_.scale(); }
  int n() const noexcept { return table_.n(); }
  Index neutral() const noexcept { return e_; }

  Index operator()(Index x, Index y) const noexcept { return table_(x, y); }

  bool is_tnorm() const noexcept { return e_ == n(); }
  bool is_tconorm() const noexcept { return e_ == 0; }
  bool is_proper() const noexcept { return e_ > 0 && e_ < n(); }

  friend bool operator==(const Uninorm&, const Uninorm&) = default;

 private:
  OpTable table_;
  Index e_;
};

/// Raised by the Uninorm constructor; carries the failing report.
class InvalidUninorm : public Error {
 public:
  explicit InvalidUninorm(CheckReport report);
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

enum class RegionTag { lower_square, upper_square, off_diagonal };

/// Points on the lines x = e or y = e inside a square belong to that
/// square; (e, e) is in the lower square.
RegionTag region_of(Index x, Index y, Index e) noexcept;

/// Restriction of `table` to [lo, hi]^2 reindexed by i -> i - lo. Throws
/// Errc::domain when the restriction leaves the square, with the first
/// escaping cell in the message.
OpTable restrict_table(const OpTable& table, Index lo, Index hi);

/// True when every value of the square [lo, hi]^2 stays in [lo, hi].
bool square_is_closed(const OpTable& table, Index lo, Index hi);

/// u on [0, e]^2 as a t-norm on L_e. Throws Errc::empty_restriction if e = 0.
Uninorm underlying_tnorm(const Uninorm& u);
/// u on [e, n]^2 reindexed to L_{n-e} as a t-conorm. Throws
/// Errc::empty_restriction if e = n.
Uninorm underlying_tconorm(const Uninorm& u);

bool is_idempotent(const Uninorm& u) noexcept;
/// U(x, y) in {x, y} on the off-diagonal region.
bool is_locally_internal(const Uninorm& u) noexcept;
/// U(0, n) = 0. Throws Errc::domain for t-norms and t-conorms.
bool is_conjunctive(const Uninorm& u);

/// Order-reversing conjugate: e -> n - e, U*(x, y) = n - U(n - x, n - y).
Uninorm dual(const Uninorm& u);

}  // namespace uninorm

#endif  // UNINORM_UNINORM_HPP

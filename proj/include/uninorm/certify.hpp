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

#ifndef UNINORM_CERTIFY_HPP
#define UNINORM_CERTIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "uninorm/decomposition.hpp"
#include "uninorm/search.hpp"

namespace uninorm {

struct CertifyOptions {
  SearchOptions search{};
  /// Pair-space certification refuses scales above this.
  int max_n = 4;
  /// Stop after this many ordered pairs and mark the report partial; 0 means
  /// no budget.
  std::uint64_t max_pairs = 0;
};

/// One pair on which the structure predicate and the brute force disagree.
struct Divergence {
  Index e1;
  std::size_t index1;  ///< position of u1 in the enumeration for e1
  Index e2;
  std::size_t index2;
  bool theorem_verdict;
  bool distributive;
  OpTable u1;
  OpTable u2;
  CheckReport theorem;
  CheckReport distributivity;
};

struct CaseTally {
  std::uint64_t pairs = 0;
  std::uint64_t distributive = 0;
  std::uint64_t theorem_true = 0;
  std::uint64_t agreements = 0;

  friend bool operator==(const CaseTally&, const CaseTally&) = default;
};

struct CertificationReport {
  int n = 0;
  /// uninorms_per_neutral[e] = number of uninorms on L_n with neutral e.
  std::vector<std::uint64_t> uninorms_per_neutral;
  std::uint64_t pairs_checked = 0;
  /// Indexed by TheoremCase.
  std::array<CaseTally, 3> per_case{};
  /// distributive_by_neutral[e1][e2]
  std::vector<std::vector<std::uint64_t>> distributive_by_neutral;
  std::uint64_t agreements = 0;
  std::vector<Divergence> divergences;
  /// Pairs whose necessity battery failed although they are distributive.
  std::uint64_t necessity_failures = 0;
  bool partial = false;
  std::uint64_t node_expansions = 0;
  double wall_seconds = 0.0;

  bool consistent() const noexcept { return !partial && divergences.empty(); }
};

/// Enumerates every uninorm for every neutral element and runs
/// classify_and_check on all ordered pairs in canonical order (e1, e2, i1,
/// i2). Deterministic apart from wall_seconds. Throws Errc::resource when n
/// exceeds options.max_n.
CertificationReport certify(ChainScale scale, const CertifyOptions& options = {});

struct ScanEntry {
  Uninorm u1;
  Uninorm u2;
  std::optional<Decomposition> decomposition;
  CheckReport necessity;
};

/// All distributive pairs (u1 with neutral e1, u2 with neutral e2), each
/// with its decomposition when e1 != e2 and its necessity battery.
std::vector<ScanEntry> scan_pairs(ChainScale scale, Index e1, Index e2, const CertifyOptions& options = {});

}  // namespace uninorm

#endif  // UNINORM_CERTIFY_HPP

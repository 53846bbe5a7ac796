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

#ifndef UNINORM_SEARCH_HPP
#define UNINORM_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "uninorm/uninorm.hpp"

namespace uninorm {

struct EnumerationFilters {
  bool idempotent_only = false;
  bool locally_internal_only = false;
  /// Requires a proper neutral element.
  bool conjunctive_only = false;
};

struct EnumerationTask {
  ChainScale scale;
  Index e;
  EnumerationFilters filters{};
};

/// Each rule can be switched off independently; whatever is not pruned is
/// filtered at the leaves, so the output set never depends on these.
struct PruningRules {
  /// Reject a cell value as soon as it breaks order with an assigned
  /// neighbour in its row or column.
  bool monotonicity = true;
  /// Re-check every triple whose four products just became known.
  bool associativity = true;
  /// Apply the filters as cell-domain restrictions rather than at leaves.
  bool filters = true;
};

struct SearchOptions {
  PruningRules pruning{};
  /// Worker threads; 0 or 1 runs inline.
  unsigned workers = 1;
  /// Enumeration refuses scales above this.
  int max_n = 6;
  /// Depth at which the search tree is cut into independent subtrees when
  /// running with several workers.
  int split_depth = 4;
};

struct EnumerationStats {
  /// Partial assignments accepted by the pruning rules (the root counts).
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

/// Every uninorm on L_n with neutral element e that passes the filters,
/// each exactly once, in lexicographic order of the row-major table. The
/// output is identical for every worker count and pruning configuration.
/// Throws Errc::resource when n exceeds options.max_n and Errc::argument for
/// an invalid task.
std::vector<Uninorm> enumerate_uninorms(const EnumerationTask& task, const SearchOptions& options = {},
                                        EnumerationStats* stats = nullptr);

/// Streaming form: `sink` receives the uninorms in the same order.
void enumerate_uninorms(const EnumerationTask& task, const SearchOptions& options,
                        const std::function<void(const Uninorm&)>& sink, EnumerationStats* stats = nullptr);

}  // namespace uninorm

#endif  // UNINORM_SEARCH_HPP

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

#ifndef UNINORM_CHAIN_HPP
#define UNINORM_CHAIN_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uninorm/error.hpp"

namespace uninorm {

/// A point of the chain L_n, stored as its integer index 0..n.
using Index = int;

/// The finite chain L_n = {0, 1/n, ..., 1}.
class ChainScale {
 public:
  explicit ChainScale(int n) : n_(n) {
    if (n < 1) throw Error(Errc::argument, "chain scale must be at least 1, got " + std::to_string(n));
  }

  int n() const noexcept { return n_; }
  /// Number of chain points, n + 1.
  int size() const noexcept { return n_ + 1; }
  bool contains(Index i) const noexcept { return i >= 0 && i <= n_; }

  friend bool operator==(const ChainScale&, const ChainScale&) = default;

 private:
  int n_;
};

/// A commutative binary operation on L_n, held as a dense (n+1)x(n+1)
/// row-major table. Entries are range-checked and symmetry is enforced on
/// construction, so every OpTable in existence is well formed.
class OpTable {
 public:
  /// Builds the table from x <= y evaluations of `f`, mirroring the rest.
  template <class F>
  static OpTable from_function(ChainScale scale, F&& f) {
    const int m = scale.size();
    std::vector<Index> values(static_cast<std::size_t>(m) * m);
    for (Index x = 0; x < m; ++x) {
      for (Index y = x; y < m; ++y) {
        const Index v = f(x, y);
        values[static_cast<std::size_t>(x) * m + y] = v;
        values[static_cast<std::size_t>(y) * m + x] = v;
      }
    }
    return OpTable(scale, std::move(values));
  }

  /// Row-major values; throws Errc::structural on wrong size, out-of-range
  /// entries, or asymmetry. The message names the first offending cell.
  OpTable(ChainScale scale, std::vector<Index> values);

  const ChainScale& scale() const noexcept { return scale_; }
  int n() const noexcept { return scale_.n(); }
  int size() const noexcept { return scale_.size(); }

  Index operator()(Index x, Index y) const noexcept {
    return values_[static_cast<std::size_t>(x) * scale_.size() + y];
  }
  Index at(Index x, Index y) const;

  std::span<const Index> values() const noexcept { return values_; }

  /// Same table with cell (x, y) and its mirror replaced by v.
  OpTable with_cell(Index x, Index y, Index v) const;

  friend bool operator==(const OpTable&, const OpTable&) = default;
  friend bool operator<(const OpTable& a, const OpTable& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.values_ < b.values_;
  }

 private:
  ChainScale scale_;
  std::vector<Index> values_;
};

}  // namespace uninorm

#endif  // UNINORM_CHAIN_HPP

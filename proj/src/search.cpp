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

#include "uninorm/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace uninorm {

namespace {

constexpr Index kUnknown = -1;

// Backtracking over the free cells (x <= y, neither coordinate equal to e)
// in row-major order, trying values in increasing order. That order makes
// the leaves come out lexicographically sorted.
class TableSearch {
 public:
  TableSearch(const EnumerationTask& task, const PruningRules& pruning)
      : n_(task.scale.n()), m_(task.scale.size()), e_(task.e), filters_(task.filters), pruning_(pruning),
        table_(static_cast<std::size_t>(m_) * m_, kUnknown) {
    for (Index x = 0; x < m_; ++x) set(e_, x, x);
    for (Index x = 0; x < m_; ++x) {
      for (Index y = x; y < m_; ++y) {
        if (x != e_ && y != e_) cells_.emplace_back(x, y);
      }
    }
  }

  std::size_t cell_count() const noexcept { return cells_.size(); }

  // Depth-first from `depth` cells assigned. `on_leaf` receives complete
  // tables; `cut` (if >= 0) stops at that depth and hands the prefix to
  // `on_prefix` instead.
  template <class Leaf, class Prefix>
  void run(std::size_t depth, int cut, bool count_entry, Leaf&& on_leaf, Prefix&& on_prefix) {
    if (count_entry) ++nodes_;
    if (cut >= 0 && depth == static_cast<std::size_t>(cut)) {
      on_prefix(prefix(depth));
      return;
    }
    if (depth == cells_.size()) {
      on_leaf(table_);
      return;
    }
    const auto [x, y] = cells_[depth];
    Index lo = 0;
    Index hi = n_;
    if (pruning_.monotonicity) bounds(x, y, lo, hi);
    if (pruning_.filters) restrict_by_filters(x, y, lo, hi);
    for (Index v = lo; v <= hi; ++v) {
      if (pruning_.filters && !filter_allows(x, y, v)) continue;
      set(x, y, v);
      if (!pruning_.associativity || associative_around(x, y)) run(depth + 1, cut, true, on_leaf, on_prefix);
    }
    set(x, y, kUnknown);
  }

  void apply_prefix(const std::vector<Index>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) set(cells_[i].first, cells_[i].second, values[i]);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Index at(Index x, Index y) const noexcept { return table_[static_cast<std::size_t>(x) * m_ + y]; }

  void set(Index x, Index y, Index v) noexcept {
    table_[static_cast<std::size_t>(x) * m_ + y] = v;
    table_[static_cast<std::size_t>(y) * m_ + x] = v;
  }

  std::vector<Index> prefix(std::size_t depth) const {
    std::vector<Index> out(depth);
    for (std::size_t i = 0; i < depth; ++i) out[i] = at(cells_[i].first, cells_[i].second);
    return out;
  }

  // Order bounds from every assigned cell in rows x and y.
  void bounds(Index x, Index y, Index& lo, Index& hi) const noexcept {
    for (Index k = 0; k < m_; ++k) {
      if (k == y) continue;
      const Index v = at(x, k);
      if (v == kUnknown) continue;
      if (k < y) lo = std::max(lo, v);
      else hi = std::min(hi, v);
    }
    for (Index k = 0; k < m_; ++k) {
      if (k == x) continue;
      const Index v = at(y, k);
      if (v == kUnknown) continue;
      if (k < x) lo = std::max(lo, v);
      else hi = std::min(hi, v);
    }
  }

  void restrict_by_filters(Index x, Index y, Index& lo, Index& hi) const noexcept {
    if (filters_.idempotent_only && x == y) {
      lo = std::max(lo, x);
      hi = std::min(hi, x);
    }
    if (filters_.conjunctive_only && x == 0 && y == n_) hi = std::min(hi, 0);
  }

  bool filter_allows(Index x, Index y, Index v) const noexcept {
    if (filters_.locally_internal_only && region_of(x, y, e_) == RegionTag::off_diagonal) return v == x || v == y;
    return true;
  }

  // Evaluates (ab)c = a(bc); unknown lookups count as consistent.
  bool triple_ok(Index a, Index b, Index c) const noexcept {
    const Index ab = at(a, b);
    const Index bc = at(b, c);
    if (ab == kUnknown || bc == kUnknown) return true;
    const Index lhs = at(ab, c);
    const Index rhs = at(a, bc);
    return lhs == kUnknown || rhs == kUnknown || lhs == rhs;
  }

  // Every triple in which cell (x, y) is one of the four lookups.
  bool associative_around(Index x, Index y) const noexcept {
    const Index pairs[2][2] = {{x, y}, {y, x}};
    for (const auto& p : pairs) {
      const Index u = p[0];
      const Index w = p[1];
      for (Index k = 0; k < m_; ++k) {
        if (!triple_ok(u, w, k) || !triple_ok(k, u, w)) return false;
      }
      for (Index a = 0; a < m_; ++a) {
        for (Index b = 0; b < m_; ++b) {
          const Index ab = at(a, b);
          if (ab == u && !triple_ok(a, b, w)) return false;  // outer lookup U(U(a,b), w)
          if (ab == w && !triple_ok(u, a, b)) return false;  // outer lookup U(u, U(a,b))
        }
      }
    }
    return true;
  }

  int n_;
  int m_;
  Index e_;
  EnumerationFilters filters_;
  PruningRules pruning_;
  std::vector<Index> table_;
  std::vector<std::pair<Index, Index>> cells_;
  std::uint64_t nodes_ = 0;
};

bool passes_filters(const Uninorm& u, const EnumerationFilters& f) {
  if (f.idempotent_only && !is_idempotent(u)) return false;
  if (f.locally_internal_only && !is_locally_internal(u)) return false;
  if (f.conjunctive_only && !is_conjunctive(u)) return false;
  return true;
}

// Turns a complete table into a Uninorm, or nothing if the leaf fails an
// axiom that was not pruned for.
std::optional<Uninorm> accept_leaf(const std::vector<Index>& values, const EnumerationTask& task,
                                   const PruningRules& pruning) {
  OpTable table(task.scale, values);
  CheckReport report = validate_uninorm(table, task.e);
  if (!report.verdict()) {
    if (pruning.monotonicity && pruning.associativity) {
      throw Error(Errc::internal, "enumeration produced a table that fails the axioms");
    }
    return std::nullopt;
  }
  Uninorm u(std::move(table), task.e);
  if (!passes_filters(u, task.filters)) return std::nullopt;
  return u;
}

void check_task(const EnumerationTask& task, const SearchOptions& options) {
  if (task.scale.n() > options.max_n) {
    throw Error(Errc::resource, "enumeration on L_" + std::to_string(task.scale.n()) +
                                    " exceeds the configured limit max_n = " + std::to_string(options.max_n) +
                                    "; the number of candidate tables grows as (n+1)^((n+1)n/2), raise the limit "
                                    "only if you accept that cost");
  }
  if (!task.scale.contains(task.e)) {
    throw Error(Errc::argument, "neutral element " + std::to_string(task.e) + " outside L_" +
                                    std::to_string(task.scale.n()));
  }
  if (task.filters.conjunctive_only && (task.e == 0 || task.e == task.scale.n())) {
    throw Error(Errc::argument, "the conjunctive filter needs a proper neutral element (0 < e < n)");
  }
}

}  // namespace

void enumerate_uninorms(const EnumerationTask& task, const SearchOptions& options,
                        const std::function<void(const Uninorm&)>& sink, EnumerationStats* stats) {
  check_task(task, options);
  EnumerationStats local;

  TableSearch root(task, options.pruning);
  const unsigned workers = std::max(1u, options.workers);
  const int cut = std::clamp(options.split_depth, 0, static_cast<int>(root.cell_count()));

  if (workers == 1) {
    root.run(0, -1, true,
             [&](const std::vector<Index>& values) {
               if (auto u = accept_leaf(values, task, options.pruning)) {
                 ++local.solutions;
                 sink(*u);
               }
             },
             [](const std::vector<Index>&) {});
    local.nodes = root.nodes();
    if (stats) *stats = local;
    return;
  }

  std::vector<std::vector<Index>> prefixes;
  root.run(0, cut, true, [](const std::vector<Index>&) {},
           [&](std::vector<Index> p) { prefixes.push_back(std::move(p)); });

  std::vector<std::vector<Uninorm>> results(prefixes.size());
  std::vector<std::uint64_t> nodes(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t i = next++; i < prefixes.size(); i = next++) {
        TableSearch search(task, options.pruning);
        search.apply_prefix(prefixes[i]);
        search.run(prefixes[i].size(), -1, false,
                   [&](const std::vector<Index>& values) {
                     if (auto u = accept_leaf(values, task, options.pruning)) results[i].push_back(std::move(*u));
                   },
                   [](const std::vector<Index>&) {});
        nodes[i] = search.nodes();
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  local.nodes = root.nodes();
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    local.nodes += nodes[i];
    for (const auto& u : results[i]) {
      ++local.solutions;
      sink(u);
    }
  }
  if (stats) *stats = local;
}

std::vector<Uninorm> enumerate_uninorms(const EnumerationTask& task, const SearchOptions& options,
                                        EnumerationStats* stats) {
  std::vector<Uninorm> out;
  enumerate_uninorms(task, options, [&](const Uninorm& u) { out.push_back(u); }, stats);
  return out;
}

}  // namespace uninorm

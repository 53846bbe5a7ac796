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

#include "uninorm/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace uninorm {

namespace {

struct Row {
  Index e1;
  std::size_t i1;
  Index e2;
  std::size_t limit;  // pairs of this row inside the budget
};

struct RowResult {
  std::array<CaseTally, 3> per_case{};
  std::uint64_t distributive = 0;
  std::uint64_t necessity_failures = 0;
  std::vector<Divergence> divergences;
};

// Runs fn(i) for i in [0, count) on `workers` threads; the first exception
// is rethrown after all threads stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::vector<Uninorm>> enumerate_all(ChainScale scale, const CertifyOptions& options,
                                                std::uint64_t& nodes) {
  std::vector<std::vector<Uninorm>> by_neutral;
  SearchOptions search = options.search;
  search.max_n = std::max(search.max_n, options.max_n);
  for (Index e = 0; e <= scale.n(); ++e) {
    EnumerationStats stats;
    by_neutral.push_back(enumerate_uninorms(EnumerationTask{scale, e, {}}, search, &stats));
    nodes += stats.nodes;
  }
  return by_neutral;
}

void check_scale(ChainScale scale, const CertifyOptions& options) {
  if (scale.n() > options.max_n) {
    throw Error(Errc::resource, "pair-space certification on L_" + std::to_string(scale.n()) +
                                    " exceeds the configured limit max_n = " + std::to_string(options.max_n));
  }
}

}  // namespace

CertificationReport certify(ChainScale scale, const CertifyOptions& options) {
  check_scale(scale, options);
  const auto started = std::chrono::steady_clock::now();
  CertificationReport report;
  report.n = scale.n();

  const auto all = enumerate_all(scale, options, report.node_expansions);
  const int m = scale.size();
  for (const auto& list : all) report.uninorms_per_neutral.push_back(list.size());
  report.distributive_by_neutral.assign(m, std::vector<std::uint64_t>(m, 0));

  std::vector<Row> rows;
  std::uint64_t offset = 0;
  for (Index e1 = 0; e1 < m; ++e1) {
    for (Index e2 = 0; e2 < m; ++e2) {
      for (std::size_t i1 = 0; i1 < all[e1].size(); ++i1) {
        std::size_t limit = all[e2].size();
        if (options.max_pairs != 0) {
          const std::uint64_t left = offset < options.max_pairs ? options.max_pairs - offset : 0;
          if (left < limit) {
            limit = static_cast<std::size_t>(left);
            report.partial = true;
          }
        }
        offset += all[e2].size();
        if (limit > 0) rows.push_back(Row{e1, i1, e2, limit});
      }
    }
  }

  std::vector<RowResult> results(rows.size());
  parallel_for(rows.size(), options.search.workers, [&](std::size_t r) {
    const Row& row = rows[r];
    const Uninorm& u1 = all[row.e1][row.i1];
    RowResult& out = results[r];
    for (std::size_t i2 = 0; i2 < row.limit; ++i2) {
      const Uninorm& u2 = all[row.e2][i2];
      Classification cls = classify_and_check(u1, u2);
      CaseTally& tally = out.per_case[static_cast<std::size_t>(cls.theorem_case)];
      ++tally.pairs;
      if (cls.distributive()) {
        ++tally.distributive;
        ++out.distributive;
        if (!necessity_battery(u1, u2).verdict()) ++out.necessity_failures;
      }
      if (cls.theorem.verdict()) ++tally.theorem_true;
      if (cls.agreement()) {
        ++tally.agreements;
      } else {
        out.divergences.push_back(Divergence{row.e1, row.i1, row.e2, i2, cls.theorem.verdict(), cls.distributive(),
                                             u1.table(), u2.table(), std::move(cls.theorem),
                                             std::move(cls.distributivity)});
      }
    }
  });

  for (std::size_t r = 0; r < rows.size(); ++r) {
    RowResult& res = results[r];
    for (std::size_t c = 0; c < 3; ++c) {
      report.per_case[c].pairs += res.per_case[c].pairs;
      report.per_case[c].distributive += res.per_case[c].distributive;
      report.per_case[c].theorem_true += res.per_case[c].theorem_true;
      report.per_case[c].agreements += res.per_case[c].agreements;
      report.pairs_checked += res.per_case[c].pairs;
      report.agreements += res.per_case[c].agreements;
    }
    report.distributive_by_neutral[rows[r].e1][rows[r].e2] += res.distributive;
    report.necessity_failures += res.necessity_failures;
    for (auto& d : res.divergences) report.divergences.push_back(std::move(d));
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<ScanEntry> scan_pairs(ChainScale scale, Index e1, Index e2, const CertifyOptions& options) {
  check_scale(scale, options);
  if (!scale.contains(e1) || !scale.contains(e2)) throw Error(Errc::argument, "neutral elements outside the chain");
  SearchOptions search = options.search;
  search.max_n = std::max(search.max_n, options.max_n);
  const auto first = enumerate_uninorms(EnumerationTask{scale, e1, {}}, search);
  const auto second = enumerate_uninorms(EnumerationTask{scale, e2, {}}, search);

  std::vector<std::vector<ScanEntry>> per_row(first.size());
  parallel_for(first.size(), options.search.workers, [&](std::size_t i) {
    for (const auto& u2 : second) {
      if (!check_distributivity(first[i], u2).verdict()) continue;
      std::optional<Decomposition> d;
      if (e1 != e2) {
        try {
          d = decompose(first[i], u2);
        } catch (const Error& err) {
          if (err.code() != Errc::refused) throw;
        }
      }
      per_row[i].push_back(ScanEntry{first[i], u2, std::move(d), necessity_battery(first[i], u2)});
    }
  });

  std::vector<ScanEntry> out;
  for (auto& row : per_row) {
    for (auto& entry : row) out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace uninorm

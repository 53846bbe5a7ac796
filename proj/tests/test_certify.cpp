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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "uninorm/certify.hpp"
#include "uninorm/render.hpp"

using namespace uninorm;

namespace {

std::string document(const CertificationReport& r) {
  return render::structured("certification", render::certification_json(r, false)) +
         render::certification_text(r, false);
}

CertifyOptions with_workers(unsigned w) {
  CertifyOptions o;
  o.search.workers = w;
  return o;
}

}  // namespace

TEST(Certify, TalliesMatchOracle) {
  const int n = 3;
  std::vector<std::vector<oracle::Table>> all;
  for (Index e = 0; e <= n; ++e) {
    const auto s = oracle::all_uninorms(n, e);
    all.emplace_back(s.begin(), s.end());
  }
  std::array<std::uint64_t, 3> pairs{}, distributive{};
  for (Index e1 = 0; e1 <= n; ++e1) {
    for (Index e2 = 0; e2 <= n; ++e2) {
      const std::size_t c = e1 == e2 ? 0 : e2 < e1 ? 1 : 2;
      for (const auto& u1 : all[e1]) {
        for (const auto& u2 : all[e2]) {
          ++pairs[c];
          distributive[c] += oracle::distributes(u1, u2);
        }
      }
    }
  }
  const auto r = certify(ChainScale(n));
  for (std::size_t c = 0; c < 3; ++c) {
    EXPECT_EQ(r.per_case[c].pairs, pairs[c]);
    EXPECT_EQ(r.per_case[c].distributive, distributive[c]);
  }
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.necessity_failures, 0u);
}

TEST(Certify, DeterministicAcrossRunsAndWorkers) {
  for (int n = 2; n <= 4; ++n) {
    const std::string reference = document(certify(ChainScale(n)));
    EXPECT_EQ(document(certify(ChainScale(n))), reference);
    for (unsigned w : {2u, 4u, 7u}) EXPECT_EQ(document(certify(ChainScale(n), with_workers(w))), reference);
  }
}

TEST(Certify, PairBudgetMarksPartial) {
  CertifyOptions o;
  o.max_pairs = 100;
  const auto r = certify(ChainScale(3), o);
  EXPECT_TRUE(r.partial);
  EXPECT_FALSE(r.consistent());
  EXPECT_EQ(r.pairs_checked, 100u);
  o.max_pairs = 1'000'000;
  EXPECT_FALSE(certify(ChainScale(3), o).partial);
}

TEST(Certify, RefusesLargeScales) {
  try {
    certify(ChainScale(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource);
  }
}

TEST(Scan, EntriesAreExactlyTheDistributivePairs) {
  const int n = 3;
  for (Index e1 = 0; e1 <= n; ++e1) {
    for (Index e2 = 0; e2 <= n; ++e2) {
      const auto entries = scan_pairs(ChainScale(n), e1, e2, with_workers(2));
      std::size_t expected = 0;
      for (const auto& u1 : oracle::all_uninorms(n, e1))
        for (const auto& u2 : oracle::all_uninorms(n, e2)) expected += oracle::distributes(u1, u2);
      EXPECT_EQ(entries.size(), expected);
      for (const auto& entry : entries) {
        EXPECT_TRUE(entry.necessity.verdict());
        EXPECT_EQ(entry.decomposition.has_value(), e1 != e2);
      }
    }
  }
}

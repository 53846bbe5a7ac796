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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "uninorm/catalog.hpp"
#include "uninorm/certify.hpp"
#include "uninorm/render.hpp"
#include "uninorm/table_io.hpp"

using namespace uninorm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Catalogue = std::vector<std::vector<Uninorm>>;

Catalogue everything(int n) {
  Catalogue out;
  for (Index e = 0; e <= n; ++e) out.push_back(enumerate_uninorms(EnumerationTask{ChainScale(n), e}));
  return out;
}

std::string pair_text(const Uninorm& u1, const Uninorm& u2) {
  return "\nu1:\n" + write_table(u1.table(), u1.neutral()) + "u2:\n" + write_table(u2.table(), u2.neutral());
}

std::vector<Uninorm> catalog_outputs(int n) {
  std::vector<Uninorm> out{catalog::min_tnorm(n), catalog::max_tconorm(n), catalog::lukasiewicz_tnorm(n),
                           catalog::lukasiewicz_tconorm(n), catalog::drastic_tnorm(n), catalog::drastic_tconorm(n)};
  for (Index e = 0; e <= n; ++e) {
    out.push_back(catalog::idem_min(n, e));
    out.push_back(catalog::idem_max(n, e));
  }
  for (Index e = 1; e < n; ++e) {
    out.push_back(catalog::luk_upper(n, e));
    out.push_back(catalog::luk_lower(n, e));
    for (const auto& t : {catalog::min_tnorm(e), catalog::lukasiewicz_tnorm(e), catalog::drastic_tnorm(e)}) {
      for (const auto& s :
           {catalog::max_tconorm(n - e), catalog::lukasiewicz_tconorm(n - e), catalog::drastic_tconorm(n - e)}) {
        out.push_back(catalog::umin_of(t, e, s));
        out.push_back(catalog::umax_of(t, e, s));
      }
    }
  }
  return out;
}

Outcome axiom_suite() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& u : catalog_outputs(n)) {
      if (!validate_uninorm(u.table(), u.neutral()).verdict()) o.fail("catalog output rejected on L_" + std::to_string(n));
      for (Index x = 0; x <= n; ++x) {
        for (Index y = x; y <= n; ++y) {
          for (Index v = 0; v <= n; ++v) {
            if (v == u(x, y)) continue;
            const OpTable m = u.table().with_cell(x, y, v);
            const bool valid = oracle::is_uninorm(oracle::from(m), u.neutral());
            const auto r = validate_uninorm(m, u.neutral());
            if (r.verdict() != valid) {
              o.fail("mutant misjudged at (" + std::to_string(x) + "," + std::to_string(y) + ")");
              continue;
            }
            for (const auto& w : r.violations()) {
              const auto& p = w.witness;
              bool genuine = false;
              const Index e = u.neutral();
              if (w.law == Law::neutrality) genuine = m(e, p[0]) != p[0];
              if (w.law == Law::monotonicity) genuine = m(p[0], p[1]) > m(p[0] + 1, p[1]);
              if (w.law == Law::associativity) genuine = m(m(p[0], p[1]), p[2]) != m(p[0], m(p[1], p[2]));
              if (!genuine) o.fail("witness does not replay for " + std::string(to_string(w.law)));
            }
          }
        }
      }
    }
  }
  return o;
}

Outcome equal_neutral_iff() {
  Outcome o;
  for (int n : {2, 3}) {
    const auto all = everything(n);
    for (Index e = 0; e <= n; ++e) {
      for (const auto& u1 : all[e]) {
        for (const auto& u2 : all[e]) {
          const bool brute = check_distributivity(u1, u2).verdict();
          if (brute != oracle::distributes(oracle::from(u1), oracle::from(u2))) o.fail("brute force disagrees with oracle");
          if (equal_neutral_conditions(u1, u2).verdict() != brute) o.fail("THEOREM-DIVERGENCE" + pair_text(u1, u2));
        }
      }
    }
  }
  return o;
}

// Every distributive unequal-neutral pair on the scale; reused by criterion 4.
std::vector<std::pair<Uninorm, Uninorm>> g_distributive_pairs;

Outcome unequal_neutral_iff() {
  Outcome o;
  g_distributive_pairs.clear();
  for (int n : {3, 4}) {
    const auto all = everything(n);
    for (Index e1 = 0; e1 <= n; ++e1) {
      for (Index e2 = 0; e2 <= n; ++e2) {
        if (e1 == e2) continue;
        for (const auto& u1 : all[e1]) {
          for (const auto& u2 : all[e2]) {
            const bool brute = check_distributivity(u1, u2).verdict();
            const bool predicate =
                e2 < e1 ? greater_neutral_conditions(u1, u2).verdict() : less_neutral_conditions(u1, u2).verdict();
            if (brute != predicate) {
              o.fail("THEOREM-DIVERGENCE" + pair_text(u1, u2));
              std::cerr << "THEOREM-DIVERGENCE on L_" << n << pair_text(u1, u2);
            }
            if (brute) g_distributive_pairs.emplace_back(u1, u2);
          }
        }
      }
    }
  }
  if (g_distributive_pairs.empty()) o.fail("no distributive pairs found");
  return o;
}

bool inside(Index v, Index a, Index b) { return v == a || v == b; }

// The necessity statements, written out independently of the library's
// battery and run alongside it.
Outcome necessity() {
  Outcome o;
  for (const auto& [u1, u2] : g_distributive_pairs) {
    if (!necessity_battery(u1, u2).verdict()) o.fail("necessity battery failed" + pair_text(u1, u2));
    const int n = u1.n();
    const Index e1 = u1.neutral(), e2 = u2.neutral();
    bool ok = true;
    for (Index x = 0; x <= n; ++x) {
      for (Index y = 0; y <= n; ++y) {
        const bool off = (x < e2 && y > e2) || (x > e2 && y < e2);
        if (off && !inside(u2(x, y), x, y)) ok = false;
        if (e2 < e1) {
          if (x <= e2 && y <= e2 && u2(x, y) != std::min(x, y)) ok = false;
          if (x <= e2 && y >= e2 && y <= e1 && u1(x, y) != std::min(x, y)) ok = false;
          if (x < e2 && y >= e2 && y <= e1 && u2(x, y) != std::min(x, y)) ok = false;
          if (x < e2 && y >= e1 && (u1(x, y) != u2(x, y) || !inside(u1(x, y), x, y))) ok = false;
          if (x < e2 && y >= e1 && u2(x, y) == y && u2(y, y) != y) ok = false;
        } else {
          if (x >= e2 && y >= e2 && u2(x, y) != std::max(x, y)) ok = false;
          if (x >= e2 && y >= e1 && y <= e2 && u1(x, y) != std::max(x, y)) ok = false;
          if (x > e2 && y >= e1 && y <= e2 && u2(x, y) != std::max(x, y)) ok = false;
          if (x > e2 && y <= e1 && (u1(x, y) != u2(x, y) || !inside(u1(x, y), x, y))) ok = false;
          if (x > e2 && y <= e1 && u2(x, y) == y && u2(y, y) != y) ok = false;
        }
      }
    }
    if (!ok) o.fail("necessity statement violated" + pair_text(u1, u2));
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  const int n = 3;
  const auto all = everything(n);
  std::size_t composed = 0;
  for (Index e1 = 0; e1 <= n; ++e1) {
    for (Index e2 = 0; e2 <= n; ++e2) {
      if (e1 == e2) continue;
      for (const auto& u1 : all[e1]) {
        for (const auto& u2 : all[e2]) {
          if (!oracle::distributes(oracle::from(u1), oracle::from(u2))) {
            try {
              decompose(u1, u2);
              o.fail("non-distributive pair decomposed" + pair_text(u1, u2));
            } catch (const Error& e) {
              if (e.code() != Errc::refused) o.fail("wrong refusal code");
            }
            continue;
          }
          try {
            const auto d = parse_decomposition(write_decomposition(decompose(u1, u2)));
            const auto [a, b] = compose(d, ChainScale(n), e1, e2);
            if (!(a == u1 && b == u2)) o.fail("round trip changed the pair" + pair_text(u1, u2));
            ++composed;
          } catch (const Error& e) {
            o.fail(std::string("round trip raised: ") + e.what() + pair_text(u1, u2));
          }
        }
      }
    }
  }
  if (composed == 0) o.fail("no distributive pairs");
  return o;
}

Outcome duality() {
  Outcome o;
  const auto all = everything(3);
  for (const auto& a : all) {
    for (const auto& u1 : a) {
      for (const auto& b : all) {
        for (const auto& u2 : b) {
          const Uninorm d1 = dual(u1), d2 = dual(u2);
          if (oracle::from(d1) != oracle::dual(oracle::from(u1))) o.fail("dual disagrees with oracle");
          if (check_distributivity(u1, u2).verdict() != check_distributivity(d1, d2).verdict())
            o.fail("distributivity not transported" + pair_text(u1, u2));
          if (u1.neutral() < u2.neutral() &&
              less_neutral_conditions(u1, u2).verdict() != greater_neutral_conditions(d1, d2).verdict())
            o.fail("predicates not transported" + pair_text(u1, u2));
        }
      }
    }
  }
  return o;
}

Outcome enumeration() {
  Outcome o;
  for (int n : {2, 3}) {
    for (Index e = 0; e <= n; ++e) {
      std::set<oracle::Table> found;
      for (const auto& u : enumerate_uninorms(EnumerationTask{ChainScale(n), e})) found.insert(oracle::from(u));
      if (found != oracle::all_uninorms(n, e)) o.fail("set differs on L_" + std::to_string(n) + " e=" + std::to_string(e));
    }
  }
  if (enumerate_uninorms(EnumerationTask{ChainScale(2), 1}).size() != 2) o.fail("L_2, e=1 count is not 2");
  if (enumerate_uninorms(EnumerationTask{ChainScale(1), 0}).size() != 1) o.fail("L_1, e=0 count is not 1");
  return o;
}

Outcome universal_bounds() {
  Outcome o;
  const auto mx = catalog::max_tconorm(3), mn = catalog::min_tnorm(3);
  for (const auto& list : everything(3)) {
    for (const auto& u : list) {
      if (!check_distributivity(u, mx).verdict()) o.fail("does not distribute over max" + pair_text(u, mx));
      if (!check_distributivity(u, mn).verdict()) o.fail("does not distribute over min" + pair_text(u, mn));
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto doc = [](unsigned workers) {
    CertifyOptions opts;
    opts.search.workers = workers;
    opts.search.split_depth = 2;
    const auto r = certify(ChainScale(3), opts);
    return render::structured("certification", render::certification_json(r, false)) +
           render::certification_text(r, false);
  };
  const std::string reference = doc(1);
  if (doc(1) != reference) o.fail("two serial runs differ");
  for (unsigned w : {2u, 4u, 8u}) {
    if (doc(w) != reference) o.fail("report differs with " + std::to_string(w) + " workers");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {"axiom suite and mutation witnesses (L_1..L_6)", axiom_suite, 1.0},
      {"equal-neutral characterization iff (L_2, L_3)", equal_neutral_iff, 60.0},
      {"unequal-neutral characterization iff (L_3, L_4)", unequal_neutral_iff, 600.0},
      {"necessity statements on every distributive pair", necessity, 60.0},
      {"decompose/compose round trip and refusal (L_3)", round_trip, 60.0},
      {"duality transport (L_3)", duality, 60.0},
      {"enumeration equals naive oracle; L_2 e=1 -> 2, L_1 e=0 -> 1", enumeration, 60.0},
      {"every uninorm on L_3 distributes over max and min", universal_bounds, 60.0},
      {"certify(L_3) deterministic across runs and worker counts", determinism, 60.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto started = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (out.ok && secs > criteria[i].budget_seconds) out.fail("over the time budget");
    std::ostringstream line;
    line << (out.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].name << " ("
         << static_cast<long>(secs * 1000) << " ms)";
    if (!out.ok) line << " -- " << out.detail;
    std::cout << line.str() << std::endl;
    failures += out.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

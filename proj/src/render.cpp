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

#include "uninorm/render.hpp"

#include <iomanip>
#include <sstream>

#include "uninorm/table_io.hpp"

namespace uninorm::render {

namespace {

std::string tuple_text(const std::vector<Index>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string indent(const std::string& block, const std::string& prefix) {
  std::istringstream is(block);
  std::string out;
  for (std::string line; std::getline(is, line);) out += prefix + line + "\n";
  return out;
}

}  // namespace

ordered_json table_json(const OpTable& table, Index neutral) {
  ordered_json rows = ordered_json::array();
  for (Index x = 0; x <= table.n(); ++x) {
    ordered_json row = ordered_json::array();
    for (Index y = 0; y <= table.n(); ++y) row.push_back(table(x, y));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"scale", table.n()}, {"neutral", neutral}, {"rows", std::move(rows)}};
}

ordered_json report_json(const CheckReport& report) {
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations()) {
    ordered_json j{{"law", std::string(to_string(v.law))}, {"witness", v.witness}, {"values", v.values}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    violations.push_back(std::move(j));
  }
  return ordered_json{{"verdict", report.verdict()}, {"violations", std::move(violations)}};
}

ordered_json profile_json(const Uninorm& u) {
  ordered_json j{{"scale", u.n()}, {"neutral", u.neutral()}};
  j["kind"] = u.is_tnorm() ? "t-norm" : u.is_tconorm() ? "t-conorm" : "proper";
  j["idempotent"] = is_idempotent(u);
  j["locally-internal"] = is_locally_internal(u);
  if (u.is_proper()) j["conjunctive"] = is_conjunctive(u);
  if (u.neutral() > 0) j["underlying-tnorm"] = table_json(underlying_tnorm(u).table(), u.neutral());
  if (u.neutral() < u.n()) j["underlying-tconorm"] = table_json(underlying_tconorm(u).table(), 0);
  return j;
}

ordered_json classification_json(const Classification& c) {
  return ordered_json{{"case", std::string(to_string(c.theorem_case))},
                      {"distributive", c.distributive()},
                      {"theorem-verdict", c.theorem.verdict()},
                      {"agreement", c.agreement()},
                      {"finding", c.agreement() ? "none" : "THEOREM-DIVERGENCE"},
                      {"distributivity", report_json(c.distributivity)},
                      {"theorem", report_json(c.theorem)}};
}

ordered_json decomposition_json(const Decomposition& d) {
  ordered_json sel = ordered_json::array();
  for (const auto& [key, choice] : d.selection) {
    sel.push_back(ordered_json{{"x", key.first}, {"y", key.second}, {"choice", choice == Choice::first ? "first" : "second"}});
  }
  ordered_json j{{"case", std::string(to_string(d.theorem_case))},
                 {"scale", d.n},
                 {"e1", d.e1},
                 {"e2", d.e2},
                 {"inner", table_json(d.inner.table(), d.inner.neutral())},
                 {"boundary", table_json(d.boundary.table(), d.boundary.neutral())}};
  j["residual"] = d.residual ? table_json(d.residual->table(), d.residual->neutral()) : ordered_json(nullptr);
  j["selection"] = std::move(sel);
  return j;
}

ordered_json certification_json(const CertificationReport& r, bool include_timing) {
  ordered_json cases = ordered_json::object();
  for (std::size_t c = 0; c < 3; ++c) {
    const CaseTally& t = r.per_case[c];
    cases[std::string(to_string(static_cast<TheoremCase>(c)))] =
        ordered_json{{"pairs", t.pairs}, {"distributive", t.distributive}, {"theorem-true", t.theorem_true},
                     {"agreements", t.agreements}};
  }
  ordered_json divergences = ordered_json::array();
  for (const auto& d : r.divergences) {
    divergences.push_back(ordered_json{{"e1", d.e1},
                                       {"index1", d.index1},
                                       {"e2", d.e2},
                                       {"index2", d.index2},
                                       {"theorem-verdict", d.theorem_verdict},
                                       {"distributive", d.distributive},
                                       {"u1", table_json(d.u1, d.e1)},
                                       {"u2", table_json(d.u2, d.e2)},
                                       {"theorem", report_json(d.theorem)},
                                       {"distributivity", report_json(d.distributivity)}});
  }
  ordered_json j{{"scale", r.n},
                 {"partial", r.partial},
                 {"uninorms-per-neutral", r.uninorms_per_neutral},
                 {"pairs-checked", r.pairs_checked},
                 {"cases", std::move(cases)},
                 {"distributive-by-neutral", r.distributive_by_neutral},
                 {"agreements", r.agreements},
                 {"necessity-failures", r.necessity_failures},
                 {"divergences", std::move(divergences)},
                 {"node-expansions", r.node_expansions}};
  if (include_timing) j["wall-seconds"] = r.wall_seconds;
  return j;
}

ordered_json scan_json(int n, Index e1, Index e2, const std::vector<ScanEntry>& entries) {
  ordered_json pairs = ordered_json::array();
  for (const auto& entry : entries) {
    ordered_json p{{"u1", table_json(entry.u1.table(), e1)},
                   {"u2", table_json(entry.u2.table(), e2)},
                   {"necessity", report_json(entry.necessity)}};
    p["decomposition"] = entry.decomposition ? decomposition_json(*entry.decomposition) : ordered_json(nullptr);
    pairs.push_back(std::move(p));
  }
  return ordered_json{{"scale", n}, {"e1", e1}, {"e2", e2}, {"count", entries.size()}, {"pairs", std::move(pairs)}};
}

std::string structured(const std::string& kind, const ordered_json& payload) {
  ordered_json doc{{"format-version", kFormatVersion}, {"kind", kind}};
  for (const auto& [key, value] : payload.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string report_text(const std::string& title, const CheckReport& report) {
  std::ostringstream os;
  os << title << ": " << yes_no(report.verdict()) << '\n';
  for (const auto& v : report.violations()) {
    os << "  " << to_string(v.law) << " at " << tuple_text(v.witness);
    if (!v.values.empty()) os << " values " << tuple_text(v.values);
    if (!v.detail.empty()) os << " -- " << v.detail;
    os << '\n';
  }
  return os.str();
}

std::string profile_text(const Uninorm& u) {
  std::ostringstream os;
  os << "scale: " << u.n() << "\nneutral: " << u.neutral() << "\nkind: "
     << (u.is_tnorm() ? "t-norm" : u.is_tconorm() ? "t-conorm" : "proper uninorm") << '\n'
     << "idempotent: " << yes_no(is_idempotent(u)) << "\nlocally internal: " << yes_no(is_locally_internal(u)) << '\n';
  if (u.is_proper()) os << "conjunctive: " << yes_no(is_conjunctive(u)) << '\n';
  if (u.neutral() > 0) os << "underlying t-norm:\n" << indent(write_table(underlying_tnorm(u).table(), u.neutral()), "  ");
  if (u.neutral() < u.n()) os << "underlying t-conorm:\n" << indent(write_table(underlying_tconorm(u).table(), 0), "  ");
  return os.str();
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  os << "distributive: " << yes_no(c.distributive()) << "; case: " << to_string(c.theorem_case) << "; "
     << (c.agreement() ? "theorem agrees" : "THEOREM-DIVERGENCE") << '\n';
  for (const auto& v : c.distributivity.violations()) {
    os << "  witness " << tuple_text(v.witness) << ": U1(x,U2(y,z)) = " << v.values[0]
       << ", U2(U1(x,y),U1(x,z)) = " << v.values[1] << '\n';
  }
  os << indent(report_text("structure conditions", c.theorem), "");
  return os.str();
}

std::string certification_text(const CertificationReport& r, bool include_timing) {
  std::ostringstream os;
  os << "certification on L_" << r.n << (r.partial ? " (PARTIAL: pair budget exhausted)" : "") << '\n';
  os << "uninorms per neutral element:";
  for (std::size_t e = 0; e < r.uninorms_per_neutral.size(); ++e) os << ' ' << e << ':' << r.uninorms_per_neutral[e];
  os << "\npairs checked: " << r.pairs_checked << "\nagreements: " << r.agreements << '\n';
  for (std::size_t c = 0; c < 3; ++c) {
    const CaseTally& t = r.per_case[c];
    os << "  " << std::left << std::setw(16) << to_string(static_cast<TheoremCase>(c)) << " pairs " << t.pairs
       << ", distributive " << t.distributive << ", theorem true " << t.theorem_true << ", agreements "
       << t.agreements << '\n';
  }
  os << "necessity failures: " << r.necessity_failures << "\ndivergences: " << r.divergences.size() << '\n';
  for (const auto& d : r.divergences) {
    os << "THEOREM-DIVERGENCE e1=" << d.e1 << " #" << d.index1 << ", e2=" << d.e2 << " #" << d.index2
       << ": theorem " << yes_no(d.theorem_verdict) << ", brute force " << yes_no(d.distributive) << '\n';
    os << "  u1:\n" << indent(write_table(d.u1, d.e1), "    ") << "  u2:\n" << indent(write_table(d.u2, d.e2), "    ");
  }
  os << "node expansions: " << r.node_expansions << '\n';
  if (include_timing) os << "wall time: " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
  return os.str();
}

std::string scan_text(int n, Index e1, Index e2, const std::vector<ScanEntry>& entries) {
  std::ostringstream os;
  os << "distributive pairs on L_" << n << " with e1 = " << e1 << ", e2 = " << e2 << ": " << entries.size() << '\n';
  std::size_t failures = 0;
  for (const auto& entry : entries) failures += entry.necessity.verdict() ? 0 : 1;
  os << "necessity battery failures: " << failures << '\n';
  std::size_t k = 0;
  for (const auto& entry : entries) {
    os << "pair " << k++ << (entry.necessity.verdict() ? "" : " (NECESSITY FAILURE)") << '\n';
    os << "  u1:\n" << indent(write_table(entry.u1.table(), e1), "    ");
    os << "  u2:\n" << indent(write_table(entry.u2.table(), e2), "    ");
  }
  return os.str();
}

}  // namespace uninorm::render

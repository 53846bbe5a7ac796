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

#include "uninorm/chain.hpp"

#include <algorithm>

#include "uninorm/report.hpp"

namespace uninorm {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::argument: return "argument";
    case Errc::structural: return "structural";
    case Errc::parse: return "parse";
    case Errc::domain: return "domain";
    case Errc::wrong_case: return "wrong-case";
    case Errc::empty_restriction: return "empty-restriction";
    case Errc::invalid_uninorm: return "invalid-uninorm";
    case Errc::composition: return "composition-invalid";
    case Errc::refused: return "refused";
    case Errc::resource: return "resource";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

OpTable::OpTable(ChainScale scale, std::vector<Index> values) : scale_(scale), values_(std::move(values)) {
  const int m = scale_.size();
  if (values_.size() != static_cast<std::size_t>(m) * m) {
    throw Error(Errc::structural, "table for L_" + std::to_string(scale_.n()) + " needs " +
                                      std::to_string(m * m) + " entries, got " +
                                      std::to_string(values_.size()));
  }
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      const Index v = (*this)(x, y);
      if (!scale_.contains(v)) {
        throw Error(Errc::structural, "entry (" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                                          std::to_string(v) + " is outside 0.." + std::to_string(scale_.n()));
      }
      if (v != (*this)(y, x)) {
        throw Error(Errc::structural, "table is not symmetric at (" + std::to_string(x) + "," +
                                          std::to_string(y) + ")");
      }
    }
  }
}

Index OpTable::at(Index x, Index y) const {
  if (!scale_.contains(x) || !scale_.contains(y)) {
    throw Error(Errc::argument, "index (" + std::to_string(x) + "," + std::to_string(y) + ") outside L_" +
                                    std::to_string(scale_.n()));
  }
  return (*this)(x, y);
}

OpTable OpTable::with_cell(Index x, Index y, Index v) const {
  std::vector<Index> values = values_;
  const int m = size();
  if (!scale_.contains(x) || !scale_.contains(y)) throw Error(Errc::argument, "with_cell: index out of range");
  values[static_cast<std::size_t>(x) * m + y] = v;
  values[static_cast<std::size_t>(y) * m + x] = v;
  return OpTable(scale_, std::move(values));
}

std::string_view to_string(Law law) noexcept {
  switch (law) {
    case Law::structure: return "structure";
    case Law::neutrality: return "neutrality";
    case Law::monotonicity: return "monotonicity";
    case Law::associativity: return "associativity";
    case Law::distributivity: return "distributivity";
    case Law::idempotency: return "idempotency";
    case Law::off_diagonal: return "off-diagonal";
    case Law::hypothesis: return "hypothesis";
    case Law::clause_i: return "clause-i";
    case Law::side_condition: return "side-condition";
    case Law::clause_ii: return "clause-ii";
    case Law::clause_iii_closure: return "clause-iii-closure";
    case Law::clause_iii: return "clause-iii";
    case Law::necessity_strip_u1: return "necessity-strip-u1";
    case Law::necessity_strip_u2: return "necessity-strip-u2";
  }
  return "unknown";
}

bool CheckReport::has(Law law) const noexcept {
  return std::any_of(violations_.begin(), violations_.end(), [law](const Violation& v) { return v.law == law; });
}

void CheckReport::add(Violation v) {
  if (wants(v.law)) violations_.push_back(std::move(v));
}

void CheckReport::add(Law law, std::vector<Index> witness, std::vector<Index> values, std::string detail) {
  add(Violation{law, std::move(witness), std::move(values), std::move(detail)});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& v : other.violations()) add(v);
}

}  // namespace uninorm

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

#ifndef UNINORM_DECOMPOSITION_HPP
#define UNINORM_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "uninorm/distributivity.hpp"

namespace uninorm {

/// Which argument a locally internal operation returns at an off-diagonal
/// point (x, y): first = x, second = y.
enum class Choice { first, second };

/// Block components of a distributive pair with e1 != e2.
///
/// greater_neutral (e2 < e1), all sub-operations reindexed by i -> i - e2:
///   inner     u1 on [e2,n]^2, neutral e1 - e2
///   boundary  u2 on [e2,n]^2, a t-conorm
///   residual  u1 on [0,e2]^2, a t-norm on L_e2 (absent when e2 = 0)
///   selection keyed by (x, y) with x < e2 <= y
///
/// less_neutral (e1 < e2), no reindexing below e2:
///   inner     u1 on [0,e2]^2, neutral e1
///   boundary  u2 on [0,e2]^2, a t-norm
///   residual  u1 on [e2,n]^2 reindexed by i -> i - e2, a t-conorm (absent when e2 = n)
///   selection keyed by (x, y) with x > e2 >= y
///
/// u2 is fully determined by boundary and selection (min resp. max fills its
/// other square); u1 additionally needs residual.
struct Decomposition {
  TheoremCase theorem_case;
  int n;
  Index e1;
  Index e2;
  Uninorm inner;
  Uninorm boundary;
  std::optional<Uninorm> residual;
  std::map<std::pair<Index, Index>, Choice> selection;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws Errc::wrong_case for e1 = e2 and Errc::refused (message names the
/// failing clause or distributivity witness) when the pair is not
/// distributive.
Decomposition decompose(const Uninorm& u1, const Uninorm& u2);

/// Assembles both tables from the blocks and accepts them only if they are
/// uninorms satisfying the structural conditions. Throws
/// Errc::composition when the components are mis-sized, the selection
/// domain is wrong, the strip is not the required min/max, the idempotency
/// side condition fails, or a candidate breaks an axiom.
std::pair<Uninorm, Uninorm> compose(const Decomposition& d, ChainScale scale, Index e1, Index e2);

/// Text form:
///
///   case greater-neutral
///   scale <n>
///   e1 <e1>
///   e2 <e2>
///   inner
///   <table document>
///   boundary
///   <table document>
///   residual            (omitted when absent)
///   <table document>
///   selection
///   <x> <y> first|second
///   ...
std::string write_decomposition(const Decomposition& d);
/// Parses the text form; components are validated as uninorms on the way
/// in, consistency with (n, e1, e2) is left to compose.
Decomposition parse_decomposition(std::string_view text);

}  // namespace uninorm

#endif  // UNINORM_DECOMPOSITION_HPP

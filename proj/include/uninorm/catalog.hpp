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

#ifndef UNINORM_CATALOG_HPP
#define UNINORM_CATALOG_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "uninorm/uninorm.hpp"

namespace uninorm {

/// Chain-closed families. The product t-norm and representable uninorms are
/// absent because they do not map L_n into itself.
enum class Family {
  min,
  max,
  lukasiewicz_tnorm,
  lukasiewicz_tconorm,
  drastic_tnorm,
  drastic_tconorm,
  umin_idempotent,
  umax_idempotent,
  umin_of,
  umax_of,
};

std::string_view to_string(Family family) noexcept;

struct FamilySpec {
  Family family;
  ChainScale scale;
  Index e;
  /// Underlying t-norm on L_e, required by umin-of / umax-of.
  std::optional<Uninorm> tnorm;
  /// Underlying t-conorm on L_{n-e}, required by umin-of / umax-of.
  std::optional<Uninorm> tconorm;
};

/// Builds the family member. Throws Errc::argument for an inconsistent spec
/// and Errc::internal if a constructor ever produces an invalid table.
Uninorm make(const FamilySpec& spec);

namespace catalog {

Uninorm min_tnorm(int n);
Uninorm max_tconorm(int n);
Uninorm lukasiewicz_tnorm(int n);
Uninorm lukasiewicz_tconorm(int n);
Uninorm drastic_tnorm(int n);
Uninorm drastic_tconorm(int n);

/// max on [e,n]^2, min elsewhere.
Uninorm idem_min(int n, Index e);
/// min on [0,e]^2, max elsewhere.
Uninorm idem_max(int n, Index e);
/// T on [0,e]^2, S on [e,n]^2, min on the off-diagonal region.
Uninorm umin_of(const Uninorm& t, Index e, const Uninorm& s);
/// T on [0,e]^2, S on [e,n]^2, max on the off-diagonal region.
Uninorm umax_of(const Uninorm& t, Index e, const Uninorm& s);
/// umin_of(min, e, bounded sum): min(n, x + y - e) on [e,n]^2.
Uninorm luk_upper(int n, Index e);
/// umax_of(Lukasiewicz, e, max): max(0, x + y - e) on [0,e]^2.
Uninorm luk_lower(int n, Index e);

}  // namespace catalog

/// Parses the compact family notation, e.g. "umin(T=luk,S=max,e=2,n=4)" or
/// "idemmin(e=2,n=4)". Errors carry the 1-based column of the offending
/// character (line is always 1).
FamilySpec parse_family_spec(std::string_view text);

/// parse_family_spec followed by make.
Uninorm make_from_spec(std::string_view text);

}  // namespace uninorm

#endif  // UNINORM_CATALOG_HPP

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

#ifndef UNINORM_RENDER_HPP
#define UNINORM_RENDER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "uninorm/certify.hpp"

namespace uninorm::render {

/// Version stamped into every structured document as "format-version".
inline constexpr int kFormatVersion = 1;

using nlohmann::ordered_json;

ordered_json table_json(const OpTable& table, Index neutral);
ordered_json report_json(const CheckReport& report);
ordered_json profile_json(const Uninorm& u);
ordered_json classification_json(const Classification& c);
ordered_json decomposition_json(const Decomposition& d);
ordered_json certification_json(const CertificationReport& r, bool include_timing);
ordered_json scan_json(int n, Index e1, Index e2, const std::vector<ScanEntry>& entries);

/// Wraps a payload as {"format-version": 1, "kind": kind, ...payload}.
std::string structured(const std::string& kind, const ordered_json& payload);

std::string report_text(const std::string& title, const CheckReport& report);
std::string profile_text(const Uninorm& u);
std::string classification_text(const Classification& c);
std::string certification_text(const CertificationReport& r, bool include_timing);
std::string scan_text(int n, Index e1, Index e2, const std::vector<ScanEntry>& entries);

}  // namespace uninorm::render

#endif  // UNINORM_RENDER_HPP

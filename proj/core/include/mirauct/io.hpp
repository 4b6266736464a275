// Copyright 2026 The Authors.
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

#pragma once

#include <nlohmann/json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mirauct/mechanism.hpp"
#include "mirauct/multiplier_vector.hpp"
#include "mirauct/rational.hpp"
#include "mirauct/valuation.hpp"

namespace mirauct {

// Rationals cross every file boundary as "num/den" strings so exactness
// survives serialization.

/// An auction instance: item count, oracle, and an optional expected
/// agent count (validated against the bid profile when present).
struct Instance {
  int m = 0;
  std::optional<int> n;
  std::shared_ptr<const PublicValuation> valuation;
};

/// Schema: {"m": int, "valuation": {"type": "coverage"|"explicit"|"additive", ...}}
/// with an optional "n". Coverage payloads list "viewers_of_slot" as
/// arrays of viewer indices; explicit payloads list "values" indexed by
/// bitmask; additive payloads list per-item "weights".
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& instance);

std::shared_ptr<const PublicValuation> valuation_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

/// Canned demo instance available to the CLI as `--preset appendix-a`:
/// two advertisers, three slots, ten viewers, chosen so that the direct
/// greedy allocation rule is visibly non-monotone in the second agent's
/// bid.
Instance preset_instance(const std::string& name);

std::vector<Rational> rationals_from_json(const nlohmann::json& j);
nlohmann::json rationals_to_json(std::span<const Rational> values);

MultiplierVector multiplier_vector_from_json(const nlohmann::json& j);
nlohmann::json multiplier_vector_to_json(const MultiplierVector& v);

/// Parses "1,11/10,0" style comma-separated bid lists.
std::vector<Rational> parse_bid_list(const std::string& text);

/// {"assignment": {"<agent>": [items...]}, "payments": [...],
///  "welfare": "num/den", "chosen_entry": int}
nlohmann::json outcome_to_json(const Outcome& outcome);

/// [{"source": [...], "allocation": [[items]...], "part_values": [...]}, ...]
nlohmann::json range_to_json(const Range& range);

RangeMode range_mode_from_string(const std::string& name);
std::string to_string(RangeMode mode);

/// Minimal CSV writer; every row must match the header's arity.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace mirauct

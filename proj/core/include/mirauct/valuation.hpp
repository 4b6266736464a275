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
#include <string>
#include <vector>

#include "mirauct/item_set.hpp"
#include "mirauct/rational.hpp"

namespace mirauct {

/// Public set-function oracle f : 2^[m] -> Q shared by all agents.
///
/// Implementations are immutable after construction and keep no per-query
/// state, so a single oracle may be queried from many threads at once.
/// value() must be deterministic: equal sets yield equal rationals.
class PublicValuation {
 public:
  virtual ~PublicValuation() = default;

  /// Exact value of the set. Throws InvalidInputError if any member of
  /// `items` is outside [0, num_items()).
  virtual Rational value(const ItemSet& items) const = 0;

  virtual int num_items() const = 0;

  /// "coverage", "explicit" or "additive".
  virtual std::string kind() const = 0;

  /// Payload used in instance files and range-cache keys.
  virtual nlohmann::json to_json() const = 0;
};

/// f(S) = number of distinct viewers reached by the slots in S.
/// Monotone and submodular by construction; f(empty) = 0.
class CoverageValuation : public PublicValuation {
 public:
  /// viewers_of_slot[j] lists the viewer indices of slot j; every index
  /// must lie in [0, num_viewers).
  CoverageValuation(int num_viewers, std::vector<std::vector<int>> viewers_of_slot);

  Rational value(const ItemSet& items) const override;
  int num_items() const override { return static_cast<int>(viewers_of_slot_.size()); }
  std::string kind() const override { return "coverage"; }
  nlohmann::json to_json() const override;

  int num_viewers() const { return num_viewers_; }
  const std::vector<std::vector<int>>& viewers_of_slot() const { return viewers_of_slot_; }

 private:
  int num_viewers_ = 0;
  std::vector<std::vector<int>> viewers_of_slot_;  // each sorted, deduplicated
};

/// Full value table over all 2^m sets, keyed by the characteristic
/// bitmask. No structural assumptions; f(empty) may be nonzero.
class ExplicitValuation : public PublicValuation {
 public:
  /// `table[mask]` is the value of the set with that bitmask; the table
  /// must have exactly 2^m entries. m is capped at 20.
  ExplicitValuation(int num_items, std::vector<Rational> table);

  Rational value(const ItemSet& items) const override;
  int num_items() const override { return num_items_; }
  std::string kind() const override { return "explicit"; }
  nlohmann::json to_json() const override;

  const std::vector<Rational>& table() const { return table_; }

 private:
  int num_items_ = 0;
  std::vector<Rational> table_;
};

/// f(S) = sum of per-item weights. Baseline oracle: greedy is exactly
/// optimal here, which makes it a convenient test reference.
class AdditiveValuation : public PublicValuation {
 public:
  explicit AdditiveValuation(std::vector<Rational> weights);

  Rational value(const ItemSet& items) const override;
  int num_items() const override { return static_cast<int>(weights_.size()); }
  std::string kind() const override { return "additive"; }
  nlohmann::json to_json() const override;

  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Rational> weights_;
};

/// Brute-force submodularity check: f(S+j) + f(S+k) >= f(S+j+k) + f(S)
/// for all S and j != k outside S. Throws ResourceLimitError when
/// num_items() > 12.
bool is_submodular(const PublicValuation& f);

}  // namespace mirauct

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

#include "mirauct/valuation.hpp"

#include <algorithm>
#include <string>

#include "mirauct/error.hpp"

namespace mirauct {

namespace {

void check_universe(const ItemSet& items, int num_items) {
  if (!items.empty() && items.members().back() >= num_items) {
    throw InvalidInputError("item index " + std::to_string(items.members().back()) +
                            " outside universe of size " + std::to_string(num_items));
  }
}

}  // namespace

CoverageValuation::CoverageValuation(int num_viewers,
                                     std::vector<std::vector<int>> viewers_of_slot)
    : num_viewers_(num_viewers), viewers_of_slot_(std::move(viewers_of_slot)) {
  if (num_viewers_ < 0) {
    throw InvalidInputError("negative viewer count");
  }
  for (auto& viewers : viewers_of_slot_) {
    std::sort(viewers.begin(), viewers.end());
    viewers.erase(std::unique(viewers.begin(), viewers.end()), viewers.end());
    for (int v : viewers) {
      if (v < 0 || v >= num_viewers_) {
        throw InvalidInputError("viewer index " + std::to_string(v) +
                                " outside pool of size " + std::to_string(num_viewers_));
      }
    }
  }
}

Rational CoverageValuation::value(const ItemSet& items) const {
  check_universe(items, num_items());
  std::vector<std::uint64_t> seen((num_viewers_ + 63) / 64, 0);
  long long covered = 0;
  for (int slot : items.members()) {
    for (int v : viewers_of_slot_[slot]) {
      std::uint64_t& word = seen[v >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (v & 63);
      if (!(word & bit)) {
        word |= bit;
        ++covered;
      }
    }
  }
  return Rational(covered);
}

nlohmann::json CoverageValuation::to_json() const {
  return {{"type", "coverage"},
          {"num_viewers", num_viewers_},
          {"viewers_of_slot", viewers_of_slot_}};
}

ExplicitValuation::ExplicitValuation(int num_items, std::vector<Rational> table)
    : num_items_(num_items), table_(std::move(table)) {
  if (num_items_ < 0) {
    throw InvalidInputError("negative item count");
  }
  if (num_items_ > 20) {
    throw ResourceLimitError("explicit table for m = " + std::to_string(num_items_) +
                             " items would need 2^m entries; capped at m = 20");
  }
  const std::size_t expected = std::size_t{1} << num_items_;
  if (table_.size() != expected) {
    throw InvalidInputError("explicit table has " + std::to_string(table_.size()) +
                            " entries, expected 2^m = " + std::to_string(expected));
  }
}

Rational ExplicitValuation::value(const ItemSet& items) const {
  return table_[items.mask(num_items_)];
}

nlohmann::json ExplicitValuation::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : table_) values.push_back(to_fraction(v));
  return {{"type", "explicit"}, {"m", num_items_}, {"values", std::move(values)}};
}

AdditiveValuation::AdditiveValuation(std::vector<Rational> weights)
    : weights_(std::move(weights)) {}

Rational AdditiveValuation::value(const ItemSet& items) const {
  check_universe(items, num_items());
  Rational total = 0;
  for (int j : items.members()) total += weights_[j];
  return total;
}

nlohmann::json AdditiveValuation::to_json() const {
  nlohmann::json weights = nlohmann::json::array();
  for (const Rational& w : weights_) weights.push_back(to_fraction(w));
  return {{"type", "additive"}, {"weights", std::move(weights)}};
}

bool is_submodular(const PublicValuation& f) {
  const int m = f.num_items();
  if (m > 12) {
    throw ResourceLimitError("submodularity check is exhaustive; refusing m = " +
                             std::to_string(m) + " > 12");
  }
  // f(S+j) + f(S+k) >= f(S+{j,k}) + f(S) over all S and j < k outside S.
  std::vector<Rational> table(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.value(ItemSet::from_mask(mask, m));
  }
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    for (int j = 0; j < m; ++j) {
      if (mask & (std::uint64_t{1} << j)) continue;
      for (int k = j + 1; k < m; ++k) {
        if (mask & (std::uint64_t{1} << k)) continue;
        const std::uint64_t with_j = mask | (std::uint64_t{1} << j);
        const std::uint64_t with_k = mask | (std::uint64_t{1} << k);
        if (table[with_j] + table[with_k] < table[with_j | with_k] + table[mask]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace mirauct

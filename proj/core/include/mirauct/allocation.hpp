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

#include <span>
#include <vector>

#include "mirauct/item_set.hpp"
#include "mirauct/rational.hpp"
#include "mirauct/valuation.hpp"

namespace mirauct {

/// Ordered partition of the m items into n parts (empty parts allowed).
class Allocation {
 public:
  /// Validates that the parts are pairwise disjoint and cover [0, m)
  /// exactly; throws InvalidInputError otherwise.
  Allocation(std::vector<ItemSet> parts, int num_items);

  const std::vector<ItemSet>& parts() const { return parts_; }
  const ItemSet& part(int i) const { return parts_[i]; }
  int num_agents() const { return static_cast<int>(parts_.size()); }
  int num_items() const { return num_items_; }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<ItemSet> parts_;
  int num_items_ = 0;
};

/// Exact social welfare sum_i multipliers[i] * f(parts[i]). Multipliers
/// may be any rationals (raw bids included); throws InvalidInputError on
/// length mismatch. Empty parts are valued through the oracle, not
/// assumed to be worth zero.
Rational welfare(const PublicValuation& f, std::span<const Rational> multipliers,
                 const Allocation& allocation);

/// f-values of the parts, in part order.
std::vector<Rational> part_values(const PublicValuation& f, const Allocation& allocation);

/// Permutation of the parts with f-values non-increasing. Stable: parts
/// of equal value keep their relative order, so already-sorted input is
/// returned unchanged. For non-increasing multipliers this never
/// decreases welfare.
Allocation sort_allocation(const PublicValuation& f, const Allocation& allocation);

struct SortedAllocation {
  Allocation allocation;
  std::vector<Rational> values;  // non-increasing, values[i] == f(allocation.part(i))
};

/// sort_allocation plus the sorted part values (saves re-querying f).
SortedAllocation sort_allocation_with_values(const PublicValuation& f,
                                             const Allocation& allocation);

}  // namespace mirauct

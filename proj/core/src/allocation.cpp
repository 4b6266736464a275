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

#include "mirauct/allocation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mirauct/error.hpp"

namespace mirauct {

Allocation::Allocation(std::vector<ItemSet> parts, int num_items)
    : parts_(std::move(parts)), num_items_(num_items) {
  if (parts_.empty()) {
    throw InvalidInputError("allocation must have at least one part");
  }
  if (num_items_ < 0) {
    throw InvalidInputError("negative item count");
  }
  std::vector<char> seen(num_items_, 0);
  long long covered = 0;
  for (const ItemSet& part : parts_) {
    for (int j : part.members()) {
      if (j >= num_items_) {
        throw InvalidInputError("allocation contains item " + std::to_string(j) +
                                " outside universe of size " + std::to_string(num_items_));
      }
      if (seen[j]) {
        throw InvalidInputError("allocation assigns item " + std::to_string(j) + " twice");
      }
      seen[j] = 1;
      ++covered;
    }
  }
  if (covered != num_items_) {
    throw InvalidInputError("allocation leaves items unassigned");
  }
}

Rational welfare(const PublicValuation& f, std::span<const Rational> multipliers,
                 const Allocation& allocation) {
  if (static_cast<int>(multipliers.size()) != allocation.num_agents()) {
    throw InvalidInputError("multiplier profile and allocation disagree on agent count");
  }
  Rational total = 0;
  for (int i = 0; i < allocation.num_agents(); ++i) {
    total += multipliers[i] * f.value(allocation.part(i));
  }
  return total;
}

std::vector<Rational> part_values(const PublicValuation& f, const Allocation& allocation) {
  std::vector<Rational> values;
  values.reserve(allocation.num_agents());
  for (const ItemSet& part : allocation.parts()) {
    values.push_back(f.value(part));
  }
  return values;
}

SortedAllocation sort_allocation_with_values(const PublicValuation& f,
                                             const Allocation& allocation) {
  const std::vector<Rational> values = part_values(f, allocation);
  std::vector<int> order(allocation.num_agents());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int lhs, int rhs) { return values[lhs] > values[rhs]; });
  std::vector<ItemSet> parts;
  std::vector<Rational> sorted_values;
  parts.reserve(order.size());
  sorted_values.reserve(order.size());
  for (int i : order) {
    parts.push_back(allocation.part(i));
    sorted_values.push_back(values[i]);
  }
  return {Allocation(std::move(parts), allocation.num_items()), std::move(sorted_values)};
}

Allocation sort_allocation(const PublicValuation& f, const Allocation& allocation) {
  return sort_allocation_with_values(f, allocation).allocation;
}

}  // namespace mirauct

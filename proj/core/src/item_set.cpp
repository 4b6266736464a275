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

#include "mirauct/item_set.hpp"

#include <algorithm>
#include <string>

#include "mirauct/error.hpp"

namespace mirauct {

ItemSet::ItemSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0) {
      throw InvalidInputError("negative item index " + std::to_string(members_[i]));
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw InvalidInputError("duplicate item index " + std::to_string(members_[i]));
    }
  }
}

ItemSet ItemSet::from_mask(std::uint64_t mask, int num_items) {
  if (num_items < 0 || num_items > 63) {
    throw InvalidInputError("item count out of range for bitmask encoding");
  }
  if (num_items < 64 && (mask >> num_items) != 0) {
    throw InvalidInputError("bitmask has bits beyond the item universe");
  }
  std::vector<int> members;
  for (int j = 0; j < num_items; ++j) {
    if (mask & (std::uint64_t{1} << j)) members.push_back(j);
  }
  ItemSet result;
  result.members_ = std::move(members);
  return result;
}

std::uint64_t ItemSet::mask(int num_items) const {
  if (num_items < 0 || num_items > 63) {
    throw InvalidInputError("item count out of range for bitmask encoding");
  }
  std::uint64_t mask = 0;
  for (int j : members_) {
    if (j >= num_items) {
      throw InvalidInputError("item index " + std::to_string(j) + " outside universe of size " +
                              std::to_string(num_items));
    }
    mask |= std::uint64_t{1} << j;
  }
  return mask;
}

bool ItemSet::contains(int item) const {
  return std::binary_search(members_.begin(), members_.end(), item);
}

ItemSet ItemSet::with(int item) const {
  if (contains(item)) return *this;
  ItemSet result = *this;
  result.members_.insert(std::upper_bound(result.members_.begin(), result.members_.end(), item),
                         item);
  return result;
}

}  // namespace mirauct

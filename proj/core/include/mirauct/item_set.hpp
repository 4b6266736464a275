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

#include <cstdint>
#include <vector>

namespace mirauct {

/// A subset of the item universe [0, m). Members are kept sorted and
/// duplicate-free; membership of indices in [0, m) is checked by the
/// valuation that consumes the set.
class ItemSet {
 public:
  ItemSet() = default;

  /// Canonicalizes (sorts) the given members. Throws InvalidInputError on
  /// negative indices or duplicates.
  explicit ItemSet(std::vector<int> members);

  /// Builds the set whose characteristic bitmask is `mask`, little-endian
  /// by item index. Requires 0 <= num_items <= 63.
  static ItemSet from_mask(std::uint64_t mask, int num_items);

  /// The m-bit characteristic bitmask, little-endian by item index.
  /// Requires num_items <= 63 and all members < num_items.
  std::uint64_t mask(int num_items) const;

  bool contains(int item) const;

  /// Copy of this set with `item` added (no-op if already present).
  ItemSet with(int item) const;

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  friend bool operator<(const ItemSet& a, const ItemSet& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
};

}  // namespace mirauct

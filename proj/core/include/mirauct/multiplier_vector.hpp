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

#include <optional>
#include <span>
#include <vector>

#include "mirauct/rational.hpp"

namespace mirauct {

/// Canonical profile of private multipliers: entries are non-negative,
/// non-increasing and sum to exactly 1. Any profile of non-negative bids
/// with a positive sum can be brought into this form by sorting and
/// scaling (see normalize()), and both operations leave the underlying
/// welfare-maximization problem unchanged.
class MultiplierVector {
 public:
  /// Validates the invariants and throws InvalidInputError on violation.
  explicit MultiplierVector(std::vector<Rational> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const MultiplierVector&, const MultiplierVector&) = default;
  friend bool operator<(const MultiplierVector& a, const MultiplierVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

/// Permutation mapping sorted position -> original agent index.
class AgentOrdering {
 public:
  /// Identity ordering on n agents.
  explicit AgentOrdering(int n);

  /// Throws InvalidInputError unless `sorted_to_original` is a bijection
  /// on [0, n).
  explicit AgentOrdering(std::vector<int> sorted_to_original);

  /// Original agent index occupying sorted position k.
  int original(int k) const { return sorted_to_original_[k]; }

  /// Sorted position of original agent i (inverse permutation).
  int position(int i) const { return original_to_sorted_[i]; }

  int size() const { return static_cast<int>(sorted_to_original_.size()); }
  const std::vector<int>& sorted_to_original() const { return sorted_to_original_; }

 private:
  std::vector<int> sorted_to_original_;
  std::vector<int> original_to_sorted_;
};

struct Normalized {
  MultiplierVector vector;
  AgentOrdering ordering;
  Rational scale;  // sum of the raw bids; bid[ordering.original(k)] == vector[k] * scale
};

/// Sorts non-negative raw bids into canonical form. Ties keep the lower
/// original agent index first, so the result is deterministic. Returns
/// nullopt when all bids are zero (the degenerate profile: callers emit
/// the empty outcome with zero payments). Throws InvalidInputError on
/// negative bids or an empty profile.
std::optional<Normalized> normalize(std::span<const Rational> bids);

/// True iff some index i splits the coordinates into a prefix where
/// u >= w and a suffix where u <= w. On sorted allocations this ordering
/// implies a welfare ordering. Throws InvalidInputError on length
/// mismatch.
bool dominates(const MultiplierVector& u, const MultiplierVector& w);

/// First j entries equal to 1/j, the rest zero. Requires 1 <= j <= n.
MultiplierVector prefix_vector(int j, int n);

/// First j entries of v rescaled by their prefix sum r_j, the rest zero.
/// Requires 1 <= j <= v.size(). Returns nullopt if r_j = 0 (unreachable
/// for a valid vector, kept as a guard).
std::optional<MultiplierVector> normalized_prefix(const MultiplierVector& v, int j);

/// Histogram view of a multiplier vector: maximal runs of equal entries,
/// recorded as (height, width) steps with strictly decreasing heights.
class Staircase {
 public:
  struct Step {
    Rational height;
    int width = 0;
    friend bool operator==(const Step&, const Step&) = default;
  };

  /// Validates: positive widths summing to n, heights non-negative and
  /// strictly decreasing, total mass sum(height*width) exactly 1.
  Staircase(std::vector<Step> steps, int n);

  const std::vector<Step>& steps() const { return steps_; }
  int num_entries() const { return num_entries_; }

 private:
  std::vector<Step> steps_;
  int num_entries_ = 0;
};

/// Lossless round-trip pair.
Staircase staircase_of(const MultiplierVector& v);
MultiplierVector vector_of(const Staircase& s);

}  // namespace mirauct

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

#include "mirauct/multiplier_vector.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mirauct/error.hpp"

namespace mirauct {

MultiplierVector::MultiplierVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw InvalidInputError("multiplier vector must be non-empty");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) {
      throw InvalidInputError("multiplier vector entry " + std::to_string(i) + " is negative");
    }
    if (i > 0 && entries_[i] > entries_[i - 1]) {
      throw InvalidInputError("multiplier vector entries must be non-increasing");
    }
    sum += entries_[i];
  }
  if (sum != 1) {
    throw InvalidInputError("multiplier vector entries must sum to 1, got " + to_fraction(sum));
  }
}

AgentOrdering::AgentOrdering(int n) {
  if (n < 1) throw InvalidInputError("agent count must be positive");
  sorted_to_original_.resize(n);
  std::iota(sorted_to_original_.begin(), sorted_to_original_.end(), 0);
  original_to_sorted_ = sorted_to_original_;
}

AgentOrdering::AgentOrdering(std::vector<int> sorted_to_original)
    : sorted_to_original_(std::move(sorted_to_original)) {
  const int n = static_cast<int>(sorted_to_original_.size());
  if (n < 1) throw InvalidInputError("agent ordering must be non-empty");
  original_to_sorted_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    const int i = sorted_to_original_[k];
    if (i < 0 || i >= n || original_to_sorted_[i] != -1) {
      throw InvalidInputError("agent ordering is not a bijection on [0, n)");
    }
    original_to_sorted_[i] = k;
  }
}

std::optional<Normalized> normalize(std::span<const Rational> bids) {
  if (bids.empty()) {
    throw InvalidInputError("bid profile must be non-empty");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (bids[i] < 0) {
      throw InvalidInputError("bid " + std::to_string(i) + " is negative");
    }
    total += bids[i];
  }
  if (total == 0) {
    return std::nullopt;
  }
  std::vector<int> order(bids.size());
  std::iota(order.begin(), order.end(), 0);
  // Ties keep the lower original index first: stable sort on descending bid.
  std::stable_sort(order.begin(), order.end(),
                   [&](int lhs, int rhs) { return bids[lhs] > bids[rhs]; });
  std::vector<Rational> entries(bids.size());
  for (std::size_t k = 0; k < bids.size(); ++k) {
    entries[k] = bids[order[k]] / total;
  }
  return Normalized{MultiplierVector(std::move(entries)), AgentOrdering(std::move(order)),
                    total};
}

bool dominates(const MultiplierVector& u, const MultiplierVector& w) {
  if (u.size() != w.size()) {
    throw InvalidInputError("dominance requires equal-length vectors");
  }
  const int n = u.size();
  int i = 0;
  while (i < n && u[i] >= w[i]) ++i;
  // A valid split must sit at or before the first strict violation of the
  // prefix condition; from there on u must stay at or below w.
  for (int k = i; k < n; ++k) {
    if (u[k] > w[k]) return false;
  }
  return true;
}

MultiplierVector prefix_vector(int j, int n) {
  if (j < 1 || j > n) {
    throw InvalidInputError("prefix index " + std::to_string(j) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  std::vector<Rational> entries(n, Rational(0));
  for (int i = 0; i < j; ++i) entries[i] = Rational(1, j);
  return MultiplierVector(std::move(entries));
}

std::optional<MultiplierVector> normalized_prefix(const MultiplierVector& v, int j) {
  if (j < 1 || j > v.size()) {
    throw InvalidInputError("prefix index " + std::to_string(j) + " outside [1, " +
                            std::to_string(v.size()) + "]");
  }
  Rational prefix_sum = 0;
  for (int i = 0; i < j; ++i) prefix_sum += v[i];
  if (prefix_sum == 0) {
    return std::nullopt;
  }
  std::vector<Rational> entries(v.size(), Rational(0));
  for (int i = 0; i < j; ++i) entries[i] = v[i] / prefix_sum;
  return MultiplierVector(std::move(entries));
}

Staircase::Staircase(std::vector<Step> steps, int n) : steps_(std::move(steps)), num_entries_(n) {
  if (steps_.empty()) {
    throw InvalidInputError("staircase must have at least one step");
  }
  Rational mass = 0;
  long long width = 0;
  for (std::size_t t = 0; t < steps_.size(); ++t) {
    if (steps_[t].width < 1) {
      throw InvalidInputError("staircase step widths must be positive");
    }
    if (steps_[t].height < 0) {
      throw InvalidInputError("staircase heights must be non-negative");
    }
    if (t > 0 && steps_[t].height >= steps_[t - 1].height) {
      throw InvalidInputError("staircase heights must be strictly decreasing");
    }
    mass += steps_[t].height * steps_[t].width;
    width += steps_[t].width;
  }
  if (width != n) {
    throw InvalidInputError("staircase widths sum to " + std::to_string(width) +
                            ", expected " + std::to_string(n));
  }
  if (mass != 1) {
    throw InvalidInputError("staircase mass must be exactly 1, got " + to_fraction(mass));
  }
}

Staircase staircase_of(const MultiplierVector& v) {
  std::vector<Staircase::Step> steps;
  for (int i = 0; i < v.size(); ++i) {
    if (!steps.empty() && steps.back().height == v[i]) {
      ++steps.back().width;
    } else {
      steps.push_back({v[i], 1});
    }
  }
  return Staircase(std::move(steps), v.size());
}

MultiplierVector vector_of(const Staircase& s) {
  std::vector<Rational> entries;
  entries.reserve(s.num_entries());
  for (const auto& step : s.steps()) {
    entries.insert(entries.end(), step.width, step.height);
  }
  return MultiplierVector(std::move(entries));
}

}  // namespace mirauct

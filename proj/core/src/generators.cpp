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

#include "mirauct/generators.hpp"

#include <algorithm>
#include <functional>

#include "mirauct/error.hpp"

namespace mirauct {

MultiplierVector random_multiplier_vector(Rng& rng, int n, int max_numerator) {
  if (n < 1 || max_numerator < 1) {
    throw InvalidInputError("random multiplier vector needs n >= 1 and a positive numerator range");
  }
  std::uniform_int_distribution<int> numerator(1, max_numerator);
  std::vector<long long> draws(n);
  long long total = 0;
  for (auto& d : draws) {
    d = numerator(rng);
    total += d;
  }
  std::sort(draws.begin(), draws.end(), std::greater<>());
  std::vector<Rational> entries(n);
  for (int i = 0; i < n; ++i) entries[i] = Rational(draws[i], total);
  return MultiplierVector(std::move(entries));
}

std::vector<Rational> random_bids(Rng& rng, int n, int max_sixteenths) {
  std::uniform_int_distribution<int> sixteenths(1, max_sixteenths);
  std::vector<Rational> bids(n);
  for (auto& bid : bids) bid = Rational(sixteenths(rng), 16);
  return bids;
}

std::shared_ptr<const CoverageValuation> random_coverage(Rng& rng, int m, int num_viewers) {
  if (m < 0 || num_viewers < 0) {
    throw InvalidInputError("coverage generator needs non-negative sizes");
  }
  std::bernoulli_distribution watches(0.5);
  std::vector<std::vector<int>> viewers_of_slot(m);
  for (auto& viewers : viewers_of_slot) {
    for (int v = 0; v < num_viewers; ++v) {
      if (watches(rng)) viewers.push_back(v);
    }
  }
  return std::make_shared<const CoverageValuation>(num_viewers, std::move(viewers_of_slot));
}

std::shared_ptr<const AdditiveValuation> random_additive(Rng& rng, int m, int max_sixteenths) {
  std::uniform_int_distribution<int> sixteenths(1, max_sixteenths);
  std::vector<Rational> weights(m);
  for (auto& w : weights) w = Rational(sixteenths(rng), 16);
  return std::make_shared<const AdditiveValuation>(std::move(weights));
}

Allocation random_allocation(Rng& rng, int m, int n) {
  std::uniform_int_distribution<int> agent(0, n - 1);
  std::vector<std::vector<int>> members(n);
  for (int j = 0; j < m; ++j) {
    members[agent(rng)].push_back(j);
  }
  std::vector<ItemSet> parts;
  parts.reserve(n);
  for (auto& list : members) parts.emplace_back(std::move(list));
  return Allocation(std::move(parts), m);
}

SortedAllocation random_sorted_allocation(Rng& rng, const PublicValuation& f, int n) {
  return sort_allocation_with_values(f, random_allocation(rng, f.num_items(), n));
}

}  // namespace mirauct

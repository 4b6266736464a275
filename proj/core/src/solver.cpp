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

#include "mirauct/solver.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mirauct/error.hpp"

namespace mirauct {

namespace {

struct SearchState {
  const PublicValuation* f = nullptr;
  std::span<const Rational> multipliers;
  int num_items = 0;
  std::vector<std::vector<int>> parts;
  std::vector<Rational> values;  // f-value of each part so far
  Rational current_welfare;
  std::optional<std::vector<int>> best;  // assignment string, item -> agent
  Rational best_welfare;
  std::vector<int> assignment;
};

// Depth-first over items, agents in ascending order, keeping strict
// improvements only: the first maximizer found is the lexicographically
// smallest assignment string.
void search(SearchState& state, int item) {
  if (item == state.num_items) {
    if (!state.best || state.current_welfare > state.best_welfare) {
      state.best = state.assignment;
      state.best_welfare = state.current_welfare;
    }
    return;
  }
  const int n = static_cast<int>(state.parts.size());
  for (int agent = 0; agent < n; ++agent) {
    auto& part = state.parts[agent];
    const Rational old_value = state.values[agent];
    part.push_back(item);
    const Rational new_value = state.f->value(ItemSet(part));
    state.values[agent] = new_value;
    state.current_welfare += state.multipliers[agent] * (new_value - old_value);
    state.assignment[item] = agent;

    search(state, item + 1);

    part.pop_back();
    state.values[agent] = old_value;
    state.current_welfare -= state.multipliers[agent] * (new_value - old_value);
  }
}

Allocation allocation_from_assignment(std::span<const int> assignment, int n, int num_items) {
  std::vector<std::vector<int>> members(n);
  for (int item = 0; item < num_items; ++item) {
    members[assignment[item]].push_back(item);
  }
  std::vector<ItemSet> parts;
  parts.reserve(n);
  for (auto& list : members) parts.emplace_back(std::move(list));
  return Allocation(std::move(parts), num_items);
}

}  // namespace

Allocation exact_assignment(const PublicValuation& f, std::span<const Rational> multipliers,
                            std::uint64_t max_assignments) {
  const int n = static_cast<int>(multipliers.size());
  const int m = f.num_items();
  if (n < 1) {
    throw InvalidInputError("solver needs at least one agent");
  }

  std::uint64_t count = 1;
  for (int j = 0; j < m; ++j) {
    if (count > max_assignments / static_cast<std::uint64_t>(n)) {
      throw ResourceLimitError("exhaustive search over " + std::to_string(n) + "^" +
                               std::to_string(m) + " assignments exceeds budget " +
                               std::to_string(max_assignments));
    }
    count *= static_cast<std::uint64_t>(n);
  }

  SearchState state;
  state.f = &f;
  state.multipliers = multipliers;
  state.num_items = m;
  state.parts.resize(n);
  const Rational empty_value = f.value(ItemSet());
  state.values.assign(n, empty_value);
  for (int i = 0; i < n; ++i) state.current_welfare += multipliers[i] * empty_value;
  state.assignment.assign(m, 0);

  search(state, 0);
  return allocation_from_assignment(*state.best, n, m);
}

Allocation greedy_assignment(const PublicValuation& f, std::span<const Rational> multipliers) {
  const int n = static_cast<int>(multipliers.size());
  const int m = f.num_items();
  if (n < 1) {
    throw InvalidInputError("solver needs at least one agent");
  }

  std::vector<std::vector<int>> members(n);
  std::vector<Rational> values(n, f.value(ItemSet()));
  std::vector<int> unassigned(m);
  for (int j = 0; j < m; ++j) unassigned[j] = j;

  for (int round = 0; round < m; ++round) {
    std::optional<Rational> best_gain;
    int best_agent = -1;
    std::size_t best_slot = 0;
    // Agent-major scan with strict improvement keeps the smallest
    // (agent, item) pair among ties.
    for (int agent = 0; agent < n; ++agent) {
      for (std::size_t slot = 0; slot < unassigned.size(); ++slot) {
        const int item = unassigned[slot];
        members[agent].push_back(item);
        const Rational with_item = f.value(ItemSet(members[agent]));
        members[agent].pop_back();
        const Rational gain = multipliers[agent] * (with_item - values[agent]);
        if (!best_gain || gain > *best_gain) {
          best_gain = gain;
          best_agent = agent;
          best_slot = slot;
        }
      }
    }
    const int item = unassigned[best_slot];
    members[best_agent].push_back(item);
    values[best_agent] = f.value(ItemSet(members[best_agent]));
    unassigned.erase(unassigned.begin() + static_cast<std::ptrdiff_t>(best_slot));
  }

  std::vector<ItemSet> parts;
  parts.reserve(n);
  for (auto& list : members) parts.emplace_back(std::move(list));
  return Allocation(std::move(parts), m);
}

SolverResult ExactSolver::solve(const PublicValuation& f,
                                std::span<const Rational> multipliers) const {
  SortedAllocation sorted =
      sort_allocation_with_values(f, exact_assignment(f, multipliers, max_assignments_));
  return {std::move(sorted.allocation), std::move(sorted.values), Rational(1)};
}

SolverResult GreedySolver::solve(const PublicValuation& f,
                                 std::span<const Rational> multipliers) const {
  SortedAllocation sorted = sort_allocation_with_values(f, greedy_assignment(f, multipliers));
  // 1/2 is the textbook guarantee for submodular objectives; recorded as
  // metadata, never enforced.
  return {std::move(sorted.allocation), std::move(sorted.values), Rational(1, 2)};
}

}  // namespace mirauct

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

#include "mirauct/mechanism.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "mirauct/error.hpp"

namespace mirauct {

Range::Range(std::vector<RangeEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) return;
  num_agents_ = entries_.front().allocation.num_agents();
  for (const RangeEntry& entry : entries_) {
    if (entry.allocation.num_agents() != num_agents_ ||
        static_cast<int>(entry.values.size()) != num_agents_ ||
        entry.source.size() != num_agents_) {
      throw InvalidInputError("range entries disagree on agent count");
    }
    for (std::size_t i = 1; i < entry.values.size(); ++i) {
      if (entry.values[i] > entry.values[i - 1]) {
        throw InvalidInputError("range entry allocation is not sorted by part value");
      }
    }
  }
}

namespace {

// Smallest t >= 0 with base^t >= n (exact, base > 1).
int ceil_log(const Rational& base, int n) {
  int t = 0;
  Rational power = 1;
  while (power < n) {
    power *= base;
    ++t;
  }
  return t;
}

struct Enumerator {
  int n = 0;
  const std::vector<Rational>* heights = nullptr;  // descending
  const std::vector<int>* widths = nullptr;        // ascending
  std::vector<std::pair<Rational, int>> prefix;    // (height, width) steps so far
  std::vector<std::vector<Rational>> out;

  void emit(const Rational& tail_height, int tail_width) {
    std::vector<Rational> entries;
    entries.reserve(n);
    for (const auto& [height, width] : prefix) {
      entries.insert(entries.end(), width, height);
    }
    entries.insert(entries.end(), tail_width, tail_height);
    out.push_back(std::move(entries));
  }

  void visit(std::size_t level_start, int width_used, const Rational& mass_used) {
    if (width_used == n) {
      if (mass_used == 1) emit(Rational(0), 0);
    } else {
      // Close the prefix with a uniform tail. The tail may merge with
      // the last explicit step (duplicates are removed afterwards).
      const Rational tail = (1 - mass_used) / (n - width_used);
      if (tail >= 0 && (prefix.empty() || tail <= prefix.back().first)) {
        emit(tail, n - width_used);
      }
      for (std::size_t li = level_start; li < heights->size(); ++li) {
        const Rational& height = (*heights)[li];
        for (int width : *widths) {
          if (width_used + width > n) break;
          const Rational mass = mass_used + height * width;
          if (mass > 1) break;
          prefix.emplace_back(height, width);
          visit(li + 1, width_used + width, mass);
          prefix.pop_back();
        }
      }
    }
  }
};

}  // namespace

std::vector<MultiplierVector> enumerate_core_vectors(const MechanismParams& params,
                                                     std::uint64_t budget) {
  const int n = params.n();
  // Upper bound on enumeration nodes: each of the |levels| heights is
  // either skipped or given one of |widths| <= ceil_log_a(n) + 1 widths.
  const BigInt base = ceil_log(params.a(), n) + 2;
  BigInt bound = 1;
  for (std::size_t i = 0; i < params.levels().size(); ++i) bound *= base;
  if (bound > budget) {
    throw ResourceLimitError("range enumeration bound " + bound.str() + " exceeds budget " +
                             std::to_string(budget));
  }

  Enumerator enumerator;
  enumerator.n = n;
  enumerator.heights = &params.levels();
  enumerator.widths = &params.step_widths();
  enumerator.visit(0, 0, Rational(0));

  std::sort(enumerator.out.begin(), enumerator.out.end(),
            [](const auto& lhs, const auto& rhs) { return rhs < lhs; });
  enumerator.out.erase(std::unique(enumerator.out.begin(), enumerator.out.end()),
                       enumerator.out.end());

  std::vector<MultiplierVector> vectors;
  vectors.reserve(enumerator.out.size());
  for (auto& entries : enumerator.out) {
    vectors.emplace_back(std::move(entries));
  }
  return vectors;
}

namespace {

RangeEntry entry_for(const PublicValuation& f, const Solver& solver,
                     const MultiplierVector& source) {
  SolverResult result = solver.solve(f, source.entries());
  return {source, std::move(result.allocation), std::move(result.values)};
}

}  // namespace

Range build_simple_range(const PublicValuation& f, int n, const Solver& solver) {
  if (n < 1) {
    throw InvalidInputError("agent count must be positive");
  }
  std::vector<RangeEntry> entries;
  entries.reserve(n);
  for (int j = 1; j <= n; ++j) {
    entries.push_back(entry_for(f, solver, prefix_vector(j, n)));
  }
  return Range(std::move(entries));
}

Range build_range(const PublicValuation& f, const MechanismParams& params, const Solver& solver,
                  std::uint64_t budget) {
  std::vector<RangeEntry> entries;
  for (const MultiplierVector& source : enumerate_core_vectors(params, budget)) {
    entries.push_back(entry_for(f, solver, source));
  }
  return Range(std::move(entries));
}

std::optional<Selection> select(const Range& range, std::span<const Rational> bids) {
  if (range.size() == 0) {
    throw InvalidInputError("cannot select from an empty range");
  }
  if (static_cast<int>(bids.size()) != range.num_agents()) {
    throw InvalidInputError("bid profile has " + std::to_string(bids.size()) +
                            " entries but the range was built for " +
                            std::to_string(range.num_agents()) + " agents");
  }
  auto normalized = normalize(bids);
  if (!normalized) {
    return std::nullopt;
  }
  const int n = range.num_agents();
  const AgentOrdering& ordering = normalized->ordering;

  std::vector<Rational> sorted_bids(n);
  for (int k = 0; k < n; ++k) sorted_bids[k] = bids[ordering.original(k)];

  int best_index = -1;
  Rational best_value;
  for (int e = 0; e < range.size(); ++e) {
    Rational value = 0;
    const std::vector<Rational>& part_values = range.entry(e).values;
    for (int k = 0; k < n; ++k) value += sorted_bids[k] * part_values[k];
    if (best_index < 0 || value > best_value) {
      best_index = e;
      best_value = value;
    }
  }

  std::vector<ItemSet> assignment(n);
  for (int k = 0; k < n; ++k) {
    assignment[ordering.original(k)] = range.entry(best_index).allocation.part(k);
  }
  return Selection{best_index, ordering, std::move(assignment), best_value / normalized->scale,
                   normalized->scale};
}

std::vector<Rational> vcg_payments(const Range& range, std::span<const Rational> bids,
                                   const Selection& selection) {
  const int n = range.num_agents();
  const AgentOrdering& ordering = selection.ordering;

  std::vector<Rational> sorted_bids(n);
  for (int k = 0; k < n; ++k) sorted_bids[k] = bids[ordering.original(k)];
  const std::vector<Rational>& chosen_values = range.entry(selection.entry_index).values;

  std::vector<Rational> payments(n);
  for (int agent = 0; agent < n; ++agent) {
    const int pos = ordering.position(agent);

    Rational others_chosen = 0;
    for (int k = 0; k < n; ++k) {
      if (k != pos) others_chosen += sorted_bids[k] * chosen_values[k];
    }

    // Best the others could do without this agent: their bids stay
    // sorted after removal, so pairing them with each entry's top n-1
    // part values is the optimal matching; maximize over entries.
    std::vector<Rational> remaining;
    remaining.reserve(n - 1);
    for (int k = 0; k < n; ++k) {
      if (k != pos) remaining.push_back(sorted_bids[k]);
    }
    Rational best_without;
    bool first = true;
    for (const RangeEntry& entry : range.entries()) {
      Rational value = 0;
      for (std::size_t k = 0; k < remaining.size(); ++k) {
        value += remaining[k] * entry.values[k];
      }
      if (first || value > best_without) {
        best_without = value;
        first = false;
      }
    }

    payments[agent] = best_without - others_chosen;
    assert(payments[agent] >= 0);
  }
  return payments;
}

Outcome Outcome::degenerate(int n) {
  return Outcome{std::vector<ItemSet>(n), std::vector<Rational>(n, Rational(0)), Rational(0), -1,
                 AgentOrdering(n)};
}

std::string RangeCache::key_of(const PublicValuation& f, const MechanismParams& params,
                               const Solver& solver, RangeMode mode) {
  std::string key = mode == RangeMode::kSimple ? "simple" : "vector_fitting";
  key += '|';
  key += std::to_string(params.n());
  key += '|';
  key += to_fraction(params.a());
  key += '|';
  key += to_fraction(params.b());
  key += '|';
  key += solver.id();
  key += '|';
  key += f.to_json().dump();
  return key;
}

std::shared_ptr<const Range> RangeCache::get_or_build(const PublicValuation& f,
                                                      const MechanismParams& params,
                                                      const Solver& solver, RangeMode mode,
                                                      std::uint64_t budget) {
  const std::string key = key_of(f, params, solver, mode);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ranges_.find(key);
  if (it != ranges_.end()) {
    return it->second;
  }
  auto range = std::make_shared<const Range>(mode == RangeMode::kSimple
                                                 ? build_simple_range(f, params.n(), solver)
                                                 : build_range(f, params, solver, budget));
  ranges_.emplace(key, range);
  return range;
}

Mechanism::Mechanism(const PublicValuation& f, MechanismParams params, const Solver& solver,
                     RangeMode mode, std::uint64_t budget, RangeCache* cache)
    : f_(&f), params_(std::move(params)), mode_(mode) {
  if (cache != nullptr) {
    range_ = cache->get_or_build(f, params_, solver, mode, budget);
  } else if (mode == RangeMode::kSimple) {
    range_ = std::make_shared<const Range>(build_simple_range(f, params_.n(), solver));
  } else {
    range_ = std::make_shared<const Range>(build_range(f, params_, solver, budget));
  }
}

Outcome Mechanism::run(std::span<const Rational> bids) const {
  auto selection = select(*range_, bids);
  if (!selection) {
    return Outcome::degenerate(params_.n());
  }
  std::vector<Rational> payments = vcg_payments(*range_, bids, *selection);
  return Outcome{std::move(selection->assignment), std::move(payments),
                 selection->raw_welfare(), selection->entry_index, selection->ordering};
}

Outcome run_mechanism(const PublicValuation& f, const MechanismParams& params,
                      const Solver& solver, RangeMode mode, std::span<const Rational> bids,
                      std::uint64_t budget, RangeCache* cache) {
  return Mechanism(f, params, solver, mode, budget, cache).run(bids);
}

}  // namespace mirauct

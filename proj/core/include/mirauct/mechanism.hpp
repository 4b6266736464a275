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
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mirauct/allocation.hpp"
#include "mirauct/fitting.hpp"
#include "mirauct/multiplier_vector.hpp"
#include "mirauct/solver.hpp"
#include "mirauct/valuation.hpp"

namespace mirauct {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

enum class RangeMode {
  kSimple,         // range from the n prefix vectors (1/j, ..., 1/j, 0, ...)
  kVectorFitting,  // range from the fitted staircase vectors
};

/// One candidate allocation of the range: the multiplier vector it was
/// solved for, the solver's sorted allocation, and the cached part
/// values.
struct RangeEntry {
  MultiplierVector source;
  Allocation allocation;
  std::vector<Rational> values;  // non-increasing
};

/// The fixed, bid-independent set of allocations the mechanism optimizes
/// over. Entry order is fixed at construction and is part of the
/// mechanism's deterministic tie-breaking; a Range is immutable and safe
/// to share across threads.
///
/// The effective outcome space is the permutation closure of the stored
/// sorted entries: selection matches sorted agents to sorted parts, and
/// payments maximize over the same closed space. Keeping both sides on
/// the same space is what makes the VCG argument go through.
class Range {
 public:
  explicit Range(std::vector<RangeEntry> entries);

  const std::vector<RangeEntry>& entries() const { return entries_; }
  const RangeEntry& entry(int i) const { return entries_[i]; }
  int size() const { return static_cast<int>(entries_.size()); }
  /// Number of parts per entry (= number of agents the range was built for).
  int num_agents() const { return num_agents_; }

 private:
  std::vector<RangeEntry> entries_;
  int num_agents_ = 0;
};

/// Every multiplier vector whose staircase consists of strictly
/// decreasing heights on the level grid, each with a width on the width
/// grid, closed by a consistent uniform tail. This is a superset of the
/// vectors reachable by core_of(floor_of(.)), enumerated directly so the
/// range never depends on bids. Vectors are emitted deduplicated in
/// lexicographically decreasing order.
///
/// Throws ResourceLimitError when the enumeration bound
/// (|step_widths|+1)^|levels| exceeds the budget.
std::vector<MultiplierVector> enumerate_core_vectors(
    const MechanismParams& params, std::uint64_t budget = kDefaultEnumerationBudget);

/// Range with one entry per prefix vector, j = 1..n.
Range build_simple_range(const PublicValuation& f, int n, const Solver& solver);

/// Range with one entry per enumerated fitted vector, in enumeration
/// order. Construction depends only on (f, params, solver) - never on a
/// bid profile.
Range build_range(const PublicValuation& f, const MechanismParams& params,
                  const Solver& solver, std::uint64_t budget = kDefaultEnumerationBudget);

/// Winner determination without payments. `normalized_welfare` is the
/// objective under the canonical (unit-sum) multiplier profile;
/// raw_welfare() = normalized_welfare * scale is the same figure in
/// raw-bid currency.
struct Selection {
  int entry_index = -1;
  AgentOrdering ordering;
  std::vector<ItemSet> assignment;  // by original agent index
  Rational normalized_welfare;
  Rational scale;

  Rational raw_welfare() const { return normalized_welfare * scale; }
};

/// Picks the range entry maximizing welfare under the sorted bid profile
/// (ties: lowest entry index) and hands part k to the k-th highest
/// bidder. Invariant under scaling all bids. Returns nullopt on the
/// all-zero profile. Throws InvalidInputError if the profile length does
/// not match the range, or on an empty range.
std::optional<Selection> select(const Range& range, std::span<const Rational> bids);

/// Per-agent VCG payments, in raw-bid currency: what the others could
/// have gotten from the range without agent i, minus what they get in the
/// chosen outcome. The counterfactual maximum pairs the remaining bids,
/// sorted, with each entry's top part values (rearrangement-optimal) and
/// maximizes over entries. Always non-negative.
std::vector<Rational> vcg_payments(const Range& range, std::span<const Rational> bids,
                                   const Selection& selection);

/// Full mechanism outcome. For the degenerate all-zero bid profile the
/// assignment is empty, payments are zero and chosen_entry is -1.
struct Outcome {
  std::vector<ItemSet> assignment;  // by original agent index
  std::vector<Rational> payments;   // raw-bid currency, >= 0
  Rational welfare;                 // raw-bid currency
  int chosen_entry = -1;
  AgentOrdering ordering;

  static Outcome degenerate(int n);
};

/// Shared store of built ranges, keyed by the full content description
/// (oracle payload, n, a, b, solver id, mode). Thread-safe.
class RangeCache {
 public:
  static std::string key_of(const PublicValuation& f, const MechanismParams& params,
                            const Solver& solver, RangeMode mode);

  std::shared_ptr<const Range> get_or_build(const PublicValuation& f,
                                            const MechanismParams& params,
                                            const Solver& solver, RangeMode mode,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

 private:
  std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const Range>> ranges_;
};

/// Binds an oracle, parameters, a solver and a mode, building the range
/// once up front. run() is pure and safe to call concurrently, so one
/// Mechanism can serve a whole sweep of bid profiles.
///
/// The referenced oracle and solver must outlive the Mechanism.
class Mechanism {
 public:
  Mechanism(const PublicValuation& f, MechanismParams params, const Solver& solver,
            RangeMode mode, std::uint64_t budget = kDefaultEnumerationBudget,
            RangeCache* cache = nullptr);

  Outcome run(std::span<const Rational> bids) const;

  const Range& range() const { return *range_; }
  const MechanismParams& params() const { return params_; }
  RangeMode mode() const { return mode_; }

 private:
  const PublicValuation* f_;
  MechanismParams params_;
  RangeMode mode_;
  std::shared_ptr<const Range> range_;
};

/// One-shot convenience wrapper around Mechanism.
Outcome run_mechanism(const PublicValuation& f, const MechanismParams& params,
                      const Solver& solver, RangeMode mode, std::span<const Rational> bids,
                      std::uint64_t budget = kDefaultEnumerationBudget,
                      RangeCache* cache = nullptr);

}  // namespace mirauct

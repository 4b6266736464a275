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
#include <span>
#include <string>
#include <vector>

#include "mirauct/allocation.hpp"
#include "mirauct/rational.hpp"
#include "mirauct/valuation.hpp"

namespace mirauct {

inline constexpr std::uint64_t kDefaultAssignmentBudget = 10'000'000;

/// Output of a welfare-maximization black box: an allocation with parts
/// sorted by non-increasing f-value, plus the algorithm's approximation
/// guarantee (metadata only, never enforced at runtime).
struct SolverResult {
  Allocation allocation;
  std::vector<Rational> values;  // f-values of the sorted parts
  Rational guarantee_alpha;      // in (0, 1]
};

/// Black-box welfare maximizer B(v). Implementations must be
/// deterministic and bid-independent apart from the multiplier argument;
/// both are required for the surrounding mechanism to be truthful.
/// Multipliers may be arbitrary non-negative rationals (scaling the
/// profile never changes an argmax).
class Solver {
 public:
  virtual ~Solver() = default;
  virtual SolverResult solve(const PublicValuation& f,
                             std::span<const Rational> multipliers) const = 0;
  /// Stable identifier used in range-cache keys ("exact", "greedy").
  virtual std::string id() const = 0;
};

/// Exhaustive search over all n^m agent assignments. Among maximizers it
/// keeps the lexicographically smallest assignment string (item j's agent
/// index, j ascending), so results are fully deterministic. Throws
/// ResourceLimitError when n^m exceeds the budget.
class ExactSolver : public Solver {
 public:
  explicit ExactSolver(std::uint64_t max_assignments = kDefaultAssignmentBudget)
      : max_assignments_(max_assignments) {}

  SolverResult solve(const PublicValuation& f,
                     std::span<const Rational> multipliers) const override;
  std::string id() const override { return "exact"; }

  std::uint64_t max_assignments() const { return max_assignments_; }

 private:
  std::uint64_t max_assignments_;
};

/// Marginal-gain greedy: m rounds, each assigning one unallocated item j
/// to the agent i maximizing multipliers[i] * (f(S_i + j) - f(S_i)).
/// Ties pick the smallest (agent index, item index) pair. Not monotone
/// as a direct allocation rule, which is exactly why the mechanism wraps
/// it in a range.
class GreedySolver : public Solver {
 public:
  SolverResult solve(const PublicValuation& f,
                     std::span<const Rational> multipliers) const override;
  std::string id() const override { return "greedy"; }
};

/// Raw agent-indexed optima, without the sortedness convention. These are
/// the probes used to study solver behavior per agent (e.g. monotonicity
/// of an agent's allocated value in her own bid).
Allocation exact_assignment(const PublicValuation& f, std::span<const Rational> multipliers,
                            std::uint64_t max_assignments = kDefaultAssignmentBudget);
Allocation greedy_assignment(const PublicValuation& f, std::span<const Rational> multipliers);

}  // namespace mirauct

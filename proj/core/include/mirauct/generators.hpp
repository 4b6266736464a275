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

#include <memory>
#include <random>
#include <vector>

#include "mirauct/allocation.hpp"
#include "mirauct/multiplier_vector.hpp"
#include "mirauct/rational.hpp"
#include "mirauct/valuation.hpp"

namespace mirauct {

// Seeded generators for property trials and the CLI `gen` command. All
// draws go through std::mt19937_64, so a fixed seed reproduces the same
// corpus byte for byte.
using Rng = std::mt19937_64;

/// n positive rationals (numerators uniform in [1, max_numerator]),
/// sorted and scaled to unit sum. Exactly representable by construction.
MultiplierVector random_multiplier_vector(Rng& rng, int n, int max_numerator = 10'000);

/// Positive bids k/16 with k uniform in [1, max_sixteenths].
std::vector<Rational> random_bids(Rng& rng, int n, int max_sixteenths = 48);

/// Random slot-viewer incidence: each of the m slots covers a uniform
/// subset of the viewer pool (possibly empty).
std::shared_ptr<const CoverageValuation> random_coverage(Rng& rng, int m, int num_viewers);

/// Per-item weights k/16 with k uniform in [1, max_sixteenths].
std::shared_ptr<const AdditiveValuation> random_additive(Rng& rng, int m,
                                                         int max_sixteenths = 48);

/// Uniform independent item-to-agent assignment (not sorted).
Allocation random_allocation(Rng& rng, int m, int n);

/// random_allocation followed by sort_allocation.
SortedAllocation random_sorted_allocation(Rng& rng, const PublicValuation& f, int n);

}  // namespace mirauct

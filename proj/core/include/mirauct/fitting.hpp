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

#include <vector>

#include "mirauct/multiplier_vector.hpp"
#include "mirauct/rational.hpp"

namespace mirauct {

/// Discretization parameters of the vector-fitting mechanism.
///
/// levels() is the descending grid {b^-k : b^k < n} of admissible step
/// heights, discretizing (1/n, 1]; for n = 1 it degenerates to {1}.
/// step_widths() is the ascending grid {ceil(a^k)} of admissible step
/// widths, capped at n. Both grids are computed exactly for rational
/// a, b > 1.
class MechanismParams {
 public:
  /// Throws InvalidInputError unless a > 1, b > 1 and n >= 1.
  MechanismParams(Rational a, Rational b, int n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int n() const { return n_; }

  /// Height grid, strictly decreasing, levels().front() == 1.
  const std::vector<Rational>& levels() const { return levels_; }

  /// min(levels()); greater than 1/n whenever n >= 2.
  const Rational& min_level() const { return levels_.back(); }

  /// Width grid, strictly increasing, step_widths().front() == 1.
  const std::vector<int>& step_widths() const { return step_widths_; }

 private:
  Rational a_;
  Rational b_;
  int n_ = 0;
  std::vector<Rational> levels_;
  std::vector<int> step_widths_;
};

/// Vertical fitting: rounds large entries down onto the height grid,
/// scanning left to right; as soon as an entry is below the grid minimum
/// (or rounding would violate monotonicity against the remaining mass)
/// the rest of the vector is filled with the uniform remainder. The
/// result is a valid multiplier vector dominated by v.
MultiplierVector floor_of(const MultiplierVector& v, const MechanismParams& params);

/// Horizontal fitting: walks the steps of v; each step whose height
/// exceeds the uniform remainder is re-emitted with its width rounded
/// down onto the width grid, and the first step at or below the
/// remainder triggers a uniform fill of everything left. The result is
/// a valid multiplier vector dominated by v.
MultiplierVector core_of(const MultiplierVector& v, const MechanismParams& params);

}  // namespace mirauct

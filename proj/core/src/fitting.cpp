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

#include "mirauct/fitting.hpp"

#include <algorithm>
#include <string>

#include "mirauct/error.hpp"

namespace mirauct {

MechanismParams::MechanismParams(Rational a, Rational b, int n)
    : a_(std::move(a)), b_(std::move(b)), n_(n) {
  if (a_ <= 1 || b_ <= 1) {
    throw InvalidInputError("mechanism parameters a, b must be greater than 1");
  }
  if (n_ < 1) {
    throw InvalidInputError("agent count must be positive");
  }

  // Heights b^-k for every k with b^k < n. For n >= 2 this makes
  // min_level() > 1/n; n = 1 keeps the single level 1.
  Rational power = 1;
  while (power < n_) {
    levels_.push_back(1 / power);
    power *= b_;
  }
  if (levels_.empty()) {
    levels_.push_back(Rational(1));
  }

  // Widths ceil(a^k) for every k with the width still at most n
  // (ceil(x) <= n iff x <= n for integer n). Duplicate widths collapse.
  power = 1;
  while (power <= n_) {
    const BigInt num = numerator(power);
    const BigInt den = denominator(power);
    const BigInt ceil_big = (num + den - 1) / den;
    const int width = static_cast<int>(ceil_big);
    if (step_widths_.empty() || step_widths_.back() != width) {
      step_widths_.push_back(width);
    }
    power *= a_;
  }
}

namespace {

// Largest level <= x; requires x >= min_level.
const Rational& floor_to_levels(const Rational& x, const std::vector<Rational>& levels) {
  for (const Rational& level : levels) {
    if (level <= x) return level;
  }
  throw InvalidInputError("value below the level grid");
}

void check_size(const MultiplierVector& v, const MechanismParams& params) {
  if (v.size() != params.n()) {
    throw InvalidInputError("vector has " + std::to_string(v.size()) +
                            " entries but parameters are for n = " + std::to_string(params.n()));
  }
}

}  // namespace

MultiplierVector floor_of(const MultiplierVector& v, const MechanismParams& params) {
  check_size(v, params);
  const int n = params.n();
  const Rational& q = params.min_level();

  std::vector<Rational> u(n);
  Rational used = 0;
  for (int i = 0; i < n; ++i) {
    // Minimum permissible value of u[i]: the remaining mass spread evenly.
    const Rational remainder = (1 - used) / (n - i);
    if (v[i] >= q) {
      const Rational& rounded = floor_to_levels(v[i], params.levels());
      if (rounded > remainder) {
        u[i] = rounded;
        used += rounded;
        continue;
      }
    }
    std::fill(u.begin() + i, u.end(), remainder);
    break;
  }
  return MultiplierVector(std::move(u));
}

MultiplierVector core_of(const MultiplierVector& v, const MechanismParams& params) {
  check_size(v, params);
  const int n = params.n();
  const std::vector<int>& widths = params.step_widths();

  std::vector<Rational> u(n);
  Rational used = 0;
  int src = 0;  // first index of the current step of v
  int dst = 0;  // first index of the current step of u; dst <= src throughout
  while (src < n) {
    const Rational remainder = (1 - used) / (n - dst);
    if (v[src] > remainder) {
      int src_end = src;
      while (src_end + 1 < n && v[src_end + 1] == v[src]) ++src_end;
      // Widest grid width that fits before the end of v's current step.
      const int cap = src_end - dst + 1;
      const auto it = std::upper_bound(widths.begin(), widths.end(), cap);
      const int width = *(it - 1);
      std::fill(u.begin() + dst, u.begin() + dst + width, v[src]);
      used += v[src] * width;
      src = src_end + 1;
      dst += width;
    } else {
      std::fill(u.begin() + dst, u.end(), remainder);
      dst = n;
      break;
    }
  }
  // The uniform tail always fires at or before the last step of v, so u
  // is fully written here; the constructor re-checks the invariants.
  return MultiplierVector(std::move(u));
}

}  // namespace mirauct

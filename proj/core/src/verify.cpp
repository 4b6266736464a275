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

#include "mirauct/verify.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mirauct/allocation.hpp"
#include "mirauct/error.hpp"
#include "mirauct/fitting.hpp"
#include "mirauct/generators.hpp"
#include "mirauct/io.hpp"
#include "mirauct/multiplier_vector.hpp"

namespace mirauct {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

nlohmann::json vector_payload(const MultiplierVector& v) {
  return multiplier_vector_to_json(v);
}

}  // namespace

void PropertyReport::add_failure(nlohmann::json payload) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) {
    failures.push_back(std::move(payload));
  }
}

void PropertyReport::observe_ratio(const Rational& ratio) {
  if (!min_ratio || ratio < *min_ratio) {
    min_ratio = ratio;
  }
}

nlohmann::json PropertyReport::to_json() const {
  return {{"property", property},
          {"trials", trials},
          {"pass", pass()},
          {"failure_count", failure_count},
          {"failures", failures},
          {"min_ratio", min_ratio ? nlohmann::json(to_fraction(*min_ratio)) : nlohmann::json()},
          {"details", details}};
}

PropertyReport check_floor_core_lemmas(std::uint64_t trials, const MechanismParams& params,
                                       std::uint64_t seed, int m, int num_viewers) {
  PropertyReport report;
  report.property = "floor_core_lemmas";
  report.trials = trials;

  const Rational floor_factor = Rational(3) / (4 * params.b());
  const Rational core_factor = 1 / params.a();
  Rng rng(seed);
  std::optional<Rational> min_core_ratio;

  for (std::uint64_t t = 0; t < trials; ++t) {
    auto f = random_coverage(rng, m, num_viewers);
    const MultiplierVector v = random_multiplier_vector(rng, params.n());
    const SortedAllocation sorted = random_sorted_allocation(rng, *f, params.n());

    const Rational base = welfare(*f, v.entries(), sorted.allocation);
    const Rational floored = welfare(*f, floor_of(v, params).entries(), sorted.allocation);
    const Rational cored = welfare(*f, core_of(v, params).entries(), sorted.allocation);

    if (floored < floor_factor * base) {
      report.add_failure({{"trial", t},
                          {"lemma", "floor"},
                          {"v", vector_payload(v)},
                          {"welfare", to_fraction(base)},
                          {"floor_welfare", to_fraction(floored)}});
    }
    if (cored < base * core_factor) {
      report.add_failure({{"trial", t},
                          {"lemma", "core"},
                          {"v", vector_payload(v)},
                          {"welfare", to_fraction(base)},
                          {"core_welfare", to_fraction(cored)}});
    }
    if (base > 0) {
      report.observe_ratio(floored / base);
      const Rational core_ratio = cored / base;
      if (!min_core_ratio || core_ratio < *min_core_ratio) min_core_ratio = core_ratio;
    }
  }

  report.details["floor_threshold"] = to_fraction(floor_factor);
  report.details["core_threshold"] = to_fraction(core_factor);
  if (min_core_ratio) report.details["min_core_ratio"] = to_fraction(*min_core_ratio);
  return report;
}

PropertyReport check_dominance_lemma(std::uint64_t trials, const MechanismParams& params,
                                     std::uint64_t seed, int m, int num_viewers) {
  PropertyReport report;
  report.property = "dominance_lemma";
  report.trials = trials;

  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto f = random_coverage(rng, m, num_viewers);
    const MultiplierVector v = random_multiplier_vector(rng, params.n());
    const SortedAllocation sorted = random_sorted_allocation(rng, *f, params.n());

    const MultiplierVector pairs[] = {floor_of(v, params), core_of(v, params), v};
    const Rational base = welfare(*f, v.entries(), sorted.allocation);
    for (const MultiplierVector& dominated : pairs) {
      if (!dominates(v, dominated)) {
        report.add_failure(
            {{"trial", t}, {"issue", "pair does not dominate"}, {"v", vector_payload(v)},
             {"w", vector_payload(dominated)}});
        continue;
      }
      const Rational lower = welfare(*f, dominated.entries(), sorted.allocation);
      if (base < lower) {
        report.add_failure({{"trial", t},
                            {"issue", "welfare ordering violated"},
                            {"v", vector_payload(v)},
                            {"w", vector_payload(dominated)},
                            {"welfare_v", to_fraction(base)},
                            {"welfare_w", to_fraction(lower)}});
      }
    }
  }
  return report;
}

PropertyReport check_mechanism_bounds(const BoundsCorpusConfig& config, const Rational& a,
                                      const Rational& b, RangeMode mode,
                                      std::vector<BoundsRow>* rows, int assert_min_n) {
  PropertyReport report;
  report.property = mode == RangeMode::kVectorFitting ? "mechanism_bound_vector_fitting"
                                                      : "mechanism_bound_simple";
  report.trials = static_cast<std::uint64_t>(config.instances);

  const Rational fitting_threshold = Rational(3) / (4 * a * b);
  ExactSolver solver;
  Rng rng(config.seed);
  std::uint64_t asserted = 0;

  for (int id = 0; id < config.instances; ++id) {
    const int n = std::uniform_int_distribution<int>(1, config.n_max)(rng);
    const int m = std::uniform_int_distribution<int>(1, config.m_max)(rng);
    const int viewers = std::uniform_int_distribution<int>(1, config.max_viewers)(rng);
    auto f = random_coverage(rng, m, viewers);
    const std::vector<Rational> bids = random_bids(rng, n);

    const MechanismParams params(a, b, n);
    const Outcome outcome = run_mechanism(*f, params, solver, mode, bids);
    const Rational optimum = welfare(*f, bids, exact_assignment(*f, bids));
    const Rational ratio = optimum == 0 ? Rational(1) : outcome.welfare / optimum;

    if (rows) rows->push_back({id, n, ratio});
    report.observe_ratio(ratio);

    if (mode == RangeMode::kVectorFitting) {
      ++asserted;
      if (ratio < fitting_threshold) {
        report.add_failure({{"instance", id},
                            {"n", n},
                            {"ratio", to_fraction(ratio)},
                            {"threshold", to_fraction(fitting_threshold)}});
      }
    } else if (n >= std::max(assert_min_n, 2)) {
      // ratio >= 1/ln(n), evaluated at 50 digits since ln(n) is
      // irrational. Small n is recorded only (see header).
      ++asserted;
      const Float50 lhs = Float50(ratio) * log(Float50(n));
      if (lhs < 1) {
        report.add_failure({{"instance", id},
                            {"n", n},
                            {"ratio", to_fraction(ratio)},
                            {"threshold", "1/ln(n)"}});
      }
    }
  }

  report.details["asserted_instances"] = asserted;
  if (mode == RangeMode::kVectorFitting) {
    report.details["threshold"] = to_fraction(fitting_threshold);
  } else {
    report.details["threshold"] = "1/ln(n) for n >= " + std::to_string(std::max(assert_min_n, 2));
  }
  return report;
}

PropertyReport check_truthfulness(const PublicValuation& f, std::span<const Rational> true_bids,
                                  const MechanismParams& params, RangeMode mode,
                                  const Solver& solver, std::uint64_t budget) {
  const int n = params.n();
  if (static_cast<int>(true_bids.size()) != n) {
    throw InvalidInputError("bid profile length disagrees with parameters");
  }

  PropertyReport report;
  report.property = "truthfulness_grid";

  const Mechanism mechanism(f, params, solver, mode, budget);
  const Outcome truthful = mechanism.run(true_bids);

  for (int agent = 0; agent < n; ++agent) {
    const Rational true_value = true_bids[agent];
    const Rational truthful_utility =
        true_value * f.value(truthful.assignment[agent]) - truthful.payments[agent];

    std::optional<Rational> previous_value;
    for (int k = 0; k <= 32; ++k) {
      ++report.trials;
      std::vector<Rational> bids(true_bids.begin(), true_bids.end());
      bids[agent] = true_value * Rational(k, 16);
      const Outcome outcome = mechanism.run(bids);

      const Rational allocated = f.value(outcome.assignment[agent]);
      const Rational deviation_utility = true_value * allocated - outcome.payments[agent];
      if (deviation_utility > truthful_utility) {
        report.add_failure({{"agent", agent},
                            {"grid_k", k},
                            {"deviation_bid", to_fraction(bids[agent])},
                            {"utility_true", to_fraction(truthful_utility)},
                            {"utility_deviation", to_fraction(deviation_utility)}});
      }
      if (previous_value && allocated < *previous_value) {
        report.add_failure({{"agent", agent},
                            {"grid_k", k},
                            {"issue", "allocated value decreased in own bid"},
                            {"previous", to_fraction(*previous_value)},
                            {"current", to_fraction(allocated)}});
      }
      previous_value = allocated;
    }
  }
  return report;
}

PropertyReport check_greedy_counterexample() {
  PropertyReport report;
  report.property = "greedy_counterexample";
  report.trials = 2;

  const Instance instance = preset_instance("appendix-a");
  const PublicValuation& f = *instance.valuation;

  const std::vector<Rational> high_bids = {Rational(1), Rational(11, 10)};
  const std::vector<Rational> low_bids = {Rational(1), Rational(9, 10)};
  const Rational value_high = f.value(greedy_assignment(f, high_bids).part(1));
  const Rational value_low = f.value(greedy_assignment(f, low_bids).part(1));

  if (value_high != 6) {
    report.add_failure({{"bids", "1,11/10"},
                        {"expected_agent2_value", "6/1"},
                        {"actual", to_fraction(value_high)}});
  }
  if (value_low != 10) {
    report.add_failure({{"bids", "1,9/10"},
                        {"expected_agent2_value", "10/1"},
                        {"actual", to_fraction(value_low)}});
  }
  // The monotonicity checker: allocated value must never decrease as the
  // bid rises. Here it must flag a drop, or the witness is gone.
  const bool violation_flagged = value_high < value_low;
  if (!violation_flagged) {
    report.add_failure({{"issue", "greedy allocation was monotone on the witness pair"}});
  }

  report.details["agent2_value_at_11_10"] = to_fraction(value_high);
  report.details["agent2_value_at_9_10"] = to_fraction(value_low);
  report.details["monotonicity_violation_flagged"] = violation_flagged;
  return report;
}

PropertyReport range_membership_audit(std::uint64_t trials, const MechanismParams& params,
                                      std::uint64_t seed, std::uint64_t budget) {
  PropertyReport report;
  report.property = "range_membership";
  report.trials = trials;

  const std::vector<MultiplierVector> enumerated = enumerate_core_vectors(params, budget);
  const std::set<MultiplierVector> universe(enumerated.begin(), enumerated.end());
  report.details["enumerated"] = enumerated.size();

  Rng rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const MultiplierVector v = random_multiplier_vector(rng, params.n());
    const MultiplierVector fitted = core_of(floor_of(v, params), params);
    if (!universe.contains(fitted)) {
      report.add_failure(
          {{"trial", t}, {"v", vector_payload(v)}, {"core_of_floor", vector_payload(fitted)}});
    }
  }
  return report;
}

std::vector<SeriesPoint> warmup_tight_series(std::span<const long long> n_values) {
  std::vector<SeriesPoint> series;
  series.reserve(n_values.size());
  for (long long n : n_values) {
    if (n < 1) {
      throw InvalidInputError("series sizes must be positive");
    }
    if (n > 1'000'000) {
      throw ResourceLimitError("series size " + std::to_string(n) + " exceeds 10^6");
    }
    const Float50 sqrt_n = sqrt(Float50(n));
    Float50 sum = 1;
    Float50 sqrt_prev = 1;  // sqrt(j - 1), starting at j = 2
    Float50 r_prev = 1 / sqrt_n;
    for (long long j = 2; j <= n; ++j) {
      const Float50 sqrt_j = sqrt(Float50(j));
      const Float50 v_j = (sqrt_j - sqrt_prev) / sqrt_n;
      const Float50 r_j = r_prev + v_j;
      sum += v_j * (r_j - j * v_j) / (r_j * r_prev);
      sqrt_prev = sqrt_j;
      r_prev = r_j;
    }
    series.push_back({n, sum.convert_to<double>()});
  }
  return series;
}

LogFit fit_against_log(std::span<const SeriesPoint> series) {
  LogFit fit;
  const std::size_t k = series.size();
  if (k == 0) return fit;

  double sum_l = 0, sum_ll = 0, sum_s = 0, sum_ls = 0;
  for (const SeriesPoint& point : series) {
    const double l = std::log(static_cast<double>(point.n));
    sum_l += l;
    sum_ll += l * l;
    sum_s += point.bound_sum;
    sum_ls += l * point.bound_sum;
  }
  if (sum_ll > 0) {
    fit.origin_slope = sum_ls / sum_ll;
  }
  const double denom = static_cast<double>(k) * sum_ll - sum_l * sum_l;
  if (denom != 0) {
    fit.slope = (static_cast<double>(k) * sum_ls - sum_l * sum_s) / denom;
    fit.intercept = (sum_s - fit.slope * sum_l) / static_cast<double>(k);
  }
  for (const SeriesPoint& point : series) {
    const double l = std::log(static_cast<double>(point.n));
    const double residual = point.bound_sum - fit.origin_slope * l;
    if (point.bound_sum != 0) {
      fit.max_rel_residual = std::max(fit.max_rel_residual,
                                      std::abs(residual) / std::abs(point.bound_sum));
    }
  }
  return fit;
}

}  // namespace mirauct

// Copyright 2026 The qsearch Authors
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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qsearch/domain.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch::grover {

// sin^2((2k+1) * asin(sqrt(M/N))): probability that k amplification rounds
// over N candidates with M marked end on a marked outcome.
inline double success_probability(std::uint64_t domain_size,
                                  std::uint64_t marked_count, int iterations) {
  if (marked_count < 1 || marked_count > domain_size) {
    throw std::domain_error("marked count must lie in [1, N]");
  }
  if (iterations < 0) throw std::domain_error("iteration count must be >= 0");
  const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                           static_cast<double>(domain_size)));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

// floor((pi/4) sqrt(N/M)), clamped below at one round whenever amplification
// can help at all (M < N). M = N needs no rounds and returns zero.
inline int optimal_iterations(std::uint64_t domain_size,
                              std::uint64_t marked_count) {
  if (marked_count < 1 || marked_count > domain_size) {
    throw std::domain_error("marked count must lie in [1, N]");
  }
  if (marked_count == domain_size) return 0;
  const double ratio = static_cast<double>(domain_size) /
                       static_cast<double>(marked_count);
  const int k = static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
  return std::max(k, 1);
}

struct GroverPlan {
  std::uint64_t domain_size = 0;
  std::uint64_t marked_count = 0;  // assumed M; drives the iteration count
  int iterations = 0;
  InitMode init;
  std::uint64_t seed = 0;

  friend bool operator==(const GroverPlan&, const GroverPlan&) = default;
};

inline GroverPlan make_plan(std::uint64_t domain_size,
                            std::uint64_t marked_count, const InitMode& init,
                            std::uint64_t seed) {
  if (init.kind == InitMode::Kind::ExactDomain &&
      init.domain_size != domain_size) {
    throw std::domain_error("exact-domain init sized " +
                            std::to_string(init.domain_size) +
                            " does not match the domain of " +
                            std::to_string(domain_size) + " candidates");
  }
  GroverPlan plan;
  plan.domain_size = domain_size;
  plan.marked_count = marked_count;
  plan.iterations = optimal_iterations(domain_size, marked_count);
  plan.init = init;
  plan.seed = seed;
  return plan;
}

struct GroverRunResult {
  std::uint64_t outcome_index = 0;
  bool valid = false;
  std::uint64_t oracle_queries = 0;  // summed over every attempt
  int retries = 0;                   // attempts beyond the first
  double final_marked_probability = 0.0;  // pre-measurement, per attempt
};

namespace detail {

// One membership bit per basis index of the full register. Indices past the
// domain (padding states) are never marked.
template <class Candidate, class MarkedFn>
std::vector<char> precompute_marked(const Domain<Candidate>& domain,
                                    MarkedFn&& marked) {
  if (domain.qubit_width > kMaxQubits) {
    throw capacity_error("domain needs " +
                         std::to_string(domain.qubit_width) +
                         " qubits to index; dense simulation stops at " +
                         std::to_string(kMaxQubits));
  }
  std::vector<char> mask(std::uint64_t{1} << domain.qubit_width, 0);
  for (std::uint64_t i = 0; i < domain.size; ++i) {
    mask[i] = marked(domain.decode(i)) ? 1 : 0;
  }
  return mask;
}

inline void check_plan(const GroverPlan& plan, std::uint64_t domain_size) {
  if (plan.domain_size != domain_size) {
    throw std::domain_error("plan built for " +
                            std::to_string(plan.domain_size) +
                            " candidates applied to a domain of " +
                            std::to_string(domain_size));
  }
  if (plan.iterations < 0) {
    throw std::domain_error("iteration count must be >= 0");
  }
  if (plan.init.kind == InitMode::Kind::ExactDomain &&
      plan.init.domain_size != domain_size) {
    throw std::domain_error("exact-domain init does not match the domain");
  }
}

inline void run_rounds(StateVector& state, const std::vector<char>& mask,
                       const GroverPlan& plan) {
  for (int it = 0; it < plan.iterations; ++it) {
    apply_phase_oracle(state, [&mask](std::uint64_t i) { return mask[i] != 0; });
    reflect_about_initial(state, plan.init);
    if (std::abs(l2_norm(state) - 1.0) > kNormTolerance) {
      throw std::logic_error("state norm drifted after iteration " +
                             std::to_string(it + 1));
    }
  }
}

}  // namespace detail

// Full search protocol: prepare, amplify, measure once, check the outcome
// against the verifier, and re-run on a miss (up to max_retries extra
// attempts). The verifier is the trusted classical check; the marked
// predicate only shapes the amplitudes, so a lying oracle cannot produce a
// false positive, only wasted attempts.
template <class Candidate, class MarkedFn, class VerifyFn>
GroverRunResult run(const Domain<Candidate>& domain, MarkedFn&& marked,
                    const GroverPlan& plan, VerifyFn&& verify,
                    int max_retries = 3) {
  detail::check_plan(plan, domain.size);
  if (max_retries < 0) throw std::domain_error("max_retries must be >= 0");
  const std::vector<char> mask = detail::precompute_marked(domain, marked);

  std::mt19937_64 rng(plan.seed);
  GroverRunResult result;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    StateVector state = init(domain.qubit_width, plan.init);
    detail::run_rounds(state, mask, plan);
    result.final_marked_probability = probability_of(
        state, [&mask](std::uint64_t i) { return mask[i] != 0; });
    result.outcome_index = sample_index(state, rng);
    result.oracle_queries += state.oracle_queries;
    result.retries = attempt;
    result.valid = result.outcome_index < domain.size &&
                   verify(domain.decode(result.outcome_index));
    if (result.valid) break;
  }
  if (result.valid && !verify(domain.decode(result.outcome_index))) {
    throw std::logic_error("verifier accepted and then rejected outcome " +
                           std::to_string(result.outcome_index));
  }
  return result;
}

struct TracePoint {
  int iteration = 0;
  double marked_probability = 0.0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

// Marked-subspace probability before any round (iteration 0) and after each
// of the plan's rounds. Purely diagnostic: no measurement, no rng.
template <class Candidate, class MarkedFn>
std::vector<TracePoint> amplitude_trace(const Domain<Candidate>& domain,
                                        MarkedFn&& marked,
                                        const GroverPlan& plan) {
  detail::check_plan(plan, domain.size);
  const std::vector<char> mask = detail::precompute_marked(domain, marked);
  const auto is_marked = [&mask](std::uint64_t i) { return mask[i] != 0; };

  std::vector<TracePoint> trace;
  trace.reserve(static_cast<std::size_t>(plan.iterations) + 1);
  StateVector state = init(domain.qubit_width, plan.init);
  trace.push_back({0, probability_of(state, is_marked)});
  for (int it = 1; it <= plan.iterations; ++it) {
    apply_phase_oracle(state, is_marked);
    reflect_about_initial(state, plan.init);
    if (std::abs(l2_norm(state) - 1.0) > kNormTolerance) {
      throw std::logic_error("state norm drifted after iteration " +
                             std::to_string(it));
    }
    trace.push_back({it, probability_of(state, is_marked)});
  }
  return trace;
}

struct TheoreticalQueryReport {
  double search_space = 0.0;      // (n^2)! candidates
  double sqrt_of_space = 0.0;     // sqrt(N), the headline query figure
  double quarter_pi_scaled = 0.0; // (pi/4) sqrt(N/M)
  double quarter_pi_floor = 0.0;  // the scaled figure floored
};

// Query-count arithmetic for an n x n grid without touching any simulator
// cap: (n^2)! is carried in double precision, so this covers orders whose
// domains cannot be constructed (the double overflows past order 12).
inline TheoreticalQueryReport theoretical_query_report(
    int grid_order, std::uint64_t assumed_marked = 1) {
  if (grid_order < 2 || grid_order > 12) {
    throw std::domain_error("query report supports orders 2 through 12");
  }
  if (assumed_marked < 1) {
    throw std::domain_error("assumed marked count must be >= 1");
  }
  double space = 1.0;
  for (int i = 2; i <= grid_order * grid_order; ++i) space *= i;
  if (static_cast<double>(assumed_marked) > space) {
    throw std::domain_error("assumed marked count exceeds the search space");
  }
  TheoreticalQueryReport report;
  report.search_space = space;
  report.sqrt_of_space = std::sqrt(space);
  report.quarter_pi_scaled = std::numbers::pi / 4.0 *
                             std::sqrt(space / static_cast<double>(assumed_marked));
  report.quarter_pi_floor = std::floor(report.quarter_pi_scaled);
  return report;
}

}  // namespace qsearch::grover

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
//
// End-to-end acceptance checks. Each criterion prints exactly one line,
// [PASS] or [FAIL], and the binary exits nonzero if any checked criterion
// fails. An optional argument (1..12) restricts the run to one criterion.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsearch/bench.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/magic.hpp"
#include "qsearch/revcircuit.hpp"
#include "qsearch/statevector.hpp"

namespace {

using qsearch::GateDescriptor;
using qsearch::GateList;
using qsearch::InitMode;
using qsearch::MagicGrid;
using qsearch::StateVector;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& label) {
    if (!condition && pass) {
      pass = false;
      detail = label;
    }
  }
};

// Sends one basis state through a gate list and reports where the amplitude
// landed. Permutation-plus-phase circuits (everything assembled here) keep a
// single unit amplitude; anything else fails the check.
struct BasisImage {
  std::uint64_t index = 0;
  int sign = 0;
  bool single = false;
};

BasisImage apply_to_basis(const GateList& list, std::uint64_t index) {
  StateVector state(list.num_qubits());
  state.amplitudes[0] = 0.0;
  state.amplitudes[index] = 1.0;
  qsearch::run_gatelist(state, list);
  BasisImage image;
  int hits = 0;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const auto amp = state.amplitudes[i];
    if (std::abs(amp) < 1e-9) continue;
    ++hits;
    image.index = i;
    if (std::abs(amp.real() - 1.0) < 1e-9 && std::abs(amp.imag()) < 1e-9) {
      image.sign = 1;
    } else if (std::abs(amp.real() + 1.0) < 1e-9 &&
               std::abs(amp.imag()) < 1e-9) {
      image.sign = -1;
    }
  }
  image.single = hits == 1 && image.sign != 0;
  return image;
}

std::vector<int> shuffled_permutation(int m, std::mt19937_64& rng) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i + 1;
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

Outcome criterion_magic_constants() {
  Outcome o;
  o.require(qsearch::magic_constant(3) == 15, "magic_constant(3) != 15");
  o.require(qsearch::magic_constant(5) == 65, "magic_constant(5) != 65");
  o.detail = "magic_constant(3) = 15, magic_constant(5) = 65";
  return o;
}

Outcome criterion_siamese() {
  Outcome o;
  const std::vector<int> reference = {17, 24, 1,  8,  15, 23, 5,  7,  14,
                                      16, 4,  6,  13, 20, 22, 10, 12, 19,
                                      21, 3,  11, 18, 25, 2,  9};
  o.require(qsearch::siamese(5).cells == reference,
            "siamese(5) differs from the reference matrix");
  for (int n = 3; n <= 15; n += 2) {
    o.require(qsearch::is_magic(qsearch::siamese(n)),
              "siamese(" + std::to_string(n) + ") is not magic");
  }
  o.detail = "reference 5x5 matched; odd orders 3..15 all magic";
  return o;
}

Outcome criterion_brute_force() {
  Outcome o;
  const qsearch::SearchResult first = qsearch::brute_force(3, true);
  o.require(first.solutions.size() == 1, "no first solution found");
  o.require(first.solutions.front().cells ==
                std::vector<int>{2, 7, 6, 9, 5, 1, 4, 3, 8},
            "first solution is not [2,7,6,9,5,1,4,3,8]");
  o.require(first.stats.candidates_checked == 69075,
            "candidates_checked != 69075 (got " +
                std::to_string(first.stats.candidates_checked) + ")");
  const qsearch::SearchResult all = qsearch::brute_force(3, false);
  o.require(all.solutions.size() == 8,
            "full enumeration found " + std::to_string(all.solutions.size()) +
                " solutions, not 8");
  o.detail = "first hit after 69,075 candidates; 8 solutions total";
  return o;
}

Outcome criterion_rank_consistency() {
  Outcome o;
  o.require(
      qsearch::permutation_rank({2, 7, 6, 9, 5, 1, 4, 3, 8}) == 69074,
      "rank of the first solution != 69074");
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::vector<int> p = shuffled_permutation(9, rng);
    const std::uint64_t rank = qsearch::permutation_rank(p);
    o.require(qsearch::permutation_unrank(rank, 9) == p,
              "unrank(rank(p)) != p at trial " + std::to_string(trial));
  }
  o.detail = "rank 69,074 and 1000 random round trips";
  return o;
}

Outcome criterion_iteration_planning() {
  Outcome o;
  o.require(qsearch::grover::optimal_iterations(25, 1) == 3,
            "optimal_iterations(25, 1) != 3");
  const auto report = qsearch::grover::theoretical_query_report(3);
  o.require(std::abs(report.sqrt_of_space - 602.39) <= 0.01,
            "sqrt(362880) not within 602.39 +/- 0.01");
  o.require(std::abs(report.quarter_pi_scaled - 473.12) <= 0.01,
            "(pi/4) sqrt(362880) not within 473.12 +/- 0.01");
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(2);
  detail << "k = 3; sqrt(N) = " << report.sqrt_of_space
         << "; (pi/4) sqrt(N) = " << report.quarter_pi_scaled;
  o.detail = detail.str();
  return o;
}

Outcome criterion_game_search() {
  Outcome o;
  const auto domain = qsearch::index_domain(25);
  const auto marked = [](std::uint64_t i) { return i == 11; };
  qsearch::grover::GroverPlan plan = qsearch::grover::make_plan(
      25, 1, InitMode::exact_domain(25), 0);
  o.require(plan.iterations == 3, "planned iterations != 3");

  // The diffusion recurrence must land exactly on the closed form
  // sin^2(7 asin(1/5)) = 0.974210..., checked to 1e-5.
  const double expected =
      std::pow(std::sin(7.0 * std::asin(std::sqrt(1.0 / 25.0))), 2.0);
  const auto trace = qsearch::grover::amplitude_trace(domain, marked, plan);
  const double simulated = trace.back().marked_probability;
  o.require(std::abs(simulated - expected) <= 1e-5,
            "simulated third-iteration probability " +
                std::to_string(simulated) + " differs from closed form");

  int hits = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    plan.seed = seed;
    const auto result =
        qsearch::grover::run(domain, marked, plan, marked, 0);
    if (result.valid) ++hits;
  }
  o.require(hits >= 955 && hits <= 985,
            "first-attempt successes " + std::to_string(hits) +
                " outside [955, 985]");
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(6);
  detail << "p after 3 iterations = " << simulated << "; seeded hits = "
         << hits << "/1000";
  o.detail = detail.str();
  return o;
}

Outcome criterion_full_search() {
  Outcome o;
  const auto domain = qsearch::full_permutation_domain(3);
  const auto is_solution = [](const MagicGrid& g) {
    return qsearch::is_magic(g);
  };
  const qsearch::grover::GroverPlan plan = qsearch::grover::make_plan(
      domain.size, 8, InitMode::exact_domain(domain.size), 0);
  o.require(plan.iterations == 167, "planned iterations != 167");

  const auto trace =
      qsearch::grover::amplitude_trace(domain, is_solution, plan);
  for (const auto& point : trace) {
    const double closed = qsearch::grover::success_probability(
        domain.size, 8, point.iteration);
    o.require(std::abs(point.marked_probability - closed) <= 1e-9,
              "trace departs from the closed form at iteration " +
                  std::to_string(point.iteration));
  }
  o.require(trace.back().marked_probability >= 0.999,
            "final marked probability below 0.999");

  const auto result =
      qsearch::grover::run(domain, is_solution, plan, is_solution, 3);
  o.require(result.valid, "measured outcome is not a magic square");
  o.require(qsearch::is_magic(domain.decode(result.outcome_index)),
            "decoded outcome fails the predicate");
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(6);
  detail << "k = 167; final p = " << trace.back().marked_probability
         << "; outcome verified";
  o.detail = detail.str();
  return o;
}

Outcome criterion_reduced_search() {
  Outcome o;
  const auto domain = qsearch::reduce_domain(3);
  o.require(domain.size == 40320, "reduced domain size != 40320");

  std::uint64_t survivors = 0;
  for (const MagicGrid& g : qsearch::backtracking(3, false).solutions) {
    try {
      (void)domain.encode(g);
      ++survivors;
    } catch (const std::domain_error&) {
    }
  }
  o.require(survivors == 8, "centre-fixing kept " +
                                std::to_string(survivors) +
                                " of 8 solutions");

  const qsearch::grover::GroverPlan plan = qsearch::grover::make_plan(
      domain.size, 8, InitMode::exact_domain(domain.size), 0);
  o.require(plan.iterations == 55, "planned iterations != 55");
  const auto is_solution = [](const MagicGrid& g) {
    return qsearch::is_magic(g);
  };
  const auto result =
      qsearch::grover::run(domain, is_solution, plan, is_solution, 3);
  o.require(result.final_marked_probability >= 0.999,
            "final marked probability below 0.999");
  o.require(result.valid, "reduced-domain outcome is not magic");
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(6);
  detail << "N = 40,320 with all 8 solutions; k = 55; final p = "
         << result.final_marked_probability;
  o.detail = detail.str();
  return o;
}

Outcome criterion_gate_demo() {
  Outcome o;
  const GateList circuit = qsearch::build_demo_circuit();
  StateVector state(circuit.num_qubits());
  qsearch::run_gatelist(state, circuit);
  const auto histogram = qsearch::sample(state, 1024, 0);
  o.require(histogram.size() == 1 && histogram.count("100") == 1 &&
                histogram.at("100") == 1024,
            "histogram is not {\"100\": 1024}");
  o.detail = "1024 shots, all on basis state 100";
  return o;
}

Outcome criterion_oracle_equivalence() {
  Outcome o;

  // Index oracles: q = 1..5, every marked index, every basis state.
  for (int q = 1; q <= 5 && o.pass; ++q) {
    const std::uint64_t states = std::uint64_t{1} << q;
    for (std::uint64_t target = 0; target < states && o.pass; ++target) {
      const GateList oracle = qsearch::assemble_index_oracle(q, target);
      for (std::uint64_t basis = 0; basis < states; ++basis) {
        const BasisImage image = apply_to_basis(oracle, basis);
        const int expected = basis == target ? -1 : 1;
        o.require(image.single && image.index == basis &&
                      image.sign == expected,
                  "index oracle q=" + std::to_string(q) + " target " +
                      std::to_string(target) + " wrong at basis " +
                      std::to_string(basis));
      }
    }
  }

  // Adders: widths 1..4, exhaustive over both inputs, carries restored.
  for (int w = 1; w <= 4 && o.pass; ++w) {
    const GateList adder = qsearch::build_adder(w);
    const std::uint64_t values = std::uint64_t{1} << w;
    for (std::uint64_t a = 0; a < values && o.pass; ++a) {
      for (std::uint64_t b = 0; b < values; ++b) {
        const std::uint64_t in = a | (b << w);
        const std::uint64_t want = a | (((a + b) % values) << w);
        const BasisImage image = apply_to_basis(adder, in);
        o.require(image.single && image.index == want && image.sign == 1,
                  "adder width " + std::to_string(w) + " wrong at a=" +
                      std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }

  // Comparators: equality flags, widths 1..4, several constants each.
  for (int w = 1; w <= 4 && o.pass; ++w) {
    const std::uint64_t values = std::uint64_t{1} << w;
    for (const std::uint64_t constant :
         {std::uint64_t{0}, values - 1, std::uint64_t{5} % values}) {
      const GateList comparator = qsearch::build_equality_flag(w, constant);
      for (std::uint64_t a = 0; a < values; ++a) {
        const std::uint64_t want = a | ((a == constant ? 1ull : 0ull) << w);
        const BasisImage image = apply_to_basis(comparator, a);
        o.require(image.single && image.index == want && image.sign == 1,
                  "equality flag width " + std::to_string(w) +
                      " constant " + std::to_string(constant) +
                      " wrong at a=" + std::to_string(a));
      }
    }
  }

  // Sum oracles on 2-bit toy cells: one pair summing to 3 (10 qubits) and
  // one three-cell line summing to 6 (14 qubits). Ancillas start at zero and
  // must end there, which the single-amplitude check enforces.
  struct SumCase {
    int cells;
    std::vector<int> group;
    std::uint64_t target;
  };
  for (const SumCase& sum_case :
       {SumCase{2, {0, 1}, 3}, SumCase{3, {0, 1, 2}, 6}}) {
    const auto layout = qsearch::RegisterLayout::packed(sum_case.cells, 2);
    const GateList oracle = qsearch::assemble_sum_oracle(
        layout, {sum_case.group}, sum_case.target);
    const std::uint64_t primary = std::uint64_t{1}
                                  << layout.primary_width();
    for (std::uint64_t basis = 0; basis < primary && o.pass; ++basis) {
      std::uint64_t total = 0;
      for (int cell = 0; cell < sum_case.cells; ++cell) {
        total += (basis >> (2 * cell)) & 3u;
      }
      const int expected = total == sum_case.target ? -1 : 1;
      const BasisImage image = apply_to_basis(oracle, basis);
      o.require(image.single && image.index == basis &&
                    image.sign == expected,
                "sum oracle over " + std::to_string(sum_case.cells) +
                    " cells wrong at basis " + std::to_string(basis));
    }
  }

  o.detail =
      "index oracles q <= 5, adders and comparators w <= 4 exhaustive, "
      "2-bit sum oracles clean";
  return o;
}

Outcome criterion_simulator_invariants() {
  Outcome o;

  // Norm drift over 1e5 random gates on a 10-qubit register.
  std::mt19937_64 rng(7);
  StateVector state = qsearch::init(10, InitMode::padded());
  for (int step = 0; step < 100000; ++step) {
    const int target = static_cast<int>(rng() % 10);
    switch (rng() % 4) {
      case 0:
        qsearch::apply_gate(state, GateDescriptor::hadamard(target));
        break;
      case 1:
        qsearch::apply_gate(state, GateDescriptor::pauli_x(target));
        break;
      case 2:
        qsearch::apply_gate(state, GateDescriptor::pauli_z(target));
        break;
      default: {
        int control = static_cast<int>(rng() % 10);
        if (control == target) control = (control + 1) % 10;
        qsearch::apply_gate(state, GateDescriptor::controlled_x(
            target, {{control, rng() % 2 == 0}}));
        break;
      }
    }
  }
  const double drift = std::abs(qsearch::l2_norm(state) - 1.0);
  o.require(drift <= 1e-10, "norm drift " + std::to_string(drift));

  // H, X, Z self-inverse on every basis state for 1..4 qubits.
  for (int q = 1; q <= 4 && o.pass; ++q) {
    for (int target = 0; target < q; ++target) {
      for (std::uint64_t basis = 0;
           basis < (std::uint64_t{1} << q) && o.pass; ++basis) {
        for (int kind = 0; kind < 3; ++kind) {
          StateVector probe(q);
          probe.amplitudes[0] = 0.0;
          probe.amplitudes[basis] = 1.0;
          const GateDescriptor gate =
              kind == 0   ? GateDescriptor::hadamard(target)
              : kind == 1 ? GateDescriptor::pauli_x(target)
                          : GateDescriptor::pauli_z(target);
          qsearch::apply_gate(probe, gate);
          qsearch::apply_gate(probe, gate);
          bool identity = true;
          for (std::uint64_t i = 0; i < probe.amplitudes.size(); ++i) {
            const double want = i == basis ? 1.0 : 0.0;
            if (std::abs(probe.amplitudes[i].real() - want) > 1e-9 ||
                std::abs(probe.amplitudes[i].imag()) > 1e-9) {
              identity = false;
            }
          }
          o.require(identity, "involution broken for gate kind " +
                                  std::to_string(kind) + " on qubit " +
                                  std::to_string(target));
        }
      }
    }
  }

  // Compute followed by uncompute is the identity: 1000 random lists of
  // X/CX/CCX gates on 6 qubits, empty marking step.
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    GateList compute(6);
    const int gates = 1 + static_cast<int>(rng() % 12);
    for (int g = 0; g < gates; ++g) {
      const int target = static_cast<int>(rng() % 6);
      const int a = (target + 1 + static_cast<int>(rng() % 5)) % 6;
      int b = (target + 1 + static_cast<int>(rng() % 5)) % 6;
      if (b == a) b = (b + 1) % 6 == target ? (b + 2) % 6 : (b + 1) % 6;
      switch (rng() % 3) {
        case 0:
          compute.push_back(GateDescriptor::pauli_x(target));
          break;
        case 1:
          compute.push_back(GateDescriptor::controlled_x(
              target, {{a, true}}));
          break;
        default:
          compute.push_back(GateDescriptor::controlled_x(
              target, {{a, true}, {b, rng() % 2 == 0}}));
          break;
      }
    }
    const GateList sandwich =
        qsearch::with_uncompute(compute, GateList(6));
    const std::uint64_t basis = rng() % 64;
    const BasisImage image = apply_to_basis(sandwich, basis);
    o.require(image.single && image.index == basis && image.sign == 1,
              "uncompute identity broken at trial " + std::to_string(trial));
  }

  std::ostringstream detail;
  detail << "norm drift " << std::scientific << drift
         << " over 1e5 gates; involutions and 1000 uncompute trials clean";
  o.detail = detail.str();
  return o;
}

Outcome criterion_cross_method() {
  Outcome o;
  const qsearch::SearchResult brute = qsearch::brute_force(3, false);
  const qsearch::SearchResult tracked = qsearch::backtracking(3, false);
  o.require(brute.solutions.size() == 8 && tracked.solutions.size() == 8,
            "solution counts differ from 8");
  for (std::size_t i = 0; i < 8 && o.pass; ++i) {
    o.require(brute.solutions[i].cells == tracked.solutions[i].cells,
              "solution sets diverge at position " + std::to_string(i));
  }
  const qsearch::SearchResult first = qsearch::backtracking(3, true);
  o.require(first.solutions.size() == 1 &&
                first.stats.solutions_found == 1,
            "stop-at-first did not record exactly one solution");
  o.require(first.solutions.front().cells ==
                std::vector<int>{2, 7, 6, 9, 5, 1, 4, 3, 8},
            "backtracking first solution is not [2,7,6,9,5,1,4,3,8]");
  o.detail = "both methods agree on all 8 solutions";
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*check)();
};

constexpr std::array<Criterion, 12> kCriteria = {{
    {"magic constants", &criterion_magic_constants},
    {"siamese fidelity", &criterion_siamese},
    {"brute-force reproduction", &criterion_brute_force},
    {"rank consistency", &criterion_rank_consistency},
    {"iteration planning", &criterion_iteration_planning},
    {"game search probability", &criterion_game_search},
    {"full 3x3 constraint search", &criterion_full_search},
    {"reduced-domain search", &criterion_reduced_search},
    {"gate-level demo", &criterion_gate_demo},
    {"oracle equivalence", &criterion_oracle_equivalence},
    {"simulator invariants", &criterion_simulator_invariants},
    {"cross-method agreement", &criterion_cross_method},
}};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 12) {
      std::cerr << "usage: " << argv[0] << " [criterion 1..12]\n";
      return 2;
    }
  }

  bool all_pass = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only != 0 && number != only) continue;
    Outcome outcome;
    try {
      outcome = kCriteria[i].check();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && outcome.pass;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << number << ": " << kCriteria[i].name << " (" << outcome.detail
              << ")\n";
  }
  return all_pass ? 0 : 1;
}

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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsearch/errors.hpp"

namespace qsearch {

using Complex = std::complex<double>;

// Dense simulation stores 2^q amplitudes; 26 qubits is 1 GiB of state and the
// hard cap for this process.
inline constexpr int kMaxQubits = 26;

// Norm drift beyond this after a unitary step indicates a simulator bug, not
// rounding; callers treat it as a logic error.
inline constexpr double kNormTolerance = 1e-10;

enum class GateKind {
  Hadamard,
  PauliX,
  PauliZ,
  MultiControlledX,
  MultiControlledZ,
};

// A control condition on one qubit. positive=true fires on |1>, false on |0>
// (an "open" control, used instead of wrapping X gates where convenient).
struct ControlBit {
  int qubit = 0;
  bool positive = true;

  friend bool operator==(const ControlBit&, const ControlBit&) = default;
};

struct GateDescriptor {
  GateKind kind = GateKind::Hadamard;
  int target = 0;
  std::vector<ControlBit> controls;  // empty unless kind is MultiControlled*

  static GateDescriptor hadamard(int qubit) {
    return {GateKind::Hadamard, qubit, {}};
  }
  static GateDescriptor pauli_x(int qubit) {
    return {GateKind::PauliX, qubit, {}};
  }
  static GateDescriptor pauli_z(int qubit) {
    return {GateKind::PauliZ, qubit, {}};
  }
  static GateDescriptor controlled_x(int target,
                                     std::vector<ControlBit> controls) {
    return {GateKind::MultiControlledX, target, std::move(controls)};
  }
  static GateDescriptor controlled_z(int target,
                                     std::vector<ControlBit> controls) {
    return {GateKind::MultiControlledZ, target, std::move(controls)};
  }

  friend bool operator==(const GateDescriptor&, const GateDescriptor&) =
      default;
};

// How a register is prepared before amplitude amplification. Padded spreads
// amplitude over all 2^q basis states (plain H on every qubit). ExactDomain
// spreads it over the first N basis states only, so search spaces that are not
// powers of two (N = 25, 362880, ...) carry no dead amplitude.
struct InitMode {
  enum class Kind { Padded, ExactDomain };

  Kind kind = Kind::Padded;
  std::uint64_t domain_size = 0;  // meaningful for ExactDomain only

  static InitMode padded() { return {Kind::Padded, 0}; }
  static InitMode exact_domain(std::uint64_t n) {
    if (n == 0) throw std::domain_error("exact-domain init needs N >= 1");
    return {Kind::ExactDomain, n};
  }

  friend bool operator==(const InitMode&, const InitMode&) = default;
};

struct StateVector {
  int num_qubits = 0;
  std::vector<Complex> amplitudes;
  // Logical query counter: bumped once per phase-oracle application,
  // regardless of how many gates the oracle would compile to.
  std::uint64_t oracle_queries = 0;

  explicit StateVector(int qubits) : num_qubits(qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
      throw capacity_error("qubit count " + std::to_string(qubits) +
                           " outside supported range [1, " +
                           std::to_string(kMaxQubits) + "]");
    }
    amplitudes.assign(std::uint64_t{1} << qubits, Complex{0.0, 0.0});
    amplitudes[0] = Complex{1.0, 0.0};
  }

  std::uint64_t dimension() const { return amplitudes.size(); }
};

namespace detail {

inline void check_qubit_index(const StateVector& state, int qubit,
                              const char* role) {
  if (qubit < 0 || qubit >= state.num_qubits) {
    throw std::out_of_range(std::string(role) + " qubit " +
                            std::to_string(qubit) + " outside register of " +
                            std::to_string(state.num_qubits) + " qubits");
  }
}

struct ControlMask {
  std::uint64_t mask = 0;   // all control qubits
  std::uint64_t value = 0;  // required bit pattern under mask
};

inline ControlMask build_control_mask(const StateVector& state,
                                      const GateDescriptor& gate) {
  ControlMask cm;
  for (const ControlBit& c : gate.controls) {
    check_qubit_index(state, c.qubit, "control");
    if (c.qubit == gate.target) {
      throw std::domain_error("gate controls on its own target qubit");
    }
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    if (cm.mask & bit) {
      throw std::domain_error("duplicate control qubit " +
                              std::to_string(c.qubit));
    }
    cm.mask |= bit;
    if (c.positive) cm.value |= bit;
  }
  return cm;
}

}  // namespace detail

// Uniform superposition per the init mode. Exact-domain requires N <= 2^q.
inline StateVector init(int qubits, const InitMode& mode) {
  StateVector state(qubits);
  const std::uint64_t dim = state.dimension();
  if (mode.kind == InitMode::Kind::Padded) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    std::fill(state.amplitudes.begin(), state.amplitudes.end(),
              Complex{amp, 0.0});
    return state;
  }
  const std::uint64_t n = mode.domain_size;
  if (n < 1 || n > dim) {
    throw std::domain_error("exact-domain size " + std::to_string(n) +
                            " does not fit in " + std::to_string(qubits) +
                            " qubits");
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::fill(state.amplitudes.begin(), state.amplitudes.begin() + n,
            Complex{amp, 0.0});
  std::fill(state.amplitudes.begin() + n, state.amplitudes.end(),
            Complex{0.0, 0.0});
  return state;
}

inline void apply_gate(StateVector& state, const GateDescriptor& gate) {
  detail::check_qubit_index(state, gate.target, "target");
  if (gate.kind == GateKind::Hadamard || gate.kind == GateKind::PauliX ||
      gate.kind == GateKind::PauliZ) {
    if (!gate.controls.empty()) {
      throw std::domain_error("controls are only valid on MultiControlled gates");
    }
  }
  const detail::ControlMask cm = detail::build_control_mask(state, gate);
  const std::uint64_t tbit = std::uint64_t{1} << gate.target;
  const std::uint64_t dim = state.dimension();
  std::vector<Complex>& a = state.amplitudes;

  switch (gate.kind) {
    case GateKind::Hadamard: {
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::uint64_t group = 0; group < dim; group += tbit << 1) {
        for (std::uint64_t i = group; i < group + tbit; ++i) {
          const Complex lo = a[i];
          const Complex hi = a[i + tbit];
          a[i] = (lo + hi) * inv_sqrt2;
          a[i + tbit] = (lo - hi) * inv_sqrt2;
        }
      }
      break;
    }
    case GateKind::PauliX:
    case GateKind::MultiControlledX: {
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        if ((i & cm.mask) != cm.value) continue;
        std::swap(a[i], a[i | tbit]);
      }
      break;
    }
    case GateKind::PauliZ:
    case GateKind::MultiControlledZ: {
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & tbit) && (i & cm.mask) == cm.value) a[i] = -a[i];
      }
      break;
    }
  }
}

// Phase oracle over basis indices: flips the sign of every amplitude whose
// index satisfies the predicate. Counts as one logical query.
template <class Pred>
void apply_phase_oracle(StateVector& state, Pred&& marked) {
  const std::uint64_t dim = state.dimension();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (marked(i)) state.amplitudes[i] = -state.amplitudes[i];
  }
  ++state.oracle_queries;
}

// Diffusion step: reflection about the initial superposition |s>, realised as
// inversion about the mean. For exact-domain states the mean is taken over the
// N in-domain amplitudes and out-of-domain amplitudes are only negated, which
// equals 2|s><s| - I restricted to the chosen |s>.
inline void reflect_about_initial(StateVector& state, const InitMode& mode) {
  const std::uint64_t dim = state.dimension();
  std::vector<Complex>& a = state.amplitudes;
  const std::uint64_t n =
      mode.kind == InitMode::Kind::Padded ? dim : mode.domain_size;
  if (n < 1 || n > dim) {
    throw std::domain_error("reflection domain size " + std::to_string(n) +
                            " does not match state dimension " +
                            std::to_string(dim));
  }
  Complex sum{0.0, 0.0};
  for (std::uint64_t i = 0; i < n; ++i) sum += a[i];
  const Complex twice_mean = 2.0 * sum / static_cast<double>(n);
  for (std::uint64_t i = 0; i < n; ++i) a[i] = twice_mean - a[i];
  for (std::uint64_t i = n; i < dim; ++i) a[i] = -a[i];
}

template <class Pred>
double probability_of(const StateVector& state, Pred&& marked) {
  double p = 0.0;
  const std::uint64_t dim = state.dimension();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (marked(i)) p += std::norm(state.amplitudes[i]);
  }
  return p;
}

inline double l2_norm(const StateVector& state) {
  double s = 0.0;
  for (const Complex& c : state.amplitudes) s += std::norm(c);
  return std::sqrt(s);
}

// Basis index rendered most-significant qubit first, so with q = 3 the index
// 4 (qubit 2 set) reads "100".
inline std::string basis_label(std::uint64_t index, int qubits) {
  std::string label(static_cast<std::size_t>(qubits), '0');
  for (int q = 0; q < qubits; ++q) {
    if (index & (std::uint64_t{1} << q)) label[qubits - 1 - q] = '1';
  }
  return label;
}

namespace detail {

// 53-bit uniform in [0, 1). Written out instead of using a distribution
// adaptor because distribution output is implementation-defined and sampled
// outcomes must be reproducible from the seed alone.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t pick_index(const std::vector<Complex>& amplitudes,
                                double u) {
  double running = 0.0;
  const std::uint64_t dim = amplitudes.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    running += std::norm(amplitudes[i]);
    if (u < running) return i;
  }
  return dim - 1;  // u landed in the rounding residue past the last bucket
}

}  // namespace detail

// One projective measurement in the computational basis.
inline std::uint64_t sample_index(const StateVector& state,
                                  std::mt19937_64& rng) {
  return detail::pick_index(state.amplitudes, detail::uniform_unit(rng));
}

// Shots measurements from a fresh generator seeded as given; returns a
// histogram keyed by bitstring. Identical seed and state give an identical
// histogram on any platform (mt19937_64 output is fully specified).
inline std::map<std::string, std::uint64_t> sample(const StateVector& state,
                                                   std::uint64_t shots,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::string, std::uint64_t> histogram;
  const std::uint64_t dim = state.dimension();
  // Amortise the per-shot scan with prefix sums once shots dominate. Both
  // paths accumulate left to right, so they map any u to the same index.
  if (shots >= 64 && dim >= 2) {
    std::vector<double> prefix(dim);
    double running = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      running += std::norm(state.amplitudes[i]);
      prefix[i] = running;
    }
    for (std::uint64_t s = 0; s < shots; ++s) {
      const double u = detail::uniform_unit(rng);
      const auto it = std::upper_bound(prefix.begin(), prefix.end(), u);
      const std::uint64_t idx =
          it == prefix.end() ? dim - 1
                             : static_cast<std::uint64_t>(it - prefix.begin());
      ++histogram[basis_label(idx, state.num_qubits)];
    }
    return histogram;
  }
  for (std::uint64_t s = 0; s < shots; ++s) {
    ++histogram[basis_label(sample_index(state, rng), state.num_qubits)];
  }
  return histogram;
}

}  // namespace qsearch

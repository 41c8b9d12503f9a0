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

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsearch/statevector.hpp"

namespace qsearch {

struct QubitRange {
  int first = 0;
  int count = 0;

  friend bool operator==(const QubitRange&, const QubitRange&) = default;
};

// An ordered list of gates over a fixed-width register. Every supported gate
// kind is its own inverse, so inverting a list is reversal.
class GateList {
 public:
  GateList() = default;
  explicit GateList(int num_qubits, QubitRange ancillas = {})
      : num_qubits_(num_qubits), ancillas_(ancillas) {
    if (num_qubits < 1) {
      throw std::domain_error("gate list needs at least one qubit");
    }
  }

  int num_qubits() const { return num_qubits_; }
  QubitRange ancilla_range() const { return ancillas_; }
  void set_ancilla_range(QubitRange r) { ancillas_ = r; }
  const std::vector<GateDescriptor>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  void push_back(GateDescriptor gate) {
    check_index(gate.target, "target");
    // Estimation-only lists can span hundreds of qubits, so duplicate
    // detection cannot lean on a 64-bit mask here.
    std::set<int> seen;
    for (const ControlBit& c : gate.controls) {
      check_index(c.qubit, "control");
      if (c.qubit == gate.target) {
        throw std::domain_error("gate controls on its own target qubit");
      }
      if (!seen.insert(c.qubit).second) {
        throw std::domain_error("duplicate control qubit " +
                                std::to_string(c.qubit));
      }
    }
    gates_.push_back(std::move(gate));
  }

  // Appends another list acting on the same register (or a prefix of it).
  void append(const GateList& other) {
    if (other.num_qubits_ > num_qubits_) {
      throw std::domain_error("cannot append a wider gate list (" +
                              std::to_string(other.num_qubits_) + " > " +
                              std::to_string(num_qubits_) + " qubits)");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  }

  GateList inverse() const {
    GateList inv(num_qubits_, ancillas_);
    inv.gates_.assign(gates_.rbegin(), gates_.rend());
    return inv;
  }

  // One gate per line: "KIND target control+|control-...". Example:
  // "MCX 4 0+ 1+ 2-" is X on qubit 4 controlled on q0=1, q1=1, q2=0.
  std::string to_netlist() const {
    std::ostringstream out;
    for (const GateDescriptor& g : gates_) {
      switch (g.kind) {
        case GateKind::Hadamard: out << "H"; break;
        case GateKind::PauliX: out << "X"; break;
        case GateKind::PauliZ: out << "Z"; break;
        case GateKind::MultiControlledX: out << "MCX"; break;
        case GateKind::MultiControlledZ: out << "MCZ"; break;
      }
      out << ' ' << g.target;
      for (const ControlBit& c : g.controls) {
        out << ' ' << c.qubit << (c.positive ? '+' : '-');
      }
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const GateList& a, const GateList& b) {
    return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
  }

 private:
  void check_index(int qubit, const char* role) const {
    if (qubit < 0 || qubit >= num_qubits_) {
      throw std::out_of_range(std::string(role) + " qubit " +
                              std::to_string(qubit) + " outside register of " +
                              std::to_string(num_qubits_) + " qubits");
    }
  }

  int num_qubits_ = 1;
  std::vector<GateDescriptor> gates_;
  QubitRange ancillas_;
};

inline void run_gatelist(StateVector& state, const GateList& list) {
  if (list.num_qubits() != state.num_qubits) {
    throw std::domain_error("gate list width " +
                            std::to_string(list.num_qubits()) +
                            " does not match state width " +
                            std::to_string(state.num_qubits));
  }
  for (const GateDescriptor& g : list.gates()) apply_gate(state, g);
}

namespace detail {

inline int bit_length(std::uint64_t v) {
  int bits = 1;
  while (v >>= 1) ++bits;
  return bits;
}

inline void require_disjoint(const std::vector<const std::vector<int>*>& regs) {
  std::set<int> seen;
  for (const std::vector<int>* reg : regs) {
    for (int q : *reg) {
      if (!seen.insert(q).second) {
        throw std::domain_error("registers overlap on qubit " +
                                std::to_string(q));
      }
    }
  }
}

// In-place ripple-carry addition b += a (mod 2^|b|): forward carry chain,
// top-bit sum, then the mirrored sweep that clears every carry and finishes
// the per-bit sums. carry[i] is the carry into bit i+1 and must arrive (and
// leaves) in |0>. |a| may be narrower than |b|; missing high bits of a are
// treated as zero. No carry-out qubit, so the add wraps.
inline void append_ripple_add(GateList& list, const std::vector<int>& a,
                              const std::vector<int>& b,
                              const std::vector<int>& carry) {
  const int wa = static_cast<int>(a.size());
  const int wb = static_cast<int>(b.size());
  if (wa < 1 || wa > wb) {
    throw std::domain_error("adder needs 1 <= |a| <= |b|");
  }
  if (static_cast<int>(carry.size()) != wb - 1) {
    throw std::domain_error("adder needs exactly |b|-1 carry qubits");
  }
  require_disjoint({&a, &b, &carry});

  const auto cx = [&](int target, int control) {
    list.push_back(GateDescriptor::controlled_x(target, {{control, true}}));
  };
  const auto ccx = [&](int target, int c0, int c1) {
    list.push_back(
        GateDescriptor::controlled_x(target, {{c0, true}, {c1, true}}));
  };

  for (int i = 0; i < wb - 1; ++i) {
    if (i < wa) {
      ccx(carry[i], a[i], b[i]);
      cx(b[i], a[i]);
      if (i > 0) ccx(carry[i], carry[i - 1], b[i]);
    } else if (i > 0) {
      ccx(carry[i], carry[i - 1], b[i]);
    }
  }
  const int top = wb - 1;
  if (top < wa) cx(b[top], a[top]);
  if (top > 0) cx(b[top], carry[top - 1]);
  for (int i = wb - 2; i >= 0; --i) {
    if (i < wa) {
      if (i > 0) ccx(carry[i], carry[i - 1], b[i]);
      cx(b[i], a[i]);
      ccx(carry[i], a[i], b[i]);
      cx(b[i], a[i]);
      if (i > 0) cx(b[i], carry[i - 1]);
    } else {
      ccx(carry[i], carry[i - 1], b[i]);
      cx(b[i], carry[i - 1]);
    }
  }
}

// Flag ^= [register == constant]. The register is X-conjugated on the zero
// bits of the constant so a single all-positive MCX does the comparison.
inline void append_equality_flag(GateList& list, const std::vector<int>& reg,
                                 std::uint64_t constant, int flag) {
  const int w = static_cast<int>(reg.size());
  if (w < 1) throw std::domain_error("equality needs a non-empty register");
  if (w < 64 && constant >= (std::uint64_t{1} << w)) {
    throw std::domain_error("comparison constant " + std::to_string(constant) +
                            " does not fit in " + std::to_string(w) + " bits");
  }
  const std::vector<int> flag_reg = {flag};
  require_disjoint({&reg, &flag_reg});

  const auto conjugate = [&] {
    for (int i = 0; i < w; ++i) {
      if (((constant >> i) & 1u) == 0) {
        list.push_back(GateDescriptor::pauli_x(reg[i]));
      }
    }
  };
  conjugate();
  std::vector<ControlBit> controls;
  controls.reserve(w);
  for (int q : reg) controls.push_back({q, true});
  list.push_back(GateDescriptor::controlled_x(flag, std::move(controls)));
  conjugate();
}

}  // namespace detail

// |a>|b>|0..0> -> |a>|a+b mod 2^w>|0..0> with a in [0,w), b in [w,2w) and
// w-1 carry ancillas in [2w, 3w-1).
inline GateList build_adder(int width) {
  if (width < 1 || width > 8) {
    throw std::domain_error("adder width " + std::to_string(width) +
                            " outside supported range [1, 8]");
  }
  std::vector<int> a, b, carry;
  for (int i = 0; i < width; ++i) a.push_back(i);
  for (int i = 0; i < width; ++i) b.push_back(width + i);
  for (int i = 0; i + 1 < width; ++i) carry.push_back(2 * width + i);
  GateList list(3 * width - 1, {2 * width, width - 1});
  detail::append_ripple_add(list, a, b, carry);
  return list;
}

// |b>|0..0> -> |b + constant mod 2^w>|0..0>. The constant is loaded into a
// scratch register with X gates, added, then unloaded, so qubits [w, 3w-1)
// are all ancillas.
inline GateList build_add_constant(int width, std::uint64_t constant) {
  if (width < 1 || width > 8) {
    throw std::domain_error("adder width " + std::to_string(width) +
                            " outside supported range [1, 8]");
  }
  if (constant >= (std::uint64_t{1} << width)) {
    throw std::domain_error("constant " + std::to_string(constant) +
                            " does not fit in " + std::to_string(width) +
                            " bits");
  }
  std::vector<int> b, scratch, carry;
  for (int i = 0; i < width; ++i) b.push_back(i);
  for (int i = 0; i < width; ++i) scratch.push_back(width + i);
  for (int i = 0; i + 1 < width; ++i) carry.push_back(2 * width + i);
  GateList list(3 * width - 1, {width, 2 * width - 1});

  const auto load = [&] {
    for (int i = 0; i < width; ++i) {
      if ((constant >> i) & 1u) {
        list.push_back(GateDescriptor::pauli_x(scratch[i]));
      }
    }
  };
  load();
  detail::append_ripple_add(list, scratch, b, carry);
  load();
  return list;
}

// |r>|f> -> |r>|f XOR [r == constant]> with the register in [0,w) and the
// flag on qubit w. The register is restored bit-for-bit.
inline GateList build_equality_flag(int width, std::uint64_t constant) {
  if (width < 1 || width > 21) {
    throw std::domain_error("comparison width " + std::to_string(width) +
                            " outside supported range [1, 21]");
  }
  std::vector<int> reg;
  for (int i = 0; i < width; ++i) reg.push_back(i);
  GateList list(width + 1);
  detail::append_equality_flag(list, reg, constant, width);
  return list;
}

// compute ; mark ; compute^-1. The mark block may act on a prefix of the
// compute register. Every ancilla the compute block dirties is returned to
// |0> by the mirrored block, which is what makes phase marks composable.
inline GateList with_uncompute(const GateList& compute, const GateList& mark) {
  if (mark.num_qubits() > compute.num_qubits()) {
    throw std::domain_error(
        "mark block is wider than the compute block it is sandwiched in");
  }
  GateList list(compute.num_qubits(), compute.ancilla_range());
  list.append(compute);
  list.append(mark);
  list.append(compute.inverse());
  return list;
}

// Phase-flips exactly the basis state |index> on q qubits: X-conjugation on
// the zero bits of the index around one multi-controlled Z.
inline GateList assemble_index_oracle(int qubits, std::uint64_t index) {
  if (qubits < 1 || qubits > 12) {
    throw std::domain_error("index oracle supports 1 to 12 qubits");
  }
  if (index >= (std::uint64_t{1} << qubits)) {
    throw std::out_of_range("marked index " + std::to_string(index) +
                            " outside " + std::to_string(qubits) +
                            "-qubit register");
  }
  GateList list(qubits);
  const auto conjugate = [&] {
    for (int q = 0; q < qubits; ++q) {
      if (((index >> q) & 1u) == 0) {
        list.push_back(GateDescriptor::pauli_x(q));
      }
    }
  };
  conjugate();
  if (qubits == 1) {
    list.push_back(GateDescriptor::pauli_z(0));
  } else {
    std::vector<ControlBit> controls;
    for (int q = 1; q < qubits; ++q) controls.push_back({q, true});
    list.push_back(GateDescriptor::controlled_z(0, std::move(controls)));
  }
  conjugate();
  return list;
}

// Fixed-width cell registers packed little-endian: cell c occupies qubits
// [c*bits, (c+1)*bits).
struct RegisterLayout {
  int cell_count = 0;
  int bits_per_cell = 0;

  static RegisterLayout packed(int cells, int bits) {
    if (cells < 1 || bits < 1) {
      throw std::domain_error("layout needs at least one cell and one bit");
    }
    return {cells, bits};
  }

  // n*n cells holding offset values 0..n^2-1 (cell value minus one), so the
  // width is bit_length(n^2 - 1) bits per cell.
  static RegisterLayout for_grid(int order) {
    if (order < 2) throw std::domain_error("grid layout needs order >= 2");
    const int cells = order * order;
    return {cells, detail::bit_length(static_cast<std::uint64_t>(cells - 1))};
  }

  int primary_width() const { return cell_count * bits_per_cell; }
  int cell_offset(int cell) const { return cell * bits_per_cell; }
};

namespace detail {

struct SumOracleParts {
  GateList list;           // full compute;mark;uncompute sandwich
  int sum_width = 0;
  int total_qubits = 0;
};

inline SumOracleParts assemble_sum_oracle_impl(
    const RegisterLayout& layout, const std::vector<std::vector<int>>& groups,
    std::uint64_t target) {
  if (groups.empty()) throw std::domain_error("sum oracle needs >= 1 group");
  std::size_t largest = 0;
  for (const std::vector<int>& group : groups) {
    if (group.empty()) throw std::domain_error("empty constraint group");
    std::set<int> seen;
    for (int cell : group) {
      if (cell < 0 || cell >= layout.cell_count) {
        throw std::out_of_range("cell index " + std::to_string(cell) +
                                " outside layout of " +
                                std::to_string(layout.cell_count) + " cells");
      }
      if (!seen.insert(cell).second) {
        throw std::domain_error("cell " + std::to_string(cell) +
                                " repeated within a constraint group");
      }
    }
    largest = std::max(largest, group.size());
  }
  const std::uint64_t max_cell =
      (std::uint64_t{1} << layout.bits_per_cell) - 1;
  const std::uint64_t max_sum = largest * max_cell;
  if (target > max_sum) {
    throw std::domain_error("target sum " + std::to_string(target) +
                            " unreachable: largest group sums to at most " +
                            std::to_string(max_sum));
  }
  // Sized for the worst-case group sum so the running total never wraps.
  const int sum_width = bit_length(max_sum);

  const int primary = layout.primary_width();
  const int sum_base = primary;
  const int carry_base = sum_base + sum_width;
  const int flag_base = carry_base + (sum_width - 1);
  const int total =
      flag_base + static_cast<int>(groups.size());

  std::vector<int> sum_reg, carry_reg;
  for (int i = 0; i < sum_width; ++i) sum_reg.push_back(sum_base + i);
  for (int i = 0; i + 1 < sum_width; ++i) carry_reg.push_back(carry_base + i);

  GateList compute(total, {primary, total - primary});
  for (std::size_t g = 0; g < groups.size(); ++g) {
    // One shared sum register: accumulate the group, compare, then run the
    // adds backwards so the next group starts from zero again.
    GateList adds(total);
    for (int cell : groups[g]) {
      std::vector<int> cell_reg;
      for (int i = 0; i < layout.bits_per_cell; ++i) {
        cell_reg.push_back(layout.cell_offset(cell) + i);
      }
      append_ripple_add(adds, cell_reg, sum_reg, carry_reg);
    }
    compute.append(adds);
    append_equality_flag(compute, sum_reg, target,
                         flag_base + static_cast<int>(g));
    compute.append(adds.inverse());
  }

  GateList mark(total);
  if (groups.size() == 1) {
    mark.push_back(GateDescriptor::pauli_z(flag_base));
  } else {
    std::vector<ControlBit> controls;
    for (std::size_t g = 1; g < groups.size(); ++g) {
      controls.push_back({flag_base + static_cast<int>(g), true});
    }
    mark.push_back(GateDescriptor::controlled_z(flag_base, std::move(controls)));
  }

  SumOracleParts parts{with_uncompute(compute, mark), sum_width, total};
  parts.list.set_ancilla_range({primary, total - primary});
  return parts;
}

}  // namespace detail

// Phase oracle for "every listed group of cells sums to target". Cells live
// in the packed layout; the sum register, its carries, and one flag per group
// are appended above the primary register and all end in |0> again. Capped at
// 22 qubits total so the result stays simulatable with headroom.
inline GateList assemble_sum_oracle(const RegisterLayout& layout,
                                    const std::vector<std::vector<int>>& groups,
                                    std::uint64_t target) {
  detail::SumOracleParts parts =
      detail::assemble_sum_oracle_impl(layout, groups, target);
  if (parts.total_qubits > 22) {
    throw capacity_error("sum oracle needs " +
                         std::to_string(parts.total_qubits) +
                         " qubits; widths above 22 are not simulated");
  }
  return parts.list;
}

struct ResourceEstimate {
  int primary_qubits = 0;
  int ancilla_qubits = 0;
  std::int64_t gate_count = 0;
  std::int64_t multi_controlled_count = 0;  // gates with >= 2 controls
  std::int64_t decomposed_gate_count = 0;   // elementary-gate estimate
  std::string notes;
};

namespace detail {

// Elementary (one- and two-qubit) gate estimate. A Toffoli costs 15, a gate
// with c >= 2 controls uses a chain of 2c-3 Toffolis, a multi-controlled Z is
// the X version conjugated by two Hadamards, and each negative control adds
// an X pair.
inline std::int64_t elementary_gate_estimate(const GateDescriptor& g) {
  const std::int64_t c = static_cast<std::int64_t>(g.controls.size());
  std::int64_t negatives = 0;
  for (const ControlBit& bit : g.controls) {
    if (!bit.positive) negatives += 2;
  }
  if (g.kind == GateKind::Hadamard || g.kind == GateKind::PauliX ||
      g.kind == GateKind::PauliZ) {
    return 1;
  }
  std::int64_t base = c <= 1 ? 1 : 15 * (2 * c - 3);
  if (g.kind == GateKind::MultiControlledZ && c >= 2) base += 2;
  return base + negatives;
}

}  // namespace detail

// Cost of the full magic-square constraint oracle for an n x n grid: all n
// rows, n columns, and both diagonals compared against the magic constant.
// Cells are assumed to hold value-1 (offset encoding), so lines compare
// against M - n and n^2 values pack into bit_length(n^2 - 1) bits. This
// assembles the complete gate list without the simulation width cap; it
// never executes it.
inline ResourceEstimate oracle_resources(int grid_order) {
  if (grid_order < 2 || grid_order > 10) {
    throw std::domain_error("resource estimate supports orders 2 through 10");
  }
  const int n = grid_order;
  const RegisterLayout layout = RegisterLayout::for_grid(n);

  std::vector<std::vector<int>> groups;
  for (int r = 0; r < n; ++r) {
    std::vector<int> row;
    for (int c = 0; c < n; ++c) row.push_back(r * n + c);
    groups.push_back(std::move(row));
  }
  for (int c = 0; c < n; ++c) {
    std::vector<int> col;
    for (int r = 0; r < n; ++r) col.push_back(r * n + c);
    groups.push_back(std::move(col));
  }
  std::vector<int> diag, anti;
  for (int i = 0; i < n; ++i) {
    diag.push_back(i * n + i);
    anti.push_back(i * n + (n - 1 - i));
  }
  groups.push_back(std::move(diag));
  groups.push_back(std::move(anti));

  const std::uint64_t magic_sum =
      static_cast<std::uint64_t>(n) * (n * n + 1) / 2;
  const std::uint64_t offset_target = magic_sum - static_cast<std::uint64_t>(n);

  const detail::SumOracleParts parts =
      detail::assemble_sum_oracle_impl(layout, groups, offset_target);

  ResourceEstimate est;
  est.primary_qubits = layout.primary_width();
  est.ancilla_qubits = parts.total_qubits - layout.primary_width();
  est.gate_count = static_cast<std::int64_t>(parts.list.size());
  for (const GateDescriptor& g : parts.list.gates()) {
    if (g.controls.size() >= 2) ++est.multi_controlled_count;
    est.decomposed_gate_count += detail::elementary_gate_estimate(g);
  }

  std::ostringstream notes;
  notes << "offset encoding: cells hold value-1 in " << layout.bits_per_cell
        << " bits, lines compare against " << offset_target
        << " (M - n); decomposition assumes Toffoli = 15 elementary gates, "
           "k-controlled gates use a 2k-3 Toffoli chain, negative controls "
           "add an X pair";
  if (n == 3) {
    notes << "; widths near 30 qubits are sometimes quoted for this oracle "
             "via tighter encodings, but this cell-register layout needs "
          << est.primary_qubits << " primary qubits before ancillas";
  }
  notes << "; total width " << parts.total_qubits
        << (parts.total_qubits <= kMaxQubits ? " fits within the "
                                             : " exceeds the ")
        << kMaxQubits << "-qubit dense simulation cap";
  est.notes = notes.str();
  return est;
}

// The three-qubit walkthrough circuit: H everywhere, Z on the top qubit, H
// everywhere again. Net effect is X on qubit 2, so measurement always reads
// "100".
inline GateList build_demo_circuit() {
  GateList list(3);
  for (int q = 0; q < 3; ++q) list.push_back(GateDescriptor::hadamard(q));
  list.push_back(GateDescriptor::pauli_z(2));
  for (int q = 0; q < 3; ++q) list.push_back(GateDescriptor::hadamard(q));
  return list;
}

}  // namespace qsearch

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
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsearch/domain.hpp"
#include "qsearch/errors.hpp"

namespace qsearch {

// Row-major n x n grid of the values 1..n^2 (when well-formed; the struct
// itself does not enforce it so partial and malformed grids can be passed to
// the total predicate below).
struct MagicGrid {
  int order = 0;
  std::vector<int> cells;

  int at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * order + col];
  }

  friend bool operator==(const MagicGrid&, const MagicGrid&) = default;
};

inline int magic_constant(int order) {
  if (order < 1) throw std::domain_error("magic constant needs order >= 1");
  return order * (order * order + 1) / 2;
}

// Total predicate: false (never a throw) for malformed grids, non-permutation
// fillings, or any line off the magic constant. Checks all n rows, n columns,
// and both diagonals.
inline bool is_magic(const MagicGrid& grid) {
  const int n = grid.order;
  if (n < 1) return false;
  const std::size_t cell_count = static_cast<std::size_t>(n) * n;
  if (grid.cells.size() != cell_count) return false;
  std::vector<bool> seen(cell_count + 1, false);
  for (int v : grid.cells) {
    if (v < 1 || v > static_cast<int>(cell_count) || seen[v]) return false;
    seen[v] = true;
  }
  const int m = magic_constant(n);
  for (int r = 0; r < n; ++r) {
    int sum = 0;
    for (int c = 0; c < n; ++c) sum += grid.at(r, c);
    if (sum != m) return false;
  }
  for (int c = 0; c < n; ++c) {
    int sum = 0;
    for (int r = 0; r < n; ++r) sum += grid.at(r, c);
    if (sum != m) return false;
  }
  int diag = 0, anti = 0;
  for (int i = 0; i < n; ++i) {
    diag += grid.at(i, i);
    anti += grid.at(i, n - 1 - i);
  }
  return diag == m && anti == m;
}

// De la Loubere construction: start in the top-row centre, walk up-right with
// wraparound, drop one row when blocked. Odd orders only.
inline MagicGrid siamese(int order) {
  if (order < 1 || order % 2 == 0 || order > 99) {
    throw std::domain_error("siamese construction needs an odd order in [1, 99]");
  }
  MagicGrid grid{order, std::vector<int>(static_cast<std::size_t>(order) * order, 0)};
  int row = 0;
  int col = order / 2;
  for (int v = 1; v <= order * order; ++v) {
    grid.cells[static_cast<std::size_t>(row) * order + col] = v;
    const int up = (row + order - 1) % order;
    const int right = (col + 1) % order;
    if (grid.cells[static_cast<std::size_t>(up) * order + right] == 0) {
      row = up;
      col = right;
    } else {
      row = (row + 1) % order;
    }
  }
  return grid;
}

struct SearchStats {
  std::uint64_t candidates_checked = 0;  // full grids tested (brute force)
  std::uint64_t nodes_visited = 0;       // placements attempted (backtracking)
  std::uint64_t solutions_found = 0;
  double elapsed_seconds = 0.0;
};

struct SearchResult {
  std::vector<MagicGrid> solutions;
  SearchStats stats;
};

// Polled between batches of work; return true to stop early with whatever
// has been found so far.
using CancelCheck = std::function<bool()>;

// Lexicographic enumeration of all (n^2)! fillings. The candidate counter and
// the lexicographic ranks below agree: the first 3x3 solution is candidate
// number rank+1.
inline SearchResult brute_force(int order, bool stop_at_first,
                                const CancelCheck& cancelled = {}) {
  if (order < 1) throw std::domain_error("search needs order >= 1");
  if (order > 3) {
    throw capacity_error(
        "brute force over order " + std::to_string(order) +
        " would enumerate 16! = 20,922,789,888,000 or more candidates; "
        "orders above 3 are not enumerable here");
  }
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  MagicGrid grid{order, std::vector<int>(static_cast<std::size_t>(order) * order)};
  std::iota(grid.cells.begin(), grid.cells.end(), 1);
  bool more = true;
  while (more) {
    ++result.stats.candidates_checked;
    if (is_magic(grid)) {
      ++result.stats.solutions_found;
      result.solutions.push_back(grid);
      if (stop_at_first) break;
    }
    if (cancelled && result.stats.candidates_checked % 4096 == 0 &&
        cancelled()) {
      break;
    }
    more = std::next_permutation(grid.cells.begin(), grid.cells.end());
  }
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

namespace detail {

struct BacktrackState {
  int n = 0;
  int target = 0;
  MagicGrid grid;
  std::vector<bool> used;
  SearchResult* result = nullptr;
  bool stop_at_first = false;
  const CancelCheck* cancelled = nullptr;
  bool stopped = false;
};

// Sum of the k largest values not yet placed anywhere in the grid.
inline int best_remaining(const BacktrackState& st, int k) {
  int sum = 0;
  for (int v = st.n * st.n; v >= 1 && k > 0; --v) {
    if (!st.used[v]) {
      sum += v;
      --k;
    }
  }
  return sum;
}

// Feasibility of the lines touching the cell just placed at (row, col):
// a completed line must hit the target exactly; a partial line is abandoned
// if it already exceeds the target or cannot reach it even with the largest
// values still unplaced.
inline bool lines_feasible(const BacktrackState& st, int row, int col) {
  const int n = st.n;
  const auto check = [&](int sum, int placed) {
    const int missing = n - placed;
    if (missing == 0) return sum == st.target;
    if (sum > st.target) return false;
    return sum + best_remaining(st, missing) >= st.target;
  };

  int sum = 0;
  for (int c = 0; c <= col; ++c) sum += st.grid.at(row, c);
  if (!check(sum, col + 1)) return false;

  sum = 0;
  for (int r = 0; r <= row; ++r) sum += st.grid.at(r, col);
  if (!check(sum, row + 1)) return false;

  if (row == col) {
    sum = 0;
    for (int i = 0; i <= row; ++i) sum += st.grid.at(i, i);
    if (!check(sum, row + 1)) return false;
  }
  if (col == n - 1 - row) {
    // Anti-diagonal fills top-right first; in row-major placement order the
    // cell (r, n-1-r) is reached once rows 0..r all have their entry.
    sum = 0;
    for (int i = 0; i <= row; ++i) sum += st.grid.at(i, n - 1 - i);
    if (!check(sum, row + 1)) return false;
  }
  return true;
}

inline void backtrack_place(BacktrackState& st, int pos) {
  if (st.stopped) return;
  const int n = st.n;
  if (pos == n * n) {
    ++st.result->stats.solutions_found;
    st.result->solutions.push_back(st.grid);
    if (st.stop_at_first) st.stopped = true;
    return;
  }
  const int row = pos / n;
  const int col = pos % n;
  for (int v = 1; v <= n * n; ++v) {
    if (st.used[v]) continue;
    ++st.result->stats.nodes_visited;
    // Polled often enough that even a 3x3 search (a few thousand nodes)
    // remains interruptible.
    if (st.cancelled && *st.cancelled &&
        st.result->stats.nodes_visited % 1024 == 0 && (*st.cancelled)()) {
      st.stopped = true;
      return;
    }
    st.grid.cells[pos] = v;
    st.used[v] = true;
    if (lines_feasible(st, row, col)) {
      backtrack_place(st, pos + 1);
    }
    st.used[v] = false;
    st.grid.cells[pos] = 0;
    if (st.stopped) return;
  }
}

}  // namespace detail

// Depth-first placement in row-major order with line pruning. Visits values
// in ascending order, so solutions come out in the same lexicographic order
// the brute force finds them.
inline SearchResult backtracking(int order, bool stop_at_first,
                                 const CancelCheck& cancelled = {}) {
  if (order < 1) throw std::domain_error("search needs order >= 1");
  if (order > 4) {
    throw capacity_error("backtracking supports orders up to 4; order " +
                         std::to_string(order) + " was requested");
  }
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  detail::BacktrackState st;
  st.n = order;
  st.target = magic_constant(order);
  st.grid = MagicGrid{order, std::vector<int>(static_cast<std::size_t>(order) * order, 0)};
  st.used.assign(static_cast<std::size_t>(order) * order + 1, false);
  st.result = &result;
  st.stop_at_first = stop_at_first;
  st.cancelled = &cancelled;
  detail::backtrack_place(st, 0);
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

namespace detail {

inline const std::vector<std::uint64_t>& factorial_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t(21, 1);
    for (std::uint64_t i = 1; i <= 20; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

// Lehmer rank of seq within the permutations of pool (sorted ascending),
// counting from zero in lexicographic order.
inline std::uint64_t lehmer_rank(const std::vector<int>& seq,
                                 std::vector<int> pool) {
  const std::size_t k = pool.size();
  if (seq.size() != k) throw std::domain_error("sequence/pool size mismatch");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto it = std::find(pool.begin(), pool.end(), seq[i]);
    if (it == pool.end()) {
      throw std::domain_error("value " + std::to_string(seq[i]) +
                              " is not available for this permutation");
    }
    rank += static_cast<std::uint64_t>(it - pool.begin()) *
            factorial_table()[k - 1 - i];
    pool.erase(it);
  }
  return rank;
}

inline std::vector<int> lehmer_unrank(std::uint64_t rank,
                                      std::vector<int> pool) {
  const std::size_t k = pool.size();
  if (rank >= factorial_table()[k]) {
    throw std::out_of_range("rank " + std::to_string(rank) + " outside the " +
                            std::to_string(k) + "! permutations");
  }
  std::vector<int> seq;
  seq.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t f = factorial_table()[k - 1 - i];
    const std::uint64_t digit = rank / f;
    rank %= f;
    seq.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return seq;
}

}  // namespace detail

// Zero-based lexicographic rank among permutations of 1..m. The identity
// permutation ranks 0. Lengths above 20 overflow 64-bit factorials.
inline std::uint64_t permutation_rank(const std::vector<int>& perm) {
  const std::size_t m = perm.size();
  if (m < 1) throw std::domain_error("rank of an empty permutation");
  if (m > 20) {
    throw capacity_error("permutation length " + std::to_string(m) +
                         " exceeds 20; the rank would overflow 64 bits");
  }
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 1);
  return detail::lehmer_rank(perm, std::move(pool));
}

inline std::vector<int> permutation_unrank(std::uint64_t rank, int length) {
  if (length < 1) throw std::domain_error("unrank needs length >= 1");
  if (length > 20) {
    throw capacity_error("permutation length " + std::to_string(length) +
                         " exceeds 20; ranks would overflow 64 bits");
  }
  if (rank >= detail::factorial_table()[length]) {
    throw std::out_of_range("rank " + std::to_string(rank) +
                            " outside the " + std::to_string(length) +
                            "! permutations");
  }
  std::vector<int> pool(length);
  std::iota(pool.begin(), pool.end(), 1);
  return detail::lehmer_unrank(rank, std::move(pool));
}

namespace detail {

inline int index_width(std::uint64_t size) {
  int width = 1;
  while ((std::uint64_t{1} << width) < size) ++width;
  return width;
}

}  // namespace detail

// All (n^2)! fillings of the grid, indexed in lexicographic permutation
// order. Exists up to n = 4 (16! fits in 64 bits; the 45-qubit index width is
// a property of the domain, not a promise it can be simulated).
inline Domain<MagicGrid> full_permutation_domain(int order) {
  if (order < 1) throw std::domain_error("domain needs order >= 1");
  const int m = order * order;
  if (m > 20) {
    throw capacity_error("(n^2)! for order " + std::to_string(order) +
                         " overflows 64-bit candidate indices; orders above 4 "
                         "have no dense index domain");
  }
  Domain<MagicGrid> domain;
  domain.size = detail::factorial_table()[m];
  domain.qubit_width = detail::index_width(domain.size);
  domain.label = "full-permutation";
  domain.decode = [order, m](std::uint64_t index) {
    return MagicGrid{order, permutation_unrank(index, m)};
  };
  domain.encode = [order, m](const MagicGrid& grid) {
    if (grid.order != order || grid.cells.size() != static_cast<std::size_t>(m)) {
      throw std::domain_error("grid shape does not match this domain");
    }
    return permutation_rank(grid.cells);
  };
  return domain;
}

// Permutations with the centre cell pinned to (n^2+1)/2, shrinking the space
// from (n^2)! to (n^2-1)!. Odd orders only (even grids have no centre cell);
// every known solution symmetry class for odd n keeps the middle value there,
// so for n = 3 all eight solutions survive the reduction.
inline Domain<MagicGrid> reduce_domain(int order) {
  if (order < 1 || order % 2 == 0) {
    throw std::domain_error("centre-fixed reduction needs an odd order");
  }
  const int m = order * order;
  if (m - 1 > 20) {
    throw capacity_error("(n^2-1)! for order " + std::to_string(order) +
                         " overflows 64-bit candidate indices; the reduction "
                         "is only indexable up to order 4");
  }
  const int centre_value = (m + 1) / 2;
  const int centre_cell = (m - 1) / 2;
  std::vector<int> pool;
  for (int v = 1; v <= m; ++v) {
    if (v != centre_value) pool.push_back(v);
  }

  Domain<MagicGrid> domain;
  domain.size = detail::factorial_table()[m - 1];
  domain.qubit_width = detail::index_width(domain.size);
  domain.label = "centre-fixed";
  domain.decode = [order, centre_value, centre_cell, pool](std::uint64_t index) {
    std::vector<int> cells = detail::lehmer_unrank(index, pool);
    cells.insert(cells.begin() + centre_cell, centre_value);
    return MagicGrid{order, std::move(cells)};
  };
  domain.encode = [order, m, centre_value, centre_cell, pool](const MagicGrid& grid) {
    if (grid.order != order || grid.cells.size() != static_cast<std::size_t>(m)) {
      throw std::domain_error("grid shape does not match this domain");
    }
    if (grid.cells[centre_cell] != centre_value) {
      throw std::domain_error("grid keeps " +
                              std::to_string(grid.cells[centre_cell]) +
                              " in the centre; this domain pins " +
                              std::to_string(centre_value) + " there");
    }
    std::vector<int> rest = grid.cells;
    rest.erase(rest.begin() + centre_cell);
    return detail::lehmer_rank(rest, pool);
  };
  return domain;
}

// Plain text transport: first line the order, then one space-separated row
// per line. Shape is validated on read; values are not (partial grids and
// non-solutions serialize fine).
inline std::string to_text(const MagicGrid& grid) {
  if (grid.order < 1 ||
      grid.cells.size() != static_cast<std::size_t>(grid.order) * grid.order) {
    throw std::domain_error("cannot serialize a malformed grid");
  }
  std::ostringstream out;
  out << grid.order << '\n';
  for (int r = 0; r < grid.order; ++r) {
    for (int c = 0; c < grid.order; ++c) {
      if (c) out << ' ';
      out << grid.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

inline MagicGrid grid_from_text(const std::string& text) {
  std::istringstream in(text);
  int order = 0;
  if (!(in >> order) || order < 1) {
    throw std::invalid_argument("grid text must start with a positive order");
  }
  MagicGrid grid{order, {}};
  grid.cells.reserve(static_cast<std::size_t>(order) * order);
  int value = 0;
  for (int i = 0; i < order * order; ++i) {
    if (!(in >> value)) {
      throw std::invalid_argument("grid text ends after " +
                                  std::to_string(i) + " of " +
                                  std::to_string(order * order) + " cells");
    }
    grid.cells.push_back(value);
  }
  std::string trailing;
  if (in >> trailing) {
    throw std::invalid_argument("unexpected trailing token '" + trailing +
                                "' in grid text");
  }
  return grid;
}

}  // namespace qsearch

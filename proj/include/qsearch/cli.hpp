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
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsearch/bench.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/magic.hpp"
#include "qsearch/revcircuit.hpp"

namespace qsearch::cli {

struct CliConfig {
  std::uint64_t seed = 0;
  int shots = 1024;
  InitMode::Kind init_mode = InitMode::Kind::ExactDomain;
  std::optional<int> iterations_override;
  bench::ReportFormat report_format = bench::ReportFormat::Markdown;
  std::optional<std::string> output_path;
};

namespace detail {

// Bracketed matrix with right-aligned entries, one row per line:
// [[17 24  1  8 15]
//  [23  5  7 14 16]
//  ...
inline std::string matrix_text(const MagicGrid& grid) {
  const int n = grid.order;
  int width = 1;
  for (int v = n * n; v >= 10; v /= 10) ++width;
  std::ostringstream out;
  for (int r = 0; r < n; ++r) {
    out << (r == 0 ? "[[" : " [");
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << std::setw(width) << grid.at(r, c);
    }
    out << (r == n - 1 ? "]]" : "]") << '\n';
  }
  return out.str();
}

inline std::string counts_text(
    const std::map<std::string, std::uint64_t>& histogram) {
  std::string out = "{";
  bool first = true;
  for (const auto& [label, count] : histogram) {
    if (!first) out += ", ";
    first = false;
    out += "'" + label + "': " + std::to_string(count);
  }
  return out + "}";
}

inline InitMode make_init(InitMode::Kind kind, std::uint64_t domain_size) {
  return kind == InitMode::Kind::ExactDomain
             ? InitMode::exact_domain(domain_size)
             : InitMode::padded();
}

inline int resolve_iterations(const CliConfig& config, std::uint64_t n,
                              std::uint64_t m) {
  if (!config.iterations_override) return grover::optimal_iterations(n, m);
  const int k = *config.iterations_override;
  if (k < 0 || k > 1000000) {
    throw std::domain_error("iteration override must lie in [0, 1000000]");
  }
  return k;
}

// Reads one whole line and parses it as an integer in [lo, hi], re-prompting
// until it fits. Returns nothing once the input stream runs out.
inline std::optional<int> prompt_int(std::istream& in, std::ostream& out,
                                     const std::string& prompt, int lo,
                                     int hi) {
  for (;;) {
    out << prompt << std::flush;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    try {
      std::size_t used = 0;
      const int value = std::stoi(line, &used);
      while (used < line.size() &&
             (line[used] == ' ' || line[used] == '\t' || line[used] == '\r')) {
        ++used;
      }
      if (used == line.size() && value >= lo && value <= hi) return value;
    } catch (const std::exception&) {
    }
    out << "Please enter a number between " << lo << " and " << hi << ".\n";
  }
}

inline bool answered_yes(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == 'y' || c == 'Y';
  }
  return false;
}

inline int cmd_game(int size, const CliConfig& config, std::istream& in,
                    std::ostream& out) {
  if (size < 3 || size > 15 || size % 2 == 0) {
    throw std::domain_error(
        "the game needs an odd board size between 3 and 15");
  }
  const MagicGrid board = siamese(size);
  const std::uint64_t cells = static_cast<std::uint64_t>(size) * size;
  const Domain<std::uint64_t> domain = index_domain(cells, "cell index");

  out << "===== MAGIC SQUARE GAME (Quantum Edition) =====\n\n";
  out << "Generated Magic Square:\n" << matrix_text(board) << '\n';
  out << "Board has " << cells << " cells → using " << domain.qubit_width
      << " qubits\n\n";

  for (std::uint64_t round = 0;; ++round) {
    out << "YOUR TURN:\n";
    const std::optional<int> row = prompt_int(
        in, out, "Enter row (0 to " + std::to_string(size - 1) + "): ", 0,
        size - 1);
    if (!row) break;
    const std::optional<int> col = prompt_int(
        in, out, "Enter column (0 to " + std::to_string(size - 1) + "): ", 0,
        size - 1);
    if (!col) break;

    const int target = board.at(*row, *col);
    const auto holds_target = [&board, target](std::uint64_t index) {
      return board.cells[static_cast<std::size_t>(index)] == target;
    };
    const int iterations = resolve_iterations(config, cells, 1);
    out << "\nGrover will search for value: " << target << '\n';
    out << "Grover iterations = " << iterations << "\n\n";

    // The measured state misses the marked cell with small probability, so
    // a wrong answer re-runs the search on a fresh seed, at most 3 times.
    bool found = false;
    for (int attempt = 0; attempt < 4; ++attempt) {
      grover::GroverPlan plan = grover::make_plan(
          cells, 1, make_init(config.init_mode, cells),
          config.seed + 4 * round + static_cast<std::uint64_t>(attempt));
      plan.iterations = iterations;
      const grover::GroverRunResult result =
          grover::run(domain, holds_target, plan, holds_target, 0);
      const int value =
          board.cells[static_cast<std::size_t>(result.outcome_index)];
      out << "Grover output index = " << result.outcome_index << '\n';
      out << "Value at that index = " << value << '\n';
      if (result.valid) {
        out << "Correct guess!\n";
        found = true;
        break;
      }
      if (attempt < 3) {
        out << "Miss: that cell does not hold " << target
            << ". Re-running the search...\n\n";
      }
    }
    if (!found) {
      out << "The search missed 4 times in a row; better luck next turn.\n";
    }

    out << "\nPlay again? (y/n): " << std::flush;
    std::string line;
    if (!std::getline(in, line) || !answered_yes(line)) break;
    out << '\n';
  }
  out << "Thanks for playing!\n";
  return 0;
}

inline int cmd_generate(int n, const std::string& domain_choice,
                        const CliConfig& config, std::ostream& out,
                        std::ostream& err) {
  if (n >= 4) {
    throw capacity_error(
        "a 4x4 grid already has 16! ≈ 2.09e13 arrangements, needing a "
        "45-qubit index register against 19 qubits for the 3x3 case; dense "
        "simulation stops at order 3");
  }
  if (n < 3) {
    throw std::domain_error("the generation demo covers n = 3");
  }

  const bool reduced = domain_choice == "reduced";
  const Domain<MagicGrid> domain =
      reduced ? reduce_domain(n) : full_permutation_domain(n);

  // True marked count, taken from the cheap classical search: the solutions
  // that actually live inside the chosen domain.
  const SearchResult all = backtracking(n, false);
  std::uint64_t marked = 0;
  for (const MagicGrid& solution : all.solutions) {
    try {
      (void)domain.encode(solution);
      ++marked;
    } catch (const std::domain_error&) {
    }
  }
  if (marked == 0) {
    throw no_solution_error("no magic square of order " + std::to_string(n) +
                            " exists in the chosen domain");
  }

  const int iterations = resolve_iterations(config, domain.size, marked);
  err << "running " << iterations << " Grover iterations over "
      << (std::uint64_t{1} << domain.qubit_width) << " amplitudes\n";

  grover::GroverPlan plan = grover::make_plan(
      domain.size, marked, make_init(config.init_mode, domain.size),
      config.seed);
  plan.iterations = iterations;
  const auto is_solution = [](const MagicGrid& g) { return is_magic(g); };
  const grover::GroverRunResult result =
      grover::run(domain, is_solution, plan, is_solution, 3);
  if (!result.valid) {
    throw no_solution_error(
        "the search failed to land on a valid square after 4 attempts");
  }

  out << "Quantum search over the " << (reduced ? "reduced" : "full")
      << " 3x3 domain: N = " << bench::detail::group_thousands(domain.size)
      << " candidates on " << domain.qubit_width << " qubits, M = " << marked
      << " marked\n\n";
  out << "Found magic square:\n"
      << matrix_text(domain.decode(result.outcome_index)) << '\n';
  out << "Grover iterations = " << iterations << '\n';
  out << "Oracle queries = " << result.oracle_queries << '\n';
  out << "Final marked probability = " << std::fixed << std::setprecision(6)
      << result.final_marked_probability << '\n';
  out << "Retries = " << result.retries << '\n';
  return 0;
}

inline int cmd_bench(const std::string& comparison, int n,
                     const CliConfig& config, bool no_timing, bool parallel,
                     std::ostream& out, std::ostream& err) {
  bench::BenchOptions options;
  options.seed = config.seed;
  options.measure_timings = !no_timing;
  options.parallel = parallel;
  const auto pair = comparison == "brute"
                        ? bench::bench_brute_vs_grover(n, options)
                        : bench::bench_backtrack_vs_grover(n, options);
  const std::string text =
      bench::emit_report({pair.first, pair.second}, config.report_format);
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      throw std::runtime_error("cannot write to " + *config.output_path);
    }
    file << text;
    err << "wrote report to " << *config.output_path << '\n';
  } else {
    out << text;
  }
  if (pair.second.notes.find("M = 0") != std::string::npos) {
    throw no_solution_error("no magic square of order " + std::to_string(n) +
                            " exists; the quantum run was refused (M = 0)");
  }
  return 0;
}

inline int cmd_inspect(const std::string& target, int n,
                       const CliConfig& config, std::ostream& out) {
  if (target == "siamese") {
    out << matrix_text(siamese(n));
    return 0;
  }
  if (target == "resources") {
    const ResourceEstimate estimate = oracle_resources(n);
    out << "Oracle resource estimate (n = " << n << ")\n";
    out << "primary_qubits = " << estimate.primary_qubits << '\n';
    out << "ancilla_qubits = " << estimate.ancilla_qubits << '\n';
    out << "gate_count = " << estimate.gate_count << '\n';
    out << "multi_controlled_count = " << estimate.multi_controlled_count
        << '\n';
    out << "decomposed_gate_count = " << estimate.decomposed_gate_count
        << '\n';
    out << "notes: " << estimate.notes << '\n';
    return 0;
  }
  // demo-circuit: three Hadamards, Z on the top qubit, three Hadamards.
  const GateList circuit = build_demo_circuit();
  StateVector state(circuit.num_qubits());
  run_gatelist(state, circuit);
  const auto histogram =
      sample(state, static_cast<std::uint64_t>(config.shots), config.seed);
  out << "Demo circuit netlist:\n" << circuit.to_netlist();
  out << "Measurement Counts: " << counts_text(histogram) << '\n';
  return 0;
}

}  // namespace detail

// Full command surface over plain streams so sessions can be driven
// in-process. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"exact quantum search demos on magic squares", "qsearch"};
  app.require_subcommand(1);

  CliConfig config;
  std::string init_choice = "exact";
  int iterations = -1;
  std::string format_choice = "markdown";
  std::string output_path;

  int game_size = 5;
  CLI::App* game = app.add_subcommand(
      "game", "guess a cell and let the search find it");
  game->add_option("--size", game_size, "odd board order, 3 to 15")
      ->required();
  game->add_option("--seed", config.seed, "random seed");
  game->add_option("--init", init_choice, "state preparation")
      ->check(CLI::IsMember({"exact", "padded"}));
  game->add_option("--iterations", iterations, "amplification rounds")
      ->check(CLI::NonNegativeNumber);

  int generate_n = 3;
  std::string domain_choice = "full";
  CLI::App* generate = app.add_subcommand(
      "generate", "search for a magic square with amplitude amplification");
  generate->add_option("--n", generate_n, "grid order");
  generate->add_option("--domain", domain_choice, "candidate domain")
      ->check(CLI::IsMember({"full", "reduced"}));
  generate->add_option("--seed", config.seed, "random seed");
  generate->add_option("--init", init_choice, "state preparation")
      ->check(CLI::IsMember({"exact", "padded"}));
  generate->add_option("--iterations", iterations, "amplification rounds")
      ->check(CLI::NonNegativeNumber);

  std::string comparison;
  int bench_n = 3;
  bool no_timing = false;
  bool parallel = false;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "compare a classical search against the quantum run");
  bench_cmd->add_option("--compare", comparison, "classical baseline")
      ->required()
      ->check(CLI::IsMember({"brute", "backtrack"}));
  bench_cmd->add_option("--n", bench_n, "grid order");
  bench_cmd->add_option("--format", format_choice, "report format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  bench_cmd->add_option("--out", output_path, "write the report to a file");
  bench_cmd->add_option("--seed", config.seed, "random seed");
  bench_cmd->add_flag("--no-timing", no_timing,
                      "zero the wall-clock fields for stable output");
  bench_cmd->add_flag("--parallel", parallel,
                      "run both methods concurrently (needs --no-timing)");

  std::string inspect_target;
  int inspect_n = 3;
  CLI::App* inspect = app.add_subcommand(
      "inspect", "print construction, circuit, or resource artifacts");
  inspect->add_option("target", inspect_target, "what to print")
      ->required()
      ->check(CLI::IsMember({"siamese", "resources", "demo-circuit"}));
  inspect->add_option("--n", inspect_n, "grid order");
  inspect->add_option("--shots", config.shots, "measurement repetitions")
      ->check(CLI::Range(1, 100000000));
  inspect->add_option("--seed", config.seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (iterations >= 0) config.iterations_override = iterations;
  config.init_mode = init_choice == "padded" ? InitMode::Kind::Padded
                                             : InitMode::Kind::ExactDomain;
  if (format_choice == "json") {
    config.report_format = bench::ReportFormat::Json;
  } else if (format_choice == "csv") {
    config.report_format = bench::ReportFormat::Csv;
  }
  if (!output_path.empty()) config.output_path = output_path;

  try {
    if (game->parsed()) return detail::cmd_game(game_size, config, in, out);
    if (generate->parsed()) {
      return detail::cmd_generate(generate_n, domain_choice, config, out, err);
    }
    if (bench_cmd->parsed()) {
      return detail::cmd_bench(comparison, bench_n, config, no_timing,
                               parallel, out, err);
    }
    return detail::cmd_inspect(inspect_target, inspect_n, config, out);
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const no_solution_error& e) {
    err << "no solution: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qsearch::cli

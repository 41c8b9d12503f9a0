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

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <future>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsearch/grover.hpp"
#include "qsearch/magic.hpp"

namespace qsearch::bench {

// One benchmarked method. The two theoretical query figures assume a single
// marked state (the headline sqrt(N) number and its pi/4-scaled variant);
// theoretical_queries_true_m uses the actual solution count, which is what
// the executed plan follows. Counters are copied from the wrapped run
// statistics, never re-derived.
struct BenchReport {
  int n = 0;
  std::string method;  // brute_force | backtracking | grover_simulated
  std::uint64_t search_space_n = 0;
  std::uint64_t candidates_or_queries = 0;
  double theoretical_queries_m1 = 0.0;         // sqrt((n^2)!)
  double theoretical_queries_m1_scaled = 0.0;  // (pi/4) sqrt((n^2)!)
  double theoretical_queries_true_m = 0.0;     // (pi/4) sqrt(N/M), 0 if M = 0
  double elapsed_seconds = 0.0;
  std::vector<int> solution;  // empty when the method found none
  std::string environment;
  std::string notes;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

struct BenchOptions {
  std::uint64_t seed = 0;
  // Timings are wall clock and inherently non-reproducible; disabling them
  // zeroes elapsed_seconds so emitted reports are byte-stable.
  bool measure_timings = true;
  // Runs the classical and quantum halves concurrently. Only allowed with
  // timings off: two methods racing on one host do not produce comparable
  // wall-clock numbers.
  bool parallel = false;
};

inline std::string host_environment() {
  std::ostringstream out;
#if defined(__clang__)
  out << "clang " << __clang_major__ << '.' << __clang_minor__;
#elif defined(__GNUC__)
  out << "gcc " << __GNUC__ << '.' << __GNUC_MINOR__;
#else
  out << "unknown compiler";
#endif
  out << ", std " << __cplusplus;
#if defined(__linux__)
  out << ", linux";
#elif defined(__APPLE__)
  out << ", darwin";
#elif defined(_WIN32)
  out << ", windows";
#endif
#if defined(__x86_64__) || defined(_M_X64)
  out << ", x86_64";
#elif defined(__aarch64__) || defined(_M_ARM64)
  out << ", arm64";
#endif
  return out.str();
}

namespace detail {

inline void check_bench_order(int n) {
  if (n > 3) {
    throw capacity_error(
        "benchmarks above order 3 would need a 45-qubit index register for "
        "the quantum half; only orders 2 and 3 are runnable");
  }
  if (n < 2) {
    throw std::domain_error("benchmarks cover orders 2 and 3");
  }
}

inline std::uint64_t search_space(int n) {
  return qsearch::detail::factorial_table()[static_cast<std::size_t>(n) * n];
}

inline BenchReport base_report(int n, std::string method,
                               std::uint64_t marked) {
  BenchReport report;
  report.n = n;
  report.method = std::move(method);
  report.search_space_n = search_space(n);
  const grover::TheoreticalQueryReport theory =
      grover::theoretical_query_report(n);
  report.theoretical_queries_m1 = theory.sqrt_of_space;
  report.theoretical_queries_m1_scaled = theory.quarter_pi_scaled;
  report.theoretical_queries_true_m =
      marked == 0
          ? 0.0
          : grover::theoretical_query_report(n, marked).quarter_pi_scaled;
  report.environment = host_environment();
  return report;
}

inline BenchReport grover_half(int n, std::uint64_t marked,
                               const BenchOptions& options) {
  BenchReport report = base_report(n, "grover_simulated", marked);
  if (marked == 0) {
    report.notes =
        "no solution exists in this search space (M = 0); the amplification "
        "run was refused";
    return report;
  }
  const Domain<MagicGrid> domain = full_permutation_domain(n);
  const grover::GroverPlan plan = grover::make_plan(
      domain.size, marked, InitMode::exact_domain(domain.size), options.seed);
  const auto is_solution = [](const MagicGrid& g) { return is_magic(g); };
  const auto start = std::chrono::steady_clock::now();
  const grover::GroverRunResult result =
      grover::run(domain, is_solution, plan, is_solution, 3);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report.candidates_or_queries = result.oracle_queries;
  if (result.valid) {
    report.solution = domain.decode(result.outcome_index).cells;
  }
  std::ostringstream notes;
  notes << "M = " << marked << ", k = " << plan.iterations
        << ", retries = " << result.retries << ", seed = " << options.seed;
  report.notes = notes.str();
  return report;
}

inline std::pair<BenchReport, BenchReport> run_pair(
    int n, bool use_backtracking, const BenchOptions& options) {
  check_bench_order(n);
  if (options.parallel && options.measure_timings) {
    throw std::domain_error(
        "parallel benchmarking needs timings disabled; concurrent methods "
        "do not yield comparable wall-clock figures");
  }

  // Solution count first (untimed): the quantum plan needs the true M.
  const std::uint64_t marked =
      use_backtracking ? backtracking(n, false).stats.solutions_found
                       : brute_force(n, false).stats.solutions_found;

  const auto classical_fn = [n, use_backtracking, marked] {
    BenchReport report = base_report(
        n, use_backtracking ? "backtracking" : "brute_force", marked);
    const SearchResult found = use_backtracking ? backtracking(n, true)
                                                : brute_force(n, true);
    report.candidates_or_queries = use_backtracking
                                       ? found.stats.nodes_visited
                                       : found.stats.candidates_checked;
    report.elapsed_seconds = found.stats.elapsed_seconds;
    if (!found.solutions.empty()) {
      report.solution = found.solutions.front().cells;
    } else {
      report.notes = "no solution exists in this search space";
    }
    return report;
  };
  const auto grover_fn = [n, marked, &options] {
    return grover_half(n, marked, options);
  };

  std::pair<BenchReport, BenchReport> reports;
  if (options.parallel) {
    auto classical_future = std::async(std::launch::async, classical_fn);
    auto grover_future = std::async(std::launch::async, grover_fn);
    reports = {classical_future.get(), grover_future.get()};
  } else {
    reports = {classical_fn(), grover_fn()};
  }
  if (!options.measure_timings) {
    reports.first.elapsed_seconds = 0.0;
    reports.second.elapsed_seconds = 0.0;
  }
  return reports;
}

}  // namespace detail

// Lexicographic enumeration vs the full-domain quantum run, mirroring the
// search-space / query-complexity / runtime comparison rows.
inline std::pair<BenchReport, BenchReport> bench_brute_vs_grover(
    int n, const BenchOptions& options = {}) {
  return detail::run_pair(n, /*use_backtracking=*/false, options);
}

inline std::pair<BenchReport, BenchReport> bench_backtrack_vs_grover(
    int n, const BenchOptions& options = {}) {
  return detail::run_pair(n, /*use_backtracking=*/true, options);
}

enum class ReportFormat { Json, Csv, Markdown };

namespace detail {

inline std::string group_thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i - lead) % 3 == 0 && i >= lead) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

inline std::string fixed(double value, int places) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", places, value);
  return buffer;
}

inline std::string method_label(const std::string& method) {
  if (method == "brute_force") return "Brute-Force Search";
  if (method == "backtracking") return "Classical Backtracking";
  if (method == "grover_simulated") return "Grover's Algorithm (simulated)";
  return method;
}

inline std::string solution_text(const std::vector<int>& cells) {
  if (cells.empty()) return "none";
  std::string out = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(cells[i]);
  }
  return out + "]";
}

inline std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  return quoted + "\"";
}

inline nlohmann::ordered_json report_to_json(const BenchReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["method"] = r.method;
  j["search_space_n"] = r.search_space_n;
  j["candidates_or_queries"] = r.candidates_or_queries;
  j["theoretical_queries_m1"] = r.theoretical_queries_m1;
  j["theoretical_queries_m1_scaled"] = r.theoretical_queries_m1_scaled;
  j["theoretical_queries_true_m"] = r.theoretical_queries_true_m;
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (r.solution.empty()) {
    j["solution"] = nullptr;
  } else {
    j["solution"] = r.solution;
  }
  j["environment"] = r.environment;
  j["notes"] = r.notes;
  return j;
}

}  // namespace detail

inline std::string emit_report(const std::vector<BenchReport>& reports,
                               ReportFormat format) {
  if (reports.empty()) {
    throw std::domain_error("refusing to emit an empty report list");
  }
  switch (format) {
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["schema"] = "qsearch-bench/1";
      j["reports"] = nlohmann::ordered_json::array();
      for (const BenchReport& r : reports) {
        j["reports"].push_back(detail::report_to_json(r));
      }
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << "n,method,search_space_n,candidates_or_queries,"
             "theoretical_queries_m1,theoretical_queries_m1_scaled,"
             "theoretical_queries_true_m,elapsed_seconds,solution,"
             "environment,notes\n";
      for (const BenchReport& r : reports) {
        std::string cells;
        for (std::size_t i = 0; i < r.solution.size(); ++i) {
          if (i) cells += ' ';
          cells += std::to_string(r.solution[i]);
        }
        out << r.n << ',' << detail::csv_field(r.method) << ','
            << r.search_space_n << ',' << r.candidates_or_queries << ','
            << detail::fixed(r.theoretical_queries_m1, 6) << ','
            << detail::fixed(r.theoretical_queries_m1_scaled, 6) << ','
            << detail::fixed(r.theoretical_queries_true_m, 6) << ','
            << detail::fixed(r.elapsed_seconds, 6) << ','
            << detail::csv_field(cells) << ','
            << detail::csv_field(r.environment) << ','
            << detail::csv_field(r.notes) << '\n';
      }
      return out.str();
    }
    case ReportFormat::Markdown: {
      // Aspect rows, one column per method, mirroring the comparison tables.
      std::ostringstream out;
      out << "| Aspect |";
      for (const BenchReport& r : reports) {
        out << ' ' << detail::method_label(r.method) << " |";
      }
      out << "\n| --- |";
      for (std::size_t i = 0; i < reports.size(); ++i) out << " --- |";
      out << "\n| Search space (n = " << reports.front().n << ") |";
      for (const BenchReport& r : reports) {
        out << ' ' << detail::group_thousands(r.search_space_n)
            << (r.method == "grover_simulated" ? " superposed states"
                                               : " permutations")
            << " |";
      }
      out << "\n| Query complexity |";
      for (const BenchReport& r : reports) {
        if (r.method == "grover_simulated") {
          out << " sqrt(N) = " << detail::fixed(r.theoretical_queries_m1, 3)
              << " oracle calls (theoretical, M = 1); (pi/4)-scaled = "
              << detail::fixed(r.theoretical_queries_m1_scaled, 3)
              << "; executed = "
              << detail::group_thousands(r.candidates_or_queries) << " |";
        } else if (r.method == "backtracking") {
          out << ' ' << detail::group_thousands(r.candidates_or_queries)
              << " nodes visited |";
        } else {
          out << ' ' << detail::group_thousands(r.candidates_or_queries)
              << " candidates checked |";
        }
      }
      out << "\n| Observed runtime |";
      for (const BenchReport& r : reports) {
        out << ' ' << detail::fixed(r.elapsed_seconds, 6) << " s |";
      }
      out << "\n| Solution |";
      for (const BenchReport& r : reports) {
        out << ' ' << detail::solution_text(r.solution) << " |";
      }
      bool any_notes = false;
      for (const BenchReport& r : reports) any_notes |= !r.notes.empty();
      if (any_notes) {
        out << "\n| Notes |";
        for (const BenchReport& r : reports) {
          out << ' ' << (r.notes.empty() ? "-" : r.notes) << " |";
        }
      }
      out << '\n';
      return out.str();
    }
  }
  throw std::domain_error("unknown report format");
}

// Inverse of the JSON emitter, for round-trip checks and downstream tooling.
inline std::vector<BenchReport> parse_reports(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") +
                                e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "qsearch-bench/1") {
      throw std::invalid_argument("unsupported report schema '" +
                                  j.at("schema").get<std::string>() + "'");
    }
    std::vector<BenchReport> reports;
    for (const nlohmann::json& item : j.at("reports")) {
      BenchReport r;
      r.n = item.at("n").get<int>();
      r.method = item.at("method").get<std::string>();
      r.search_space_n = item.at("search_space_n").get<std::uint64_t>();
      r.candidates_or_queries =
          item.at("candidates_or_queries").get<std::uint64_t>();
      r.theoretical_queries_m1 =
          item.at("theoretical_queries_m1").get<double>();
      r.theoretical_queries_m1_scaled =
          item.at("theoretical_queries_m1_scaled").get<double>();
      r.theoretical_queries_true_m =
          item.at("theoretical_queries_true_m").get<double>();
      r.elapsed_seconds = item.at("elapsed_seconds").get<double>();
      if (!item.at("solution").is_null()) {
        r.solution = item.at("solution").get<std::vector<int>>();
      }
      r.environment = item.at("environment").get<std::string>();
      r.notes = item.at("notes").get<std::string>();
      reports.push_back(std::move(r));
    }
    return reports;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report fields: ") +
                                e.what());
  }
}

}  // namespace qsearch::bench

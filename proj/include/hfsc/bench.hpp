#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "hfsc/generator.hpp"
#include "hfsc/io.hpp"
#include "hfsc/model.hpp"
#include "hfsc/solver.hpp"

namespace hfsc {

struct CaseResult {
  std::string group;
  std::size_t case_index = 0;  // 1-based within the group
  std::size_t k = 0;
  double mean_ur = 0.0;
  double tc = 0.0;
  Count lower_bound = 0;
  std::size_t initial_k = 0;
  bool timed_out = false;
};

struct GroupSummary {
  std::string group;
  std::size_t cases = 0;
  double mean_k = 0.0;
  double mean_ur = 0.0;
  std::size_t min_k = 0;
  std::size_t max_k = 0;
  double mean_tc = 0.0;
};

class BenchmarkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t group_rank(const std::string& name) {
  const auto& all = standard_groups();
  for (std::size_t g = 0; g < all.size(); ++g) {
    if (all[g].name == name) return g;
  }
  return all.size();
}

inline bool result_order(const CaseResult& a, const CaseResult& b) {
  const std::size_t ra = group_rank(a.group);
  const std::size_t rb = group_rank(b.group);
  if (ra != rb) return ra < rb;
  if (a.group != b.group) return a.group < b.group;
  return a.case_index < b.case_index;
}

// Parses "G1_case07" style names produced by the generator.
inline std::pair<std::string, std::size_t> split_case_name(const std::string& name) {
  const auto pos = name.rfind("_case");
  if (pos == std::string::npos) return {name, 0};
  return {name.substr(0, pos), static_cast<std::size_t>(std::stoul(name.substr(pos + 5)))};
}

}  // namespace detail

// Solves every instance, re-validates each plan, and returns results sorted
// by (group, case). jobs > 1 solves cases on that many threads; the output
// does not depend on jobs.
inline std::vector<CaseResult> run_instances(const std::vector<Instance>& instances, const SolveConfig& cfg,
                                             unsigned jobs = 1) {
  std::vector<CaseResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= instances.size()) return;
      {
        std::lock_guard lock(error_mutex);
        if (first_error) return;
      }
      try {
        const Instance& inst = instances[idx];
        const SolveResult solved = solve(inst, cfg);
        const ValidationReport report = validate_plan(solved.plan, inst);
        if (!report.valid()) {
          throw BenchmarkError("case " + inst.name + " produced an invalid plan: " +
                               describe(report.violations.front()));
        }
        CaseResult r;
        std::tie(r.group, r.case_index) = detail::split_case_name(inst.name);
        r.k = solved.plan.k;
        r.mean_ur = solved.plan.mean_ur;
        r.tc = solved.elapsed;
        r.lower_bound = volume_lower_bound(inst);
        r.initial_k = solved.initial_k;
        r.timed_out = solved.timed_out;
        if (static_cast<Count>(r.k) < r.lower_bound) {
          throw BenchmarkError("case " + inst.name + " has k below the volume lower bound");
        }
        results[idx] = std::move(r);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  std::stable_sort(results.begin(), results.end(), detail::result_order);
  return results;
}

inline std::vector<CaseResult> run_benchmark(const std::vector<std::string>& groups, std::size_t cases_per_group,
                                             std::uint64_t seed, const SolveConfig& cfg, unsigned jobs = 1) {
  if (cases_per_group < 1) throw std::invalid_argument("cases_per_group must be >= 1");
  return run_instances(generate_suite(groups, cases_per_group, seed), cfg, jobs);
}

// Per-group means and extrema, groups in suite order.
inline std::vector<GroupSummary> summarize(const std::vector<CaseResult>& results) {
  std::map<std::pair<std::size_t, std::string>, std::vector<const CaseResult*>> by_group;
  for (const auto& r : results) by_group[{detail::group_rank(r.group), r.group}].push_back(&r);
  std::vector<GroupSummary> out;
  for (const auto& [key, rows] : by_group) {
    if (rows.empty()) throw std::invalid_argument("empty group " + key.second);
    GroupSummary s;
    s.group = key.second;
    s.cases = rows.size();
    s.min_k = rows.front()->k;
    s.max_k = rows.front()->k;
    double k_sum = 0.0, ur_sum = 0.0, tc_sum = 0.0;
    for (const CaseResult* r : rows) {
      k_sum += static_cast<double>(r->k);
      ur_sum += r->mean_ur;
      tc_sum += r->tc;
      s.min_k = std::min(s.min_k, r->k);
      s.max_k = std::max(s.max_k, r->k);
    }
    const auto n = static_cast<double>(rows.size());
    s.mean_k = k_sum / n;
    s.mean_ur = ur_sum / n;
    s.mean_tc = tc_sum / n;
    out.push_back(s);
  }
  return out;
}

// Half-up rounding to 2 decimals, formatted.
inline std::string fixed2(double v) {
  const double scaled = std::floor(v * 100.0 + 0.5 + 1e-9);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", scaled / 100.0);
  return buf;
}

inline std::string cases_csv(const std::vector<CaseResult>& results) {
  std::vector<CaseResult> sorted = results;
  std::stable_sort(sorted.begin(), sorted.end(), detail::result_order);
  std::string out = "group,case,k,mean_ur_pct,tc_seconds,lower_bound\n";
  for (const auto& r : sorted) {
    out += r.group + "," + std::to_string(r.case_index) + "," + std::to_string(r.k) + "," +
           fixed2(r.mean_ur * 100.0) + "," + fixed2(r.tc) + "," + std::to_string(r.lower_bound) + "\n";
  }
  return out;
}

inline std::string summary_csv(const std::vector<GroupSummary>& summaries) {
  std::string out = "group,cases,mean_k,mean_ur_pct,min_k,max_k,mean_tc_seconds\n";
  for (const auto& s : summaries) {
    out += s.group + "," + std::to_string(s.cases) + "," + fixed2(s.mean_k) + "," + fixed2(s.mean_ur * 100.0) +
           "," + std::to_string(s.min_k) + "," + std::to_string(s.max_k) + "," + fixed2(s.mean_tc) + "\n";
  }
  return out;
}

// Writes <path> (per case) and <stem>_summary.csv next to it.
inline std::filesystem::path summary_path_for(const std::filesystem::path& path) {
  return path.parent_path() / (path.stem().string() + "_summary.csv");
}

inline void write_report(const std::vector<GroupSummary>& summaries, const std::vector<CaseResult>& results,
                         const std::filesystem::path& path) {
  detail::write_file(path, cases_csv(results));
  detail::write_file(summary_path_for(path), summary_csv(summaries));
}

}  // namespace hfsc

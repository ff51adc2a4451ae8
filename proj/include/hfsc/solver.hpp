#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hfsc/construction.hpp"
#include "hfsc/model.hpp"

namespace hfsc {

struct SolveConfig {
  // Wall-clock budget in seconds; nullopt means unlimited.
  std::optional<double> time_limit = 1200.0;
  bool record_trace = false;

  static SolveConfig unlimited() { return SolveConfig{std::nullopt, false}; }
};

// One accepted extraction of the improvement loop.
struct TraceStep {
  std::size_t extracted_position = 0;
  std::size_t lays_before = 0;
  std::size_t lays_after = 0;
  double at_seconds = 0.0;
};

struct SolveResult {
  CuttingPlan plan;
  double elapsed = 0.0;
  std::size_t initial_k = 0;
  bool improved = false;
  bool timed_out = false;
  std::vector<TraceStep> trace;
};

class InvalidInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Construct, then repeatedly pull one lay out and rebuild the rest; keep the
// rebuild whenever it saves at least one lay overall.
inline SolveResult solve(const Instance& inst, const SolveConfig& cfg = {}) {
  if (cfg.time_limit && !(*cfg.time_limit > 0.0)) throw std::invalid_argument("time limit must be positive");
  const ValidationReport report = validate_instance(inst);
  if (!report.valid()) throw InvalidInstanceError("invalid instance: " + describe(report.violations.front()));

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto seconds = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

  SolveResult result;
  std::vector<Lay> settled;
  std::vector<Lay> current = create_lays(inst.demand, inst.lengths, inst.bed_length, inst.bed_height);
  result.initial_k = current.size();

  // Production of `current`; kept in sync so each candidate's remainder is a
  // subtraction rather than a full re-sum.
  Matrix current_cover = covered_demand(current, inst);

  bool accepted = true;
  while (accepted && !result.timed_out) {
    accepted = false;
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (cfg.time_limit && seconds() >= *cfg.time_limit) {
        result.timed_out = true;
        break;
      }
      Matrix rest = current_cover;
      const Lay& lay = current[k];
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (lay.counts[i] == 0) continue;
        for (std::size_t j = 0; j < rest[i].size(); ++j) rest[i][j] -= lay.counts[i] * lay.heights[j];
      }
      std::vector<Lay> rebuilt = create_lays(rest, inst.lengths, inst.bed_length, inst.bed_height);
      if (rebuilt.size() + 1 < current.size()) {
        if (cfg.record_trace) result.trace.push_back({k, current.size(), rebuilt.size() + 1, seconds()});
        settled.push_back(lay);
        current = std::move(rebuilt);
        current_cover = std::move(rest);
        result.improved = true;
        accepted = true;
        break;
      }
    }
  }

  settled.insert(settled.end(), std::make_move_iterator(current.begin()), std::make_move_iterator(current.end()));
  result.plan = make_plan(inst, std::move(settled));
  result.elapsed = seconds();
  return result;
}

}  // namespace hfsc

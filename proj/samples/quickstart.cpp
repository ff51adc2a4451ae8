// Builds a small instance in code, solves it and prints the lays.

#include <cstdio>

#include "hfsc/hfsc.hpp"

int main() {
  hfsc::Instance inst;
  inst.name = "quickstart";
  inst.bed_length = 120;
  inst.bed_height = 12;
  inst.lengths = {20, 25, 30, 40};
  inst.demand = {
      {12, 6, 9},
      {8, 8, 4},
      {10, 0, 5},
      {3, 6, 6},
  };

  const hfsc::SolveResult result = hfsc::solve(inst, hfsc::SolveConfig::unlimited());
  std::printf("lays: %zu (construction gave %zu), mean UR %.2f%%\n", result.plan.k, result.initial_k,
              100.0 * result.plan.mean_ur);
  for (std::size_t k = 0; k < result.plan.lays.size(); ++k) {
    const hfsc::Lay& lay = result.plan.lays[k];
    std::printf("lay %zu: heights", k + 1);
    for (auto h : lay.heights) std::printf(" %lld", static_cast<long long>(h));
    std::printf(" | counts");
    for (auto q : lay.counts) std::printf(" %lld", static_cast<long long>(q));
    std::printf("\n");
  }
  return hfsc::validate_plan(result.plan, inst).valid() ? 0 : 1;
}

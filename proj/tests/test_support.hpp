#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hfsc/knapsack.hpp"
#include "hfsc/model.hpp"

namespace hfsc::testing {

// Exhaustive optimum of the bounded knapsack; independent of the DP.
inline Count brute_force_knapsack(Count cap, const std::vector<Column>& columns) {
  Count best = 0;
  std::vector<Count> taken(columns.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, Count used) -> void {
    if (used > cap) return;
    if (i == columns.size()) {
      best = std::max(best, used);
      return;
    }
    for (Count t = 0; t <= columns[i].capacity; ++t) self(self, i + 1, used + t * columns[i].length);
  };
  rec(rec, 0, 0);
  return best;
}

struct DeskScale {
  std::size_t max_figures = 10;
  std::size_t max_fabrics = 3;
  Count max_demand = 50;
  Count max_bed_length = 120;
  Count max_bed_height = 20;
};

// Random valid instance with every length <= bed length.
inline Instance random_instance(std::mt19937_64& rng, const DeskScale& scale = {}) {
  auto pick = [&](Count lo, Count hi) { return std::uniform_int_distribution<Count>(lo, hi)(rng); };
  Instance inst;
  inst.name = "random";
  const auto g = static_cast<std::size_t>(pick(1, static_cast<Count>(scale.max_figures)));
  const auto f = static_cast<std::size_t>(pick(1, static_cast<Count>(scale.max_fabrics)));
  inst.bed_length = pick(10, scale.max_bed_length);
  inst.bed_height = pick(1, scale.max_bed_height);
  for (std::size_t i = 0; i < g; ++i) inst.lengths.push_back(pick(1, inst.bed_length));
  inst.demand.assign(g, std::vector<Count>(f, 0));
  for (auto& row : inst.demand) {
    for (auto& s : row) s = pick(0, 3) == 0 ? 0 : pick(0, scale.max_demand);
  }
  return inst;
}

inline Matrix production(const std::vector<Lay>& lays, std::size_t g, std::size_t f) {
  Matrix out(g, std::vector<Count>(f, 0));
  for (const auto& lay : lays) {
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < f; ++j) out[i][j] += lay.counts[i] * lay.heights[j];
    }
  }
  return out;
}

}  // namespace hfsc::testing

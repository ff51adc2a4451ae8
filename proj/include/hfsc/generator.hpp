#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hfsc/model.hpp"

namespace hfsc {

struct GroupSpec {
  std::string name;
  Count lb = 0;
  Count ub = 0;
};

// Demand bounds of the ten benchmark groups, in suite order.
inline const std::array<GroupSpec, 10>& standard_groups() {
  static const std::array<GroupSpec, 10> groups{{
      {"G1", 300, 400},
      {"G2", 300, 600},
      {"G3", 400, 500},
      {"G4", 300, 800},
      {"G5", 400, 700},
      {"G6", 500, 600},
      {"G7", 300, 1000},
      {"G8", 400, 900},
      {"G9", 500, 800},
      {"G10", 600, 700},
  }};
  return groups;
}

inline std::optional<GroupSpec> find_group(std::string_view name) {
  for (const auto& g : standard_groups()) {
    if (g.name == name) return g;
  }
  return std::nullopt;
}

inline constexpr Count kBenchBedLength = 720;
inline constexpr Count kBenchBedHeight = 160;
inline constexpr std::uint64_t kDefaultSeed = 1000000;

// 5 styles x 6 sizes.
inline const std::vector<Count>& benchmark_lengths() {
  static const std::vector<Count> lengths{60, 63, 66,  69,  73,  76,  69,  72,  75,  78,
                                          82, 86, 80,  83,  86,  90,  94,  98,  90,  94,
                                          98, 102, 106, 110, 99, 103, 107, 111, 115, 120};
  return lengths;
}

inline constexpr std::size_t kBenchFabrics = 5;

// splitmix64.
struct GeneratorState {
  std::uint64_t state = 0;

  friend bool operator==(const GeneratorState&, const GeneratorState&) = default;
};

inline std::pair<std::uint64_t, GeneratorState> next_u64(GeneratorState st) {
  st.state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = st.state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {z ^ (z >> 31), st};
}

// Uniform over [lo, hi] by rejection: draws at or above the largest multiple
// of the range size are discarded.
inline std::pair<Count, GeneratorState> uniform_int(GeneratorState st, Count lo, Count hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) {  // full 64-bit range
    auto [v, next] = next_u64(st);
    return {static_cast<Count>(v), next};
  }
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span + 1) % span;  // multiple of span, minus one
  while (true) {
    auto [v, next] = next_u64(st);
    st = next;
    if (v <= limit) return {lo + static_cast<Count>(v % span), st};
  }
}

inline std::string case_name(const GroupSpec& spec, std::size_t case_number) {
  std::string nn = std::to_string(case_number);
  if (nn.size() < 2) nn.insert(0, 2 - nn.size(), '0');
  return spec.name + "_case" + nn;
}

// Demand drawn figure-major, fabric-minor.
inline std::pair<Instance, GeneratorState> generate_case(const GroupSpec& spec, GeneratorState st,
                                                         std::string name = {}) {
  if (spec.lb <= 0 || spec.lb > spec.ub) throw std::invalid_argument("invalid group bounds for " + spec.name);
  Instance inst;
  inst.name = name.empty() ? spec.name : std::move(name);
  inst.bed_length = kBenchBedLength;
  inst.bed_height = kBenchBedHeight;
  inst.lengths = benchmark_lengths();
  inst.demand.assign(inst.lengths.size(), std::vector<Count>(kBenchFabrics, 0));
  for (auto& row : inst.demand) {
    for (auto& s : row) std::tie(s, st) = uniform_int(st, spec.lb, spec.ub);
  }
  return {std::move(inst), st};
}

inline std::vector<Instance> generate_cases(const GroupSpec& spec, std::size_t cases, GeneratorState& st) {
  std::vector<Instance> out;
  out.reserve(cases);
  for (std::size_t c = 1; c <= cases; ++c) {
    auto [inst, next] = generate_case(spec, st, case_name(spec, c));
    st = next;
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<Instance> generate_group(const GroupSpec& spec, std::size_t cases, std::uint64_t seed) {
  if (cases < 1) throw std::invalid_argument("generate_group: cases must be >= 1");
  GeneratorState st{seed};
  return generate_cases(spec, cases, st);
}

// Cases for a subset of the standard groups, drawn from one stream that walks
// G1..G10 in order with `cases` per group. A group's cases therefore do not
// depend on which other groups were requested.
inline std::vector<Instance> generate_suite(const std::vector<std::string>& groups, std::size_t cases,
                                            std::uint64_t seed) {
  if (cases < 1) throw std::invalid_argument("generate_suite: cases must be >= 1");
  std::size_t last = 0;
  bool any = false;
  const auto& all = standard_groups();
  for (const auto& name : groups) {
    bool found = false;
    for (std::size_t g = 0; g < all.size(); ++g) {
      if (all[g].name == name) {
        last = std::max(last, g);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown group " + name);
    any = true;
  }
  std::vector<Instance> out;
  if (!any) return out;
  GeneratorState st{seed};
  for (std::size_t g = 0; g <= last; ++g) {
    std::vector<Instance> batch = generate_cases(all[g], cases, st);
    bool wanted = false;
    for (const auto& name : groups) wanted = wanted || name == all[g].name;
    if (!wanted) continue;
    for (auto& inst : batch) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace hfsc

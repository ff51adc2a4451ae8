#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfsc {

using Count = std::int64_t;
using Matrix = std::vector<std::vector<Count>>;

// Problem input. demand[i][j] is the number of garments of figure i to cut
// from fabric type j; lengths[i] is the bed length one template of figure i
// consumes.
struct Instance {
  std::string name;
  Count bed_length = 0;
  Count bed_height = 0;
  std::vector<Count> lengths;
  Matrix demand;

  std::size_t figures() const { return lengths.size(); }
  std::size_t fabrics() const { return demand.empty() ? 0 : demand.front().size(); }
};

// One spread-and-cut. heights[j] layers of fabric j, counts[i] templates of
// figure i along the bed; it yields counts[i] * heights[j] of SKU (i, j).
struct Lay {
  std::vector<Count> heights;
  std::vector<Count> counts;

  Count total_height() const { return std::accumulate(heights.begin(), heights.end(), Count{0}); }

  friend bool operator==(const Lay&, const Lay&) = default;
};

struct CuttingPlan {
  std::string instance;
  std::vector<Lay> lays;
  std::size_t k = 0;
  double mean_ur = 0.0;
};

enum class ViolationKind { exactness, length, height, shape };

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::exactness: return "exactness";
    case ViolationKind::length: return "length";
    case ViolationKind::height: return "height";
    case ViolationKind::shape: return "shape";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  // Meaning depends on kind: (figure, fabric) for exactness, (lay, -1) for
  // per-lay checks, (row, column) for matrix shape problems.
  std::ptrdiff_t first = -1;
  std::ptrdiff_t second = -1;
  Count observed = 0;
  Count required = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }

  void add(ViolationKind kind, std::ptrdiff_t first, std::ptrdiff_t second, Count observed,
           Count required, std::string message) {
    violations.push_back({kind, first, second, observed, required, std::move(message)});
  }
};

inline std::string describe(const Violation& v) {
  std::string out = to_string(v.kind);
  out += ": ";
  out += v.message;
  out += " (observed " + std::to_string(v.observed) + ", required " + std::to_string(v.required) + ")";
  return out;
}

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  const auto g = static_cast<std::ptrdiff_t>(inst.lengths.size());
  if (inst.bed_length < 1) {
    report.add(ViolationKind::shape, -1, -1, inst.bed_length, 1, "bed length must be positive");
  }
  if (inst.bed_height < 1) {
    report.add(ViolationKind::shape, -1, -1, inst.bed_height, 1, "bed height must be positive");
  }
  if (g == 0) {
    report.add(ViolationKind::shape, -1, -1, 0, 1, "instance has no garment figures");
  }
  if (static_cast<std::ptrdiff_t>(inst.demand.size()) != g) {
    report.add(ViolationKind::shape, -1, -1, static_cast<Count>(inst.demand.size()), g,
               "demand row count differs from number of lengths");
  }
  const std::size_t f = inst.fabrics();
  if (!inst.demand.empty() && f == 0) {
    report.add(ViolationKind::shape, 0, -1, 0, 1, "instance has no fabric types");
  }
  for (std::size_t i = 0; i < inst.demand.size(); ++i) {
    const auto& row = inst.demand[i];
    const auto r = static_cast<std::ptrdiff_t>(i);
    if (row.size() != f) {
      report.add(ViolationKind::shape, r, -1, static_cast<Count>(row.size()), static_cast<Count>(f),
                 "demand row " + std::to_string(i) + " has wrong width");
    }
    bool has_demand = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) {
        report.add(ViolationKind::shape, r, static_cast<std::ptrdiff_t>(j), row[j], 0,
                   "negative demand at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      has_demand = has_demand || row[j] > 0;
    }
    if (i < inst.lengths.size()) {
      const Count len = inst.lengths[i];
      if (len < 1) {
        report.add(ViolationKind::shape, r, -1, len, 1,
                   "length of figure " + std::to_string(i) + " must be positive");
      } else if (has_demand && len > inst.bed_length) {
        report.add(ViolationKind::length, r, -1, len, inst.bed_length,
                   "figure " + std::to_string(i) + " is longer than the bed");
      }
    }
  }
  return report;
}

namespace detail {

inline void check_lay_dims(const Lay& lay, const Instance& inst) {
  if (lay.counts.size() != inst.figures() || lay.heights.size() != inst.fabrics()) {
    throw DimensionError("lay dimensions do not match instance (" + std::to_string(lay.counts.size()) +
                         " counts, " + std::to_string(lay.heights.size()) + " heights; expected " +
                         std::to_string(inst.figures()) + " and " + std::to_string(inst.fabrics()) +
                         ")");
  }
}

}  // namespace detail

// Bed length consumed by the lay's cutting pattern.
inline Count pattern_length(const Lay& lay, const std::vector<Count>& lengths) {
  Count total = 0;
  for (std::size_t i = 0; i < lay.counts.size(); ++i) total += lengths[i] * lay.counts[i];
  return total;
}

inline Count lay_volume(const Lay& lay, const Instance& inst) {
  detail::check_lay_dims(lay, inst);
  return pattern_length(lay, inst.lengths) * lay.total_height();
}

inline double utilization_rate(const Lay& lay, const Instance& inst) {
  const Count volume = lay_volume(lay, inst);
  return static_cast<double>(volume) / static_cast<double>(inst.bed_length * inst.bed_height);
}

inline double mean_utilization(const std::vector<Lay>& lays, const Instance& inst) {
  if (lays.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& lay : lays) sum += utilization_rate(lay, inst);
  return sum / static_cast<double>(lays.size());
}

inline CuttingPlan make_plan(const Instance& inst, std::vector<Lay> lays) {
  CuttingPlan plan;
  plan.instance = inst.name;
  plan.mean_ur = mean_utilization(lays, inst);
  plan.k = lays.size();
  plan.lays = std::move(lays);
  return plan;
}

// Entrywise production of a set of lays.
inline Matrix covered_demand(const std::vector<Lay>& lays, const Instance& inst) {
  const std::size_t g = inst.figures();
  const std::size_t f = inst.fabrics();
  Matrix out(g, std::vector<Count>(f, 0));
  for (const auto& lay : lays) {
    detail::check_lay_dims(lay, inst);
    for (std::size_t i = 0; i < g; ++i) {
      if (lay.counts[i] == 0) continue;
      for (std::size_t j = 0; j < f; ++j) out[i][j] += lay.counts[i] * lay.heights[j];
    }
  }
  return out;
}

inline ValidationReport validate_plan(const CuttingPlan& plan, const Instance& inst) {
  ValidationReport report;
  const std::size_t g = inst.figures();
  const std::size_t f = inst.fabrics();
  bool dims_ok = true;
  for (std::size_t k = 0; k < plan.lays.size(); ++k) {
    const Lay& lay = plan.lays[k];
    const auto idx = static_cast<std::ptrdiff_t>(k);
    if (lay.counts.size() != g || lay.heights.size() != f) {
      report.add(ViolationKind::shape, idx, -1, static_cast<Count>(lay.counts.size()),
                 static_cast<Count>(g), "lay " + std::to_string(k) + " has wrong dimensions");
      dims_ok = false;
      continue;
    }
    bool negative = false;
    for (Count c : lay.counts) negative = negative || c < 0;
    for (Count h : lay.heights) negative = negative || h < 0;
    if (negative) {
      report.add(ViolationKind::shape, idx, -1, -1, 0, "lay " + std::to_string(k) + " has negative entries");
    }
    const Count height = lay.total_height();
    const Count length = pattern_length(lay, inst.lengths);
    if (height <= 0) {
      report.add(ViolationKind::shape, idx, -1, height, 1, "lay " + std::to_string(k) + " has zero height");
    }
    bool any_count = false;
    for (Count c : lay.counts) any_count = any_count || c > 0;
    if (!any_count) {
      report.add(ViolationKind::shape, idx, -1, 0, 1, "lay " + std::to_string(k) + " cuts no templates");
    }
    if (length > inst.bed_length) {
      report.add(ViolationKind::length, idx, -1, length, inst.bed_length,
                 "lay " + std::to_string(k) + " pattern exceeds bed length");
    }
    if (height > inst.bed_height) {
      report.add(ViolationKind::height, idx, -1, height, inst.bed_height,
                 "lay " + std::to_string(k) + " exceeds bed height");
    }
  }
  if (plan.k != plan.lays.size()) {
    report.add(ViolationKind::shape, -1, -1, static_cast<Count>(plan.k),
               static_cast<Count>(plan.lays.size()), "declared lay count differs from lay list");
  }
  if (!dims_ok) return report;

  const Matrix produced = covered_demand(plan.lays, inst);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < f; ++j) {
      if (produced[i][j] != inst.demand[i][j]) {
        report.add(ViolationKind::exactness, static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j),
                   produced[i][j], inst.demand[i][j],
                   "SKU (" + std::to_string(i) + ", " + std::to_string(j) + ") produced " +
                       std::to_string(produced[i][j]) + " != " + std::to_string(inst.demand[i][j]));
      }
    }
  }
  return report;
}

// ceil(total demand volume / bed volume). No feasible plan uses fewer lays.
inline Count volume_lower_bound(const Instance& inst) {
  Count total = 0;
  for (std::size_t i = 0; i < inst.demand.size(); ++i) {
    for (Count s : inst.demand[i]) total += inst.lengths[i] * s;
  }
  const Count bed = inst.bed_length * inst.bed_height;
  return (total + bed - 1) / bed;
}

}  // namespace hfsc

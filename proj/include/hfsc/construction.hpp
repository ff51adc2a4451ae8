#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfsc/knapsack.hpp"
#include "hfsc/model.hpp"

namespace hfsc {

// Admissible layer counts per fabric type, each list strictly descending and
// ending in 0.
struct HeightCandidates {
  std::vector<std::vector<Count>> per_fabric;
};

// Adaptive goals for the next lay: stop searching once a lay reaches
// ref_volume; start the height scan at ref_height.
struct ConstructionTargets {
  double ref_volume = 0.0;
  Count ref_height = 1;
};

class StallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Layer counts worth trying for each fabric given the remaining demand:
// ref_height itself when some SKU still needs at least that many, and every
// smaller height that divides some SKU's remaining demand and lets that SKU
// be finished in one pattern.
inline HeightCandidates create_possible_heights(const Matrix& demand, const std::vector<Count>& lengths,
                                                Count bed_length, Count ref_height) {
  const std::size_t g = demand.size();
  const std::size_t f = g == 0 ? 0 : demand.front().size();
  HeightCandidates out;
  out.per_fabric.resize(f);
  for (std::size_t j = 0; j < f; ++j) {
    auto& ch = out.per_fabric[j];
    bool reaches = false;
    for (std::size_t i = 0; i < g; ++i) reaches = reaches || demand[i][j] >= ref_height;
    if (reaches) ch.push_back(ref_height);
    for (Count ph = ref_height - 1; ph >= 1; --ph) {
      for (std::size_t i = 0; i < g; ++i) {
        const Count s = demand[i][j];
        if (s != 0 && s % ph == 0 && (s / ph) * lengths[i] <= bed_length) {
          ch.push_back(ph);
          break;
        }
      }
    }
    ch.push_back(0);
  }
  return out;
}

// One column per figure; capacity is how many templates the profile can cut
// without overproducing any fabric of that figure.
inline std::vector<Column> create_columns(const Matrix& demand, const std::vector<Count>& lengths,
                                          const std::vector<Count>& profile) {
  if (std::none_of(profile.begin(), profile.end(), [](Count h) { return h > 0; })) {
    throw std::invalid_argument("create_columns: height profile is all zero");
  }
  std::vector<Column> columns(demand.size());
  for (std::size_t i = 0; i < demand.size(); ++i) {
    Count cap = -1;
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (profile[j] == 0) continue;
      const Count q = demand[i][j] / profile[j];
      cap = cap < 0 ? q : std::min(cap, q);
    }
    columns[i] = Column{lengths[i], std::max<Count>(cap, 0), i};
  }
  return columns;
}

// Calls visit(profile) for every vector with profile[j] in per_fabric[j] and
// sum == target. Order: fabric 0 varies slowest, candidates descending.
// Returning false from visit stops the enumeration.
template <typename Visitor>
void enumerate_height_profiles(const HeightCandidates& cands, Count target, Visitor&& visit) {
  const std::size_t f = cands.per_fabric.size();
  if (f == 0 || target < 0) return;
  // reachable[j][s]: fabrics j..f-1 can sum to exactly s.
  std::vector<std::vector<char>> reachable(f + 1, std::vector<char>(static_cast<std::size_t>(target) + 1, 0));
  reachable[f][0] = 1;
  for (std::size_t j = f; j-- > 0;) {
    for (Count s = 0; s <= target; ++s) {
      for (Count h : cands.per_fabric[j]) {
        if (h <= s && reachable[j + 1][static_cast<std::size_t>(s - h)]) {
          reachable[j][static_cast<std::size_t>(s)] = 1;
          break;
        }
      }
    }
  }
  if (!reachable[0][static_cast<std::size_t>(target)]) return;

  std::vector<Count> profile(f, 0);
  bool stopped = false;
  auto recurse = [&](auto&& self, std::size_t j, Count rest) -> void {
    if (j == f) {
      if (!visit(static_cast<const std::vector<Count>&>(profile))) stopped = true;
      return;
    }
    for (Count h : cands.per_fabric[j]) {
      if (h > rest || !reachable[j + 1][static_cast<std::size_t>(rest - h)]) continue;
      profile[j] = h;
      self(self, j + 1, rest - h);
      if (stopped) return;
    }
    profile[j] = 0;
  };
  recurse(recurse, 0, target);
}

inline std::vector<std::vector<Count>> collect_height_profiles(const HeightCandidates& cands, Count target) {
  std::vector<std::vector<Count>> out;
  enumerate_height_profiles(cands, target, [&](const std::vector<Count>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace detail {

// Profile search for one lay. Walks the same profiles in the same order as
// enumerate_height_profiles, but carries per-figure capacities down the
// recursion: fixing another fabric can only lower them, so a subtree whose
// optimistic volume cannot beat the incumbent is skipped.
class LaySearch {
 public:
  LaySearch(const Matrix& demand, const std::vector<Count>& lengths, const HeightCandidates& cands,
            Count bed_length)
      : demand_(demand),
        lengths_(lengths),
        cands_(cands),
        bed_length_(bed_length),
        g_(demand.size()),
        f_(cands.per_fabric.size()),
        caps_((f_ + 1) * g_, 0),
        profile_(f_, 0),
        columns_(g_) {
    max_copies_.resize(g_);
    for (std::size_t i = 0; i < g_; ++i) {
      max_copies_[i] = bed_length / lengths[i];
      columns_[i] = Column{lengths[i], 0, i};
    }
    for (std::size_t i = 0; i < g_; ++i) caps_[i] = max_copies_[i];
  }

  // Scans all profiles summing to height; returns true when the incumbent
  // reached target_volume and the caller should stop.
  bool scan(Count height, double target_volume) {
    height_ = height;
    target_ = target_volume;
    reach_.assign((f_ + 1) * (static_cast<std::size_t>(height) + 1), 0);
    reach_at(f_, 0) = 1;
    for (std::size_t j = f_; j-- > 0;) {
      for (Count s = 0; s <= height; ++s) {
        for (Count h : cands_.per_fabric[j]) {
          if (h <= s && reach_at(j + 1, s - h)) {
            reach_at(j, s) = 1;
            break;
          }
        }
      }
    }
    if (!reach_at(0, height)) return false;
    stop_ = false;
    recurse(0, height, false);
    return stop_;
  }

  const std::optional<Lay>& best() const { return best_; }
  Count best_volume() const { return best_volume_; }

 private:
  char& reach_at(std::size_t j, Count s) { return reach_[j * (static_cast<std::size_t>(height_) + 1) + static_cast<std::size_t>(s)]; }
  Count* caps_at(std::size_t j) { return caps_.data() + j * g_; }

  // Optimistic pattern length from capacities at depth j.
  Count length_bound(std::size_t j) {
    const Count* caps = caps_at(j);
    Count bound = 0;
    for (std::size_t i = 0; i < g_; ++i) {
      bound += lengths_[i] * caps[i];
      if (bound >= bed_length_) return bed_length_;
    }
    return bound;
  }

  // Knapsack optimum with the capacities at depth j; bounds every completion.
  Count knapsack_bound(std::size_t j) {
    const Count* caps = caps_at(j);
    for (std::size_t i = 0; i < g_; ++i) columns_[i].capacity = caps[i];
    return max_used_length(bed_length_, columns_);
  }

  void recurse(std::size_t j, Count rest, bool constrained) {
    if (j == f_) {
      evaluate();
      return;
    }
    if (constrained) {
      if (length_bound(j) * height_ <= best_volume_) return;
      if (j + 1 < f_ && knapsack_bound(j) * height_ <= best_volume_) return;
    }
    const Count* parent = caps_at(j);
    Count* child = caps_at(j + 1);
    for (Count h : cands_.per_fabric[j]) {
      if (h > rest || !reach_at(j + 1, rest - h)) continue;
      profile_[j] = h;
      if (h == 0) {
        std::copy(parent, parent + g_, child);
      } else {
        for (std::size_t i = 0; i < g_; ++i) child[i] = std::min(parent[i], demand_[i][j] / h);
      }
      recurse(j + 1, rest - h, constrained || h > 0);
      if (stop_) return;
    }
    profile_[j] = 0;
  }

  void evaluate() {
    if (length_bound(f_) * height_ <= best_volume_) return;
    const Count used = knapsack_bound(f_);
    if (used * height_ > best_volume_) {
      const KnapsackSolution ks = solve_bounded_knapsack(bed_length_, columns_);
      best_ = Lay{profile_, ks.taken};
      best_volume_ = ks.used_length * height_;
    }
    if (static_cast<double>(best_volume_) >= target_) stop_ = true;
  }

  const Matrix& demand_;
  const std::vector<Count>& lengths_;
  const HeightCandidates& cands_;
  Count bed_length_;
  std::size_t g_;
  std::size_t f_;
  std::vector<Count> max_copies_;
  std::vector<Count> caps_;  // (f + 1) x g, row j = capacities after fixing fabrics < j
  std::vector<Count> profile_;
  std::vector<Column> columns_;
  std::vector<char> reach_;
  Count height_ = 0;
  double target_ = 0.0;
  bool stop_ = false;
  std::optional<Lay> best_;
  Count best_volume_ = 0;
};

}  // namespace detail

// Best lay for the remaining demand, scanning total heights downward from
// targets.ref_height. Returns nullopt when no profile yields any volume.
inline std::optional<Lay> create_lay(const Matrix& demand, const std::vector<Count>& lengths,
                                     const ConstructionTargets& targets, Count bed_length) {
  bool any = false;
  for (const auto& row : demand) any = any || std::any_of(row.begin(), row.end(), [](Count s) { return s != 0; });
  if (!any) throw std::invalid_argument("create_lay: remaining demand is all zero");

  const HeightCandidates cands = create_possible_heights(demand, lengths, bed_length, targets.ref_height);
  detail::LaySearch search(demand, lengths, cands, bed_length);
  for (Count height = targets.ref_height; height > 0; --height) {
    if (static_cast<double>(search.best_volume()) >= targets.ref_volume) break;
    if (height * bed_length <= search.best_volume()) break;
    if (search.scan(height, targets.ref_volume)) break;
  }
  return search.best();
}

inline Count rounded_mean_height(Count height_sum, std::size_t lays, Count bed_height) {
  // round half up: floor((2 * sum + n) / (2 * n))
  const auto n = static_cast<Count>(lays);
  const Count mean = (2 * height_sum + n) / (2 * n);
  return std::clamp<Count>(mean, 1, bed_height);
}

namespace detail {

inline std::string stuck_entries(const Matrix& demand) {
  std::string out;
  for (std::size_t i = 0; i < demand.size(); ++i) {
    for (std::size_t j = 0; j < demand[i].size(); ++j) {
      if (demand[i][j] == 0) continue;
      if (!out.empty()) out += ", ";
      out += "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + std::to_string(demand[i][j]);
    }
  }
  return out;
}

}  // namespace detail

// Greedy sequence of lays that produces `demand` exactly. After each lay the
// targets move to the running mean volume and mean height.
inline std::vector<Lay> create_lays(Matrix demand, const std::vector<Count>& lengths, Count bed_length,
                                    Count bed_height) {
  const ConstructionTargets full{static_cast<double>(bed_length * bed_height), bed_height};
  ConstructionTargets targets = full;
  std::vector<Lay> lays;
  Count volume_sum = 0;
  Count height_sum = 0;

  auto remaining = [&] {
    for (const auto& row : demand) {
      for (Count s : row) {
        if (s != 0) return true;
      }
    }
    return false;
  };

  while (remaining()) {
    std::optional<Lay> lay = create_lay(demand, lengths, targets, bed_length);
    if (!lay) lay = create_lay(demand, lengths, full, bed_length);
    if (!lay) throw StallError("construction stalled; remaining demand " + detail::stuck_entries(demand));

    for (std::size_t i = 0; i < demand.size(); ++i) {
      if (lay->counts[i] == 0) continue;
      for (std::size_t j = 0; j < demand[i].size(); ++j) demand[i][j] -= lay->counts[i] * lay->heights[j];
    }
    const Count height = lay->total_height();
    volume_sum += pattern_length(*lay, lengths) * height;
    height_sum += height;
    lays.push_back(std::move(*lay));

    targets.ref_volume = static_cast<double>(volume_sum) / static_cast<double>(lays.size());
    targets.ref_height = rounded_mean_height(height_sum, lays.size(), bed_height);
  }
  return lays;
}

}  // namespace hfsc

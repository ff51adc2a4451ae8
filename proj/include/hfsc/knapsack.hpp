#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hfsc/model.hpp"

namespace hfsc {

// A template offered to the knapsack: up to `capacity` copies of a piece of
// bed length `length`.
struct Column {
  Count length = 1;
  Count capacity = 0;
  std::size_t figure_index = 0;
};

struct KnapsackSolution {
  std::vector<Count> taken;
  Count used_length = 0;
};

namespace detail {

// Fixed-width set of reachable lengths 0..cap.
class ReachSet {
 public:
  explicit ReachSet(Count cap)
      : bits_(static_cast<std::size_t>(cap) + 1),
        words_((bits_ + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  // this |= this << shift, truncated to cap.
  void or_shifted(std::size_t shift) {
    if (shift >= bits_) return;
    const std::size_t word_shift = shift / 64;
    const std::size_t bit_shift = shift % 64;
    for (std::size_t w = words_.size(); w-- > word_shift;) {
      std::uint64_t v = words_[w - word_shift] << bit_shift;
      if (bit_shift != 0 && w > word_shift) v |= words_[w - word_shift - 1] >> (64 - bit_shift);
      words_[w] |= v;
    }
    trim();
  }

  // Largest reachable length, or -1 when empty.
  Count highest() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
      if (words_[w] != 0) return static_cast<Count>(w * 64 + 63 - std::countl_zero(words_[w]));
    }
    return -1;
  }

 private:
  void trim() {
    const std::size_t tail = bits_ % 64;
    if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

// Adds up to `count` copies of `length` using power-of-two chunks, which
// represent every multiplicity 0..count exactly.
inline void add_bounded_item(ReachSet& reach, Count length, Count count) {
  Count chunk = 1;
  while (count > 0) {
    const Count take = std::min(chunk, count);
    reach.or_shifted(static_cast<std::size_t>(take * length));
    count -= take;
    chunk *= 2;
  }
}

inline Count usable_copies(const Column& c, Count cap) {
  return std::min(c.capacity, cap / c.length);
}

}  // namespace detail

// Optimal used length only; skips witness reconstruction.
inline Count max_used_length(Count cap, std::span<const Column> columns) {
  detail::ReachSet reach(cap);
  reach.set(0);
  const auto full = static_cast<std::size_t>(cap);
  for (const auto& c : columns) {
    const Count copies = detail::usable_copies(c, cap);
    if (copies <= 0) continue;
    detail::add_bounded_item(reach, c.length, copies);
    if (reach.test(full)) return cap;
  }
  return reach.highest();
}

// Bounded knapsack where value equals weight: maximize the bed length used by
// the chosen templates. Among optimal witnesses, columns are filled in
// ascending figure_index order, each with the largest count that keeps the
// optimum reachable.
inline KnapsackSolution solve_bounded_knapsack(Count cap, std::span<const Column> columns) {
  KnapsackSolution out;
  out.taken.assign(columns.size(), 0);
  if (columns.empty() || cap < 1) return out;

  const std::size_t n = columns.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return columns[a].figure_index < columns[b].figure_index;
  });

  // suffix[p] = lengths reachable with columns order[p..n-1].
  std::vector<detail::ReachSet> suffix(n + 1, detail::ReachSet(cap));
  suffix[n].set(0);
  for (std::size_t p = n; p-- > 0;) {
    suffix[p] = suffix[p + 1];
    const Column& c = columns[order[p]];
    const Count copies = detail::usable_copies(c, cap);
    if (copies > 0) detail::add_bounded_item(suffix[p], c.length, copies);
  }

  out.used_length = suffix[0].highest();
  Count remaining = out.used_length;
  for (std::size_t p = 0; p < n && remaining > 0; ++p) {
    const Column& c = columns[order[p]];
    for (Count t = std::min(detail::usable_copies(c, cap), remaining / c.length); t >= 0; --t) {
      if (suffix[p + 1].test(static_cast<std::size_t>(remaining - t * c.length))) {
        out.taken[order[p]] = t;
        remaining -= t * c.length;
        break;
      }
    }
  }
  return out;
}

}  // namespace hfsc

#pragma once

// Domain types for the one-dimensional cutting stock problem and the
// accounting shared by every solver: waste, masters, production, splits.

#include "csplab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace csplab {

using Length = std::int64_t;
using Count = std::int64_t;

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a pattern or solution does not have one count per order.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Upper quantity bound of an order; either a finite count or unbounded.
class MaxQty {
 public:
  constexpr MaxQty() = default;
  constexpr explicit MaxQty(Count value) : value_(value) {}
  static constexpr MaxQty unbounded() { return MaxQty(); }

  constexpr bool bounded() const { return value_.has_value(); }
  constexpr Count value() const { return *value_; }
  constexpr bool admits(Count produced) const { return !value_ || produced <= *value_; }

  friend constexpr bool operator==(const MaxQty&, const MaxQty&) = default;

  std::string str() const { return value_ ? std::to_string(*value_) : "*"; }

 private:
  std::optional<Count> value_;
};

struct Order {
  Length size = 0;
  Count min_qty = 0;
  MaxQty max_qty;

  friend bool operator==(const Order&, const Order&) = default;
};

/// Master width plus orders with strictly decreasing sizes.
class Instance {
 public:
  Instance(Length master_width, std::vector<Order> orders)
      : master_width_(master_width), orders_(std::move(orders)) {
    if (master_width_ < 1) throw InvalidInstance("master width must be positive");
    for (std::size_t j = 0; j < orders_.size(); ++j) {
      const Order& o = orders_[j];
      if (o.size < 1) throw InvalidInstance("order size must be positive");
      if (o.size > master_width_)
        throw InvalidInstance("order size " + std::to_string(o.size) +
                              " exceeds master width " + std::to_string(master_width_));
      if (o.min_qty < 0) throw InvalidInstance("minimum quantity must be nonnegative");
      if (o.max_qty.bounded() && o.max_qty.value() < o.min_qty)
        throw InvalidInstance("minimum quantity exceeds maximum for size " +
                              std::to_string(o.size));
      if (j > 0 && orders_[j - 1].size == o.size)
        throw InvalidInstance("duplicate order size " + std::to_string(o.size));
      if (j > 0 && orders_[j - 1].size < o.size)
        throw InvalidInstance("order sizes must be strictly decreasing");
    }
  }

  Length master_width() const { return master_width_; }
  const std::vector<Order>& orders() const { return orders_; }
  const Order& order(std::size_t j) const { return orders_.at(j); }
  std::size_t order_count() const { return orders_.size(); }

  Length min_size() const { return orders_.empty() ? master_width_ : orders_.back().size; }

  bool equality_constrained() const {
    return std::all_of(orders_.begin(), orders_.end(), [](const Order& o) {
      return o.max_qty.bounded() && o.max_qty.value() == o.min_qty;
    });
  }

  bool any_unbounded() const {
    return std::any_of(orders_.begin(), orders_.end(),
                       [](const Order& o) { return !o.max_qty.bounded(); });
  }

  /// Sum of q_j * w_j, the width that any feasible solution must cut.
  Length demanded_width() const {
    Length total = 0;
    for (const Order& o : orders_) total += o.min_qty * o.size;
    return total;
  }

  /// Same sizes, with every upper bound dropped.
  Instance one_sided() const {
    auto orders = orders_;
    for (Order& o : orders) o.max_qty = MaxQty::unbounded();
    return Instance(master_width_, std::move(orders));
  }

  /// Same sizes, with Q_j = q_j.
  Instance equality() const {
    auto orders = orders_;
    for (Order& o : orders) o.max_qty = MaxQty(o.min_qty);
    return Instance(master_width_, std::move(orders));
  }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Length master_width_;
  std::vector<Order> orders_;
};

/// Item counts per order for one master; waste is derived.
class Pattern {
 public:
  Pattern(const Instance& instance, std::vector<Count> counts) : counts_(std::move(counts)) {
    if (counts_.size() != instance.order_count())
      throw DimensionError("pattern has " + std::to_string(counts_.size()) + " counts, instance has " +
                           std::to_string(instance.order_count()) + " orders");
    Length used = 0;
    bool nonzero = false;
    for (std::size_t j = 0; j < counts_.size(); ++j) {
      if (counts_[j] < 0) throw std::invalid_argument("pattern counts must be nonnegative");
      used += counts_[j] * instance.order(j).size;
      nonzero = nonzero || counts_[j] > 0;
    }
    if (!nonzero) throw std::invalid_argument("pattern must contain at least one item");
    if (used > instance.master_width())
      throw std::invalid_argument("pattern width " + std::to_string(used) + " exceeds master width");
    waste_ = instance.master_width() - used;
  }

  const std::vector<Count>& counts() const { return counts_; }
  Count count(std::size_t j) const { return counts_[j]; }
  Length waste() const { return waste_; }
  std::size_t size() const { return counts_.size(); }

  Count items() const {
    Count n = 0;
    for (Count a : counts_) n += a;
    return n;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.counts_ == b.counts_; }

  /// Lexicographically descending counts come first.
  friend bool canonical_before(const Pattern& a, const Pattern& b) { return a.counts_ > b.counts_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t j = 0; j < counts_.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(counts_[j]);
    }
    return s + ")";
  }

 private:
  std::vector<Count> counts_;
  Length waste_ = 0;
};

struct SolutionEntry {
  Pattern pattern;
  Count reps = 0;

  friend bool operator==(const SolutionEntry&, const SolutionEntry&) = default;
};

/// Distinct patterns with positive repetition counts.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::vector<SolutionEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].reps < 1) throw std::invalid_argument("repetitions must be positive");
      for (std::size_t k = 0; k < i; ++k)
        if (entries_[k].pattern == entries_[i].pattern)
          throw std::invalid_argument("duplicate pattern " + entries_[i].pattern.str() + " in solution");
    }
  }

  const std::vector<SolutionEntry>& entries() const { return entries_; }
  std::size_t pattern_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Count masters() const {
    Count n = 0;
    for (const auto& e : entries_) n += e.reps;
    return n;
  }

  Length waste() const {
    Length w = 0;
    for (const auto& e : entries_) w += e.reps * e.pattern.waste();
    return w;
  }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  friend Solution canonicalize(const Solution& solution);
  struct Unchecked {};
  Solution(Unchecked, std::vector<SolutionEntry> entries) : entries_(std::move(entries)) {}

  std::vector<SolutionEntry> entries_;
};

/// Merges equal patterns and sorts entries by counts, descending.
inline Solution canonicalize(const Solution& solution) {
  std::vector<SolutionEntry> merged;
  for (const auto& e : solution.entries()) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const SolutionEntry& m) { return m.pattern == e.pattern; });
    if (it == merged.end())
      merged.push_back(e);
    else
      it->reps += e.reps;
  }
  std::sort(merged.begin(), merged.end(), [](const SolutionEntry& a, const SolutionEntry& b) {
    return canonical_before(a.pattern, b.pattern);
  });
  return Solution(Solution::Unchecked{}, std::move(merged));
}

/// Builds a canonical solution from (counts, reps) pairs, merging repeats.
inline Solution make_solution(const Instance& instance,
                              const std::vector<std::pair<std::vector<Count>, Count>>& items) {
  std::vector<SolutionEntry> entries;
  for (const auto& [counts, reps] : items) {
    if (reps == 0) continue;
    Pattern p(instance, counts);
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const SolutionEntry& e) { return e.pattern == p; });
    if (it == entries.end())
      entries.push_back({std::move(p), reps});
    else
      it->reps += reps;
  }
  return canonicalize(Solution(std::move(entries)));
}

inline void check_dimensions(const Instance& instance, const Solution& solution) {
  for (const auto& e : solution.entries())
    if (e.pattern.size() != instance.order_count())
      throw DimensionError("solution pattern " + e.pattern.str() + " does not match " +
                           std::to_string(instance.order_count()) + " orders");
}

inline std::vector<Count> produced(const Instance& instance, const Solution& solution) {
  check_dimensions(instance, solution);
  std::vector<Count> out(instance.order_count(), 0);
  for (const auto& e : solution.entries())
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += e.pattern.count(j) * e.reps;
  return out;
}

struct OrderVerdict {
  Count produced = 0;
  bool within_bounds = false;
};

struct Validation {
  std::vector<OrderVerdict> orders;
  bool feasible = true;
};

inline Validation validate_solution(const Instance& instance, const Solution& solution) {
  Validation v;
  for (std::size_t j = 0; const Count p : produced(instance, solution)) {
    const Order& o = instance.order(j++);
    const bool ok = p >= o.min_qty && o.max_qty.admits(p);
    v.orders.push_back({p, ok});
    v.feasible = v.feasible && ok;
  }
  return v;
}

struct SolutionSummary {
  Count masters = 0;
  Length total_waste = 0;
  Rational percent_waste;  // a fraction in [0, 1]; render with to_percent_string
  std::vector<Count> produced;
  std::vector<Count> split_profile;
  std::size_t pattern_count = 0;
};

inline SolutionSummary summarize(const Instance& instance, const Solution& solution) {
  SolutionSummary s;
  s.produced = produced(instance, solution);
  s.masters = solution.masters();
  s.total_waste = solution.waste();
  s.pattern_count = solution.pattern_count();
  s.percent_waste = s.masters == 0 ? Rational(0)
                                   : Rational(s.total_waste, s.masters * instance.master_width());
  s.split_profile.assign(instance.order_count(), 0);
  for (const auto& e : solution.entries())
    for (std::size_t j = 0; j < s.split_profile.size(); ++j)
      if (e.pattern.count(j) > 0) ++s.split_profile[j];
  return s;
}

}  // namespace csplab

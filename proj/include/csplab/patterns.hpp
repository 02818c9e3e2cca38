#pragma once

// Pattern enumeration and the pricing knapsack.

#include "csplab/core.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace csplab {

enum class PatternFilter { AllFeasible, MaximalOnly };

struct EnumerationMode {
  PatternFilter filter = PatternFilter::AllFeasible;
  bool cap_by_max_qty = false;  // a_j <= Q_j when Q_j is bounded
  std::size_t max_patterns = 10'000'000;
};

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  explicit EnumerationLimitExceeded(std::size_t limit)
      : std::runtime_error("pattern enumeration exceeded the limit of " + std::to_string(limit) +
                           " patterns") {}
};

/// Largest count of order j a single master can hold, optionally capped by Q_j.
inline Count count_upper_bound(const Instance& instance, std::size_t j, bool cap_by_max_qty) {
  const Order& o = instance.order(j);
  Count ub = instance.master_width() / o.size;
  if (cap_by_max_qty && o.max_qty.bounded()) ub = std::min(ub, o.max_qty.value());
  return ub;
}

inline bool is_maximal(const Instance& instance, const Pattern& pattern) {
  if (pattern.size() != instance.order_count())
    throw DimensionError("pattern does not match instance order count");
  return pattern.waste() < instance.min_size();
}

namespace detail {

template <typename Visit>
void enumerate_counts(const Instance& instance, const std::vector<Count>& ub, Visit&& visit) {
  const std::size_t m = instance.order_count();
  std::vector<Count> counts(m, 0);
  // Depth-first with counts descending at each level yields lexicographically
  // descending output.
  auto rec = [&](auto&& self, std::size_t j, Length room) -> void {
    if (j == m) {
      visit(counts, room);
      return;
    }
    const Length w = instance.order(j).size;
    const Count top = std::min(ub[j], room / w);
    for (Count a = top; a >= 0; --a) {
      counts[j] = a;
      self(self, j + 1, room - a * w);
    }
    counts[j] = 0;
  };
  rec(rec, 0, instance.master_width());
}

}  // namespace detail

/// Every nonempty feasible pattern, lexicographically descending.
inline std::vector<Pattern> enumerate_patterns(const Instance& instance, EnumerationMode mode = {}) {
  std::vector<Count> ub(instance.order_count());
  for (std::size_t j = 0; j < ub.size(); ++j) ub[j] = count_upper_bound(instance, j, mode.cap_by_max_qty);

  std::vector<Pattern> out;
  const Length min_size = instance.min_size();
  detail::enumerate_counts(instance, ub, [&](const std::vector<Count>& counts, Length waste) {
    if (waste == instance.master_width()) return;  // empty pattern
    if (mode.filter == PatternFilter::MaximalOnly && waste >= min_size) return;
    if (out.size() >= mode.max_patterns) throw EnumerationLimitExceeded(mode.max_patterns);
    out.emplace_back(instance, counts);
  });
  return out;
}

namespace detail {

/// Bounded knapsack over capacities 0..W. Returns the lexicographically
/// largest count vector among those of maximum value.
template <typename Value>
std::vector<Count> knapsack_lex_max(const Instance& instance, const std::vector<Value>& values,
                                    const std::vector<Count>& ub) {
  const std::size_t m = instance.order_count();
  const auto cap = static_cast<std::size_t>(instance.master_width());
  // best[j][c]: best value from orders j..m-1 within capacity c.
  std::vector<std::vector<Value>> best(m + 1, std::vector<Value>(cap + 1, Value(0)));
  for (std::size_t j = m; j-- > 0;) {
    const auto w = static_cast<std::size_t>(instance.order(j).size);
    for (std::size_t c = 0; c <= cap; ++c) {
      Value v = best[j + 1][c];
      Value take = 0;
      for (Count a = 1; a <= ub[j] && static_cast<std::size_t>(a) * w <= c; ++a) {
        take += values[j];
        Value cand = take + best[j + 1][c - static_cast<std::size_t>(a) * w];
        if (cand > v) v = cand;
      }
      best[j][c] = v;
    }
  }
  std::vector<Count> counts(m, 0);
  std::size_t c = cap;
  for (std::size_t j = 0; j < m; ++j) {
    const auto w = static_cast<std::size_t>(instance.order(j).size);
    const Count top = std::min<Count>(ub[j], static_cast<Count>(c / w));
    for (Count a = top; a >= 0; --a) {
      Value cand = Value(a) * values[j] + best[j + 1][c - static_cast<std::size_t>(a) * w];
      if (cand == best[j][c]) {
        counts[j] = a;
        c -= static_cast<std::size_t>(a) * w;
        break;
      }
    }
  }
  return counts;
}

}  // namespace detail

struct PricedPattern {
  Pattern pattern;
  Rational value;
};

inline Rational pattern_value(const Pattern& pattern, const std::vector<Rational>& prices) {
  Rational v = 0;
  for (std::size_t j = 0; j < pattern.size(); ++j)
    if (pattern.count(j) != 0) v += prices[j] * pattern.count(j);
  return v;
}

/// Exact pricing step: the feasible pattern maximizing sum_j a_j * price_j.
/// Prices are scaled to integers by their common denominator, so the dynamic
/// program runs on integers with no loss of exactness.
inline PricedPattern best_pattern_for_prices(const Instance& instance, const std::vector<Rational>& prices,
                                             bool cap_by_max_qty = false) {
  const std::size_t m = instance.order_count();
  if (prices.size() != m) throw DimensionError("price vector does not match order count");
  BigInt denom = 1;
  for (const Rational& p : prices) {
    if (p < 0) throw std::invalid_argument("prices must be nonnegative");
    denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(p));
  }
  std::vector<Count> ub(m);
  for (std::size_t j = 0; j < m; ++j) ub[j] = count_upper_bound(instance, j, cap_by_max_qty);

  std::vector<BigInt> scaled(m);
  BigInt bound = 0;
  for (std::size_t j = 0; j < m; ++j) {
    scaled[j] = boost::multiprecision::numerator(prices[j]) * (denom / boost::multiprecision::denominator(prices[j]));
    bound += scaled[j] * ub[j];
  }

  std::vector<Count> counts;
  if (bound < BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small(m);
    for (std::size_t j = 0; j < m; ++j) small[j] = to_int64(scaled[j]);
    counts = detail::knapsack_lex_max(instance, small, ub);
  } else {
    counts = detail::knapsack_lex_max(instance, scaled, ub);
  }
  Pattern p(instance, counts);  // throws if nothing fits (all caps zero)
  Rational value = pattern_value(p, prices);
  return {std::move(p), std::move(value)};
}

/// Pattern with the largest used width subject to per-order limits, or
/// nullopt when no item is allowed. Ties go to the lexicographically largest.
inline std::optional<std::vector<Count>> max_fill_counts(const Instance& instance, const std::vector<Count>& limits) {
  const std::size_t m = instance.order_count();
  std::vector<Count> ub(m);
  std::vector<std::int64_t> values(m);
  bool any = false;
  for (std::size_t j = 0; j < m; ++j) {
    ub[j] = std::min<Count>(limits[j], instance.master_width() / instance.order(j).size);
    values[j] = instance.order(j).size;
    any = any || ub[j] > 0;
  }
  if (!any) return std::nullopt;
  return detail::knapsack_lex_max(instance, values, ub);
}

}  // namespace csplab

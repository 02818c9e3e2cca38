#pragma once

#include "csplab/csplab.hpp"

#include <random>

namespace csplab::testing {

inline Instance eq(Length width, std::vector<std::pair<Length, Count>> orders) {
  return equality_instance(width, orders);
}

inline Instance one_sided(Length width, std::vector<std::pair<Length, Count>> orders) {
  return equality_instance(width, orders).one_sided();
}

// Small random instance: m distinct sizes in [1, W], demands in [lo, hi].
inline Instance random_instance(std::mt19937_64& rng, std::size_t m_max, Length w_max, Count q_lo, Count q_hi,
                                bool equality) {
  std::uniform_int_distribution<Length> width(2, w_max);
  const Length W = width(rng);
  const std::size_t m = std::min<std::size_t>(std::uniform_int_distribution<std::size_t>(1, m_max)(rng),
                                              static_cast<std::size_t>(W));
  std::vector<Length> sizes;
  std::uniform_int_distribution<Length> size(1, W);
  while (sizes.size() < m) {
    Length s = size(rng);
    if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) sizes.push_back(s);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  std::uniform_int_distribution<Count> qty(q_lo, q_hi);
  std::vector<Order> orders;
  for (Length s : sizes) {
    Count q = qty(rng);
    orders.push_back({s, q, equality ? MaxQty(q) : MaxQty::unbounded()});
  }
  return Instance(W, std::move(orders));
}

// Accounting identity: total waste = masters * W - sum produced_j * w_j.
inline bool accounting_holds(const Instance& instance, const Solution& s) {
  const SolutionSummary sum = summarize(instance, s);
  Length used = 0;
  for (std::size_t j = 0; j < instance.order_count(); ++j) used += sum.produced[j] * instance.order(j).size;
  return sum.total_waste == sum.masters * instance.master_width() - used;
}

inline bool canonical_fixed_point(const Solution& s) {
  const Solution c = canonicalize(s);
  return c == s && canonicalize(c) == c;
}

}  // namespace csplab::testing

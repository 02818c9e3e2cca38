#pragma once

// Pattern-count minimisation among waste-optimal solutions, order-splitting
// analysis and the conjecture scan over pattern counts.
//
// Both searches are two-stage: the optimal waste comes from solve_exact, then
// a depth-first search looks for a solution with that exact waste and at most
// k distinct patterns (or at most t patterns containing a given order).

#include "csplab/core.hpp"
#include "csplab/exact.hpp"
#include "csplab/patterns.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace csplab {

/// ceil(sum_j w_j / W): every order appears in some pattern and a pattern
/// holds at most W of width.
inline Count pattern_lower_bound(const Instance& instance) {
  Length total = 0;
  for (const Order& o : instance.orders()) total += o.size;
  return ceil_div(total, instance.master_width());
}

enum class PatminStatus { ProvedOptimal, LowerBoundOnly };

inline const char* to_string(PatminStatus s) {
  return s == PatminStatus::ProvedOptimal ? "proved_optimal" : "lower_bound_only";
}

struct PatminOptions {
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  std::size_t memo_limit = 4'000'000;  // remembered dead search states
};

struct PatminReport {
  Length optimal_waste = 0;
  Count optimal_masters = 0;       // masters of the witness
  std::size_t min_pattern_count = 0;  // k of the witness
  Solution witness;
  PatminStatus status = PatminStatus::ProvedOptimal;
  std::size_t proven_lower_bound = 0;  // no waste-optimal solution has fewer patterns
  std::size_t nodes = 0;
};

class PatminInfeasible : public std::runtime_error {
 public:
  PatminInfeasible() : std::runtime_error("instance has no feasible solution") {}
};

namespace detail {

struct SearchTimeout {};

/// Depth-first search for a solution with total waste exactly `waste_budget`
/// and at most `slots` distinct patterns.
///
/// Candidate patterns for the next slot must contain the first order that
/// still has a deficit. On equality-constrained instances such a pattern
/// cannot contain an earlier order, so patterns are grouped by their first
/// order and each group is walked in increasing position: every set of
/// patterns is generated once. With slack in the bounds every pattern
/// containing the focus order is a candidate.
class PatternCountSearch {
 public:
  PatternCountSearch(const Instance& instance, Length waste_budget, std::optional<Count> master_cap,
                     const Deadline& deadline, std::size_t memo_limit)
      : inst_(instance),
        m_(instance.order_count()),
        equality_(instance.equality_constrained()),
        waste_budget_(waste_budget),
        master_cap_(master_cap),
        deadline_(deadline),
        memo_limit_(memo_limit) {
    for (const Pattern& p : enumerate_patterns(instance, {PatternFilter::AllFeasible, true}))
      if (p.waste() <= waste_budget) pool_.push_back(p);
    std::stable_sort(pool_.begin(), pool_.end(), [](const Pattern& a, const Pattern& b) { return a.waste() < b.waste(); });
    groups_.assign(m_, {});
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (pool_[i].count(j) == 0) continue;
        groups_[j].push_back(i);
        if (equality_) break;  // first order only
      }
    }
    for (const Pattern& p : pool_) index_.emplace(p.counts(), &p - pool_.data());
    masks_.assign(pool_.size(), 0);
    if (m_ <= 64)
      for (std::size_t i = 0; i < pool_.size(); ++i)
        for (std::size_t j = 0; j < m_; ++j)
          if (pool_[i].count(j) > 0) masks_[i] |= std::uint64_t{1} << j;
    if (equality_) {
      // waste = W * masters - demanded width, so the master count is fixed.
      masters_target_ = (waste_budget + inst_.demanded_width()) / inst_.master_width();
    }
  }

  std::size_t nodes() const { return nodes_; }

  /// Solution with at most `slots` patterns, or nullopt when none exists.
  /// Throws SearchTimeout.
  std::optional<Solution> run(std::size_t slots) {
    deficit_.assign(m_, 0);
    room_.assign(m_, 0);
    for (std::size_t j = 0; j < m_; ++j) {
      const Order& o = inst_.order(j);
      deficit_[j] = o.min_qty;
      room_[j] = o.max_qty.bounded() ? o.max_qty.value() : kUnbounded;
    }
    chosen_.clear();
    used_.assign(pool_.size(), false);
    if (dfs(slots, 0, 0, m_, 0)) {
      std::vector<std::pair<std::vector<Count>, Count>> items;
      for (const auto& [idx, reps] : chosen_) items.emplace_back(pool_[idx].counts(), reps);
      return make_solution(inst_, items);
    }
    return std::nullopt;
  }

 private:
  static constexpr Count kUnbounded = std::numeric_limits<Count>::max() / 4;

  std::string memo_key(std::size_t slots, Count masters, std::size_t focus, std::size_t start) const {
    std::string key;
    key.reserve(8 * (m_ + 4));
    auto put = [&](std::uint64_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
    for (Count d : deficit_) put(static_cast<std::uint64_t>(d));
    put(slots);
    put(static_cast<std::uint64_t>(masters));
    put(focus);
    put(start);
    return key;
  }

  void apply(std::size_t idx, Count reps, int sign) {
    const Pattern& p = pool_[idx];
    for (std::size_t j = 0; j < m_; ++j) {
      if (p.count(j) == 0) continue;
      deficit_[j] -= sign * reps * p.count(j);
      if (room_[j] != kUnbounded) room_[j] -= sign * reps * p.count(j);
    }
  }

  bool last_slot_completion(Count masters_left) {
    Count reps = masters_left;
    if (reps <= 0) return false;
    std::vector<Count> counts(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      const Count d = std::max<Count>(0, deficit_[j]);
      if (d % reps != 0) return false;
      counts[j] = d / reps;
    }
    auto it = index_.find(counts);
    if (it == index_.end() || used_[it->second]) return false;
    chosen_.emplace_back(it->second, reps);
    return true;
  }

  // Equality, two slots left: the last pattern repeats t = masters_left - x
  // times, so t divides the deficit of every order the first pattern lacks.
  // Only those t are tried.
  bool two_slot_completion(const std::vector<std::size_t>& group, std::size_t start, Count masters_left) {
    const std::uint64_t open = open_mask();
    for (std::size_t pos = start; pos < group.size(); ++pos) {
      const std::size_t idx = group[pos];
      if (used_[idx] || (masks_[idx] & ~open) != 0) continue;
      const Pattern& p = pool_[idx];
      Count xmax = masters_left;
      for (std::size_t j = 0; j < m_ && xmax >= 1; ++j)
        if (p.count(j) > 0) xmax = std::min(xmax, deficit_[j] / p.count(j));
      if (xmax < 1) continue;
      Count g = 0;  // deficits of the orders this pattern lacks
      for (std::size_t j = 0; j < m_; ++j)
        if (p.count(j) == 0 && deficit_[j] > 0) g = std::gcd(g, deficit_[j]);
      auto attempt = [&](Count x) {
        apply(idx, x, +1);
        used_[idx] = true;
        chosen_.emplace_back(idx, x);
        ++nodes_;
        bool ok = false;
        if (x == masters_left) {
          ok = std::all_of(deficit_.begin(), deficit_.end(), [](Count d) { return d == 0; });
        } else {
          ok = last_slot_completion(masters_left - x);
        }
        if (ok) return true;
        chosen_.pop_back();
        used_[idx] = false;
        apply(idx, x, -1);
        return false;
      };
      if (g == 0) {
        for (Count x = xmax; x >= 1; --x)
          if (attempt(x)) return true;
        continue;
      }
      // t = masters_left - x divides g; largest x first
      const Count t_hi = std::min(g, masters_left - 1);
      for (Count t = std::max<Count>(1, masters_left - xmax); t <= t_hi; ++t)
        if (g % t == 0 && attempt(masters_left - t)) return true;
    }
    return false;
  }

  // Orders with a deficit; equality patterns outside it overproduce.
  std::uint64_t open_mask() const {
    if (!equality_ || m_ > 64) return ~std::uint64_t{0};
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < m_; ++j)
      if (deficit_[j] > 0) mask |= std::uint64_t{1} << j;
    return mask;
  }

  // `start` indexes into the focus order's group; only meaningful while the
  // focus order is `prev_focus`.
  bool dfs(std::size_t slots, Count masters, Length waste, std::size_t prev_focus, std::size_t start) {
    if ((++nodes_ & 0x3ff) == 0 && deadline_.expired()) throw SearchTimeout{};

    std::size_t focus = m_;
    Length remaining_width = 0;
    Length deficit_sizes = 0;
    for (std::size_t j = 0; j < m_; ++j) {
      if (deficit_[j] > 0) {
        if (focus == m_) focus = j;
        remaining_width += deficit_[j] * inst_.order(j).size;
        deficit_sizes += inst_.order(j).size;
      }
    }
    if (focus == m_) return waste == waste_budget_;
    if (slots == 0) return false;
    if (ceil_div(deficit_sizes, inst_.master_width()) > static_cast<Count>(slots)) return false;

    Count masters_left = kUnbounded;
    if (equality_) {
      masters_left = masters_target_ - masters;
      if (remaining_width > masters_left * inst_.master_width()) return false;
      if (slots == 1) return last_slot_completion(masters_left);
    } else if (master_cap_) {
      masters_left = *master_cap_ - masters;
      if (masters_left <= 0) return false;
    }

    if (focus != prev_focus) start = 0;
    std::string key;
    if (equality_ && slots > 2) {
      key = memo_key(slots, masters, focus, start);
      if (dead_.count(key)) return false;
    }

    const std::vector<std::size_t>& group = groups_[focus];
    if (equality_ && slots == 2) {
      return two_slot_completion(group, start, masters_left);
    }
    const std::uint64_t open = open_mask();
    for (std::size_t pos = start; pos < group.size(); ++pos) {
      const std::size_t idx = group[pos];
      if (used_[idx] || (masks_[idx] & ~open) != 0) continue;
      const Pattern& p = pool_[idx];
      Count xmax = masters_left;
      Count useful = 0;
      for (std::size_t j = 0; j < m_; ++j) {
        const Count a = p.count(j);
        if (a == 0) continue;
        if (room_[j] != kUnbounded) xmax = std::min(xmax, room_[j] / a);
        if (deficit_[j] > 0) useful = std::max(useful, ceil_div(deficit_[j], a));
      }
      xmax = std::min(xmax, useful);
      if (p.waste() > 0) xmax = std::min<Count>(xmax, (waste_budget_ - waste) / p.waste());
      for (Count x = xmax; x >= 1; --x) {
        apply(idx, x, +1);
        used_[idx] = true;
        chosen_.emplace_back(idx, x);
        const bool found = dfs(slots - 1, masters + x, waste + x * p.waste(), focus, equality_ ? pos + 1 : 0);
        if (found) return true;
        chosen_.pop_back();
        used_[idx] = false;
        apply(idx, x, -1);
      }
    }
    if (equality_ && dead_.size() < memo_limit_) dead_.insert(std::move(key));
    return false;
  }

  const Instance& inst_;
  std::size_t m_;
  bool equality_;
  Length waste_budget_;
  std::optional<Count> master_cap_;
  Count masters_target_ = 0;
  const Deadline& deadline_;
  std::size_t memo_limit_;
  std::vector<Pattern> pool_;
  std::vector<std::vector<std::size_t>> groups_;
  std::map<std::vector<Count>, std::size_t> index_;
  std::vector<std::uint64_t> masks_;  // orders present, when m <= 64
  std::vector<Count> deficit_, room_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, Count>> chosen_;
  std::unordered_set<std::string> dead_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Fewest distinct patterns over all waste-optimal solutions.
inline PatminReport min_patterns(const Instance& instance, const PatminOptions& options = {}) {
  const Deadline deadline(options.time_limit_seconds);
  SolveOptions solve_opts;
  solve_opts.time_limit_seconds = options.time_limit_seconds;
  const SolveReport stage1 = solve_exact(instance, Objective::MinWaste, solve_opts);
  if (stage1.status == SolveStatus::Infeasible) throw PatminInfeasible();

  PatminReport report;
  report.optimal_waste = stage1.objective_value;
  report.witness = stage1.solution;
  report.optimal_masters = stage1.solution.masters();
  report.min_pattern_count = stage1.solution.pattern_count();
  report.proven_lower_bound = static_cast<std::size_t>(pattern_lower_bound(instance));
  if (stage1.has_solution) report.proven_lower_bound = std::min(report.proven_lower_bound, report.min_pattern_count);
  report.nodes = stage1.nodes;
  if (stage1.status == SolveStatus::TimeLimit) {
    report.status = PatminStatus::LowerBoundOnly;
    return report;
  }
  if (instance.demanded_width() == 0) {
    report.proven_lower_bound = 0;
    return report;
  }

  detail::PatternCountSearch search(instance, report.optimal_waste, stage1.master_cap, deadline, options.memo_limit);
  try {
    for (std::size_t k = report.proven_lower_bound; k < report.min_pattern_count; ++k) {
      if (auto found = search.run(k)) {
        report.witness = *found;
        report.optimal_masters = found->masters();
        report.min_pattern_count = found->pattern_count();
        break;
      }
      report.proven_lower_bound = k + 1;
    }
  } catch (const detail::SearchTimeout&) {
    report.status = PatminStatus::LowerBoundOnly;
    report.nodes += search.nodes();
    return report;
  }
  report.proven_lower_bound = report.min_pattern_count;
  report.nodes += search.nodes();
  return report;
}

struct WitnessCheck {
  bool feasible = false;
  Length waste = 0;
  Length optimal_waste = 0;
  bool waste_optimal = false;
  std::size_t pattern_count = 0;
  SolveStatus solver_status = SolveStatus::ProvedOptimal;
};

/// Checks a stored solution: feasibility and waste equal to the proven optimum.
inline WitnessCheck verify_witness(const Instance& instance, const Solution& witness,
                                   double time_limit_seconds = std::numeric_limits<double>::infinity()) {
  WitnessCheck c;
  c.feasible = validate_solution(instance, witness).feasible;
  c.waste = witness.waste();
  c.pattern_count = witness.pattern_count();
  SolveOptions opts;
  opts.time_limit_seconds = time_limit_seconds;
  opts.tie_break = false;
  const SolveReport r = solve_exact(instance, Objective::MinWaste, opts);
  c.solver_status = r.status;
  c.optimal_waste = r.objective_value;
  c.waste_optimal = r.status == SolveStatus::ProvedOptimal && c.feasible && c.waste == c.optimal_waste;
  return c;
}

struct SplitReport {
  std::size_t order_index = 0;
  std::size_t min_appearances = 0;
  Solution witness;
  Length optimal_waste = 0;
  PatminStatus status = PatminStatus::ProvedOptimal;
  std::size_t proven_lower_bound = 0;
};

namespace detail {

/// Fixes the patterns that contain order j (at most t of them) and completes
/// every other order optimally with patterns free of j.
class SplitSearch {
 public:
  SplitSearch(const Instance& instance, std::size_t order, Length waste_budget, std::optional<Count> master_cap,
              const Deadline& deadline)
      : inst_(instance),
        m_(instance.order_count()),
        j_(order),
        waste_budget_(waste_budget),
        master_cap_(master_cap),
        deadline_(deadline) {
    for (const Pattern& p : enumerate_patterns(instance, {PatternFilter::AllFeasible, true}))
      if (p.count(j_) > 0 && p.waste() <= waste_budget) pool_.push_back(p);
    std::stable_sort(pool_.begin(), pool_.end(), [](const Pattern& a, const Pattern& b) { return a.waste() < b.waste(); });
    if (instance.equality_constrained())
      masters_target_ = (waste_budget + instance.demanded_width()) / instance.master_width();
  }

  std::optional<Solution> run(std::size_t limit) {
    prod_.assign(m_, 0);
    chosen_.clear();
    return dfs(limit, 0, 0, 0);
  }

 private:
  Count masters_left(Count masters) const {
    if (masters_target_) return *masters_target_ - masters;
    if (master_cap_) return *master_cap_ - masters;
    return std::numeric_limits<Count>::max() / 4;
  }

  std::optional<Solution> complete(Count masters, Length waste) {
    std::vector<Order> rest;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == j_) continue;
      const Order& o = inst_.order(i);
      Order r;
      r.size = o.size;
      r.min_qty = std::max<Count>(0, o.min_qty - prod_[i]);
      r.max_qty = o.max_qty.bounded() ? MaxQty(o.max_qty.value() - prod_[i]) : MaxQty::unbounded();
      rest.push_back(r);
    }
    std::vector<Count> key;
    for (const Order& o : rest) {
      key.push_back(o.min_qty);
      key.push_back(o.max_qty.bounded() ? o.max_qty.value() : -1);
    }
    key.push_back(masters_left(masters));
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::optional<Solution> best;
      const Instance residual(inst_.master_width(), rest);
      SolveOptions opts;
      opts.time_limit_seconds = deadline_.remaining_seconds();
      opts.tie_break = false;
      SolveReport r = solve_exact(residual, Objective::MinWaste, opts);
      if (r.status == SolveStatus::TimeLimit) throw SearchTimeout{};
      if (r.status == SolveStatus::ProvedOptimal && r.solution.masters() <= masters_left(masters)) best = r.solution;
      it = cache_.emplace(std::move(key), std::move(best)).first;
    }
    if (!it->second || waste + it->second->waste() != waste_budget_) return std::nullopt;
    if (masters_target_ && masters + it->second->masters() != *masters_target_) return std::nullopt;

    std::vector<std::pair<std::vector<Count>, Count>> items;
    for (const auto& [idx, reps] : chosen_) items.emplace_back(pool_[idx].counts(), reps);
    for (const auto& e : it->second->entries()) {
      std::vector<Count> counts;
      for (std::size_t i = 0, r = 0; i < m_; ++i) counts.push_back(i == j_ ? 0 : e.pattern.count(r++));
      items.emplace_back(std::move(counts), e.reps);
    }
    return make_solution(inst_, items);
  }

  std::optional<Solution> dfs(std::size_t limit, std::size_t start, Count masters, Length waste) {
    if (deadline_.expired()) throw SearchTimeout{};
    const Order& target = inst_.order(j_);
    if (prod_[j_] >= target.min_qty)
      if (auto s = complete(masters, waste)) return s;
    if (limit == 0) return std::nullopt;

    Length remaining_width = 0;
    for (std::size_t i = 0; i < m_; ++i)
      remaining_width += std::max<Count>(0, inst_.order(i).min_qty - prod_[i]) * inst_.order(i).size;
    if (masters_target_ && masters + ceil_div(remaining_width, inst_.master_width()) > *masters_target_)
      return std::nullopt;

    for (std::size_t pos = start; pos < pool_.size(); ++pos) {
      const Pattern& p = pool_[pos];
      Count xmax = masters_left(masters);
      Count useful = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        const Count a = p.count(i);
        if (a == 0) continue;
        const Order& o = inst_.order(i);
        if (o.max_qty.bounded()) xmax = std::min(xmax, (o.max_qty.value() - prod_[i]) / a);
        if (o.min_qty > prod_[i]) useful = std::max(useful, ceil_div(o.min_qty - prod_[i], a));
      }
      // Copies beyond the point where every order of p is covered add waste
      // without helping feasibility.
      xmax = std::min(xmax, useful);
      if (p.waste() > 0) xmax = std::min<Count>(xmax, (waste_budget_ - waste) / p.waste());
      for (Count x = xmax; x >= 1; --x) {
        for (std::size_t i = 0; i < m_; ++i) prod_[i] += x * p.count(i);
        chosen_.emplace_back(pos, x);
        auto s = dfs(limit - 1, pos + 1, masters + x, waste + x * p.waste());
        chosen_.pop_back();
        for (std::size_t i = 0; i < m_; ++i) prod_[i] -= x * p.count(i);
        if (s) return s;
      }
    }
    return std::nullopt;
  }

  const Instance& inst_;
  std::size_t m_;
  std::size_t j_;
  Length waste_budget_;
  std::optional<Count> master_cap_;
  std::optional<Count> masters_target_;
  const Deadline& deadline_;
  std::vector<Pattern> pool_;
  std::vector<Count> prod_;
  std::vector<std::pair<std::size_t, Count>> chosen_;
  std::map<std::vector<Count>, std::optional<Solution>> cache_;
};

}  // namespace detail

/// Fewest distinct patterns containing order `order` over all waste-optimal
/// solutions.
inline SplitReport min_split_for_order(const Instance& instance, std::size_t order,
                                       double time_limit_seconds = std::numeric_limits<double>::infinity()) {
  if (order >= instance.order_count()) throw std::out_of_range("order index out of range");
  const Deadline deadline(time_limit_seconds);
  SolveOptions solve_opts;
  solve_opts.time_limit_seconds = time_limit_seconds;
  const SolveReport stage1 = solve_exact(instance, Objective::MinWaste, solve_opts);
  if (stage1.status == SolveStatus::Infeasible) throw PatminInfeasible();

  SplitReport report;
  report.order_index = order;
  report.optimal_waste = stage1.objective_value;
  report.witness = stage1.solution;
  report.min_appearances = static_cast<std::size_t>(summarize(instance, stage1.solution).split_profile[order]);
  if (stage1.status == SolveStatus::TimeLimit) {
    report.status = PatminStatus::LowerBoundOnly;
    return report;
  }
  detail::SplitSearch search(instance, order, report.optimal_waste, stage1.master_cap, deadline);
  try {
    for (std::size_t t = 0; t < report.min_appearances; ++t) {
      if (auto found = search.run(t)) {
        report.witness = *found;
        report.min_appearances = static_cast<std::size_t>(summarize(instance, *found).split_profile[order]);
        break;
      }
      report.proven_lower_bound = t + 1;
    }
  } catch (const detail::SearchTimeout&) {
    report.status = PatminStatus::LowerBoundOnly;
    return report;
  }
  report.proven_lower_bound = report.min_appearances;
  return report;
}

enum class PatternClass { AtMostM, MPlus1, MPlus2, BeyondMPlus2, Timeout };

inline const char* to_string(PatternClass c) {
  switch (c) {
    case PatternClass::AtMostM: return "k <= m";
    case PatternClass::MPlus1: return "k = m+1";
    case PatternClass::MPlus2: return "k = m+2";
    case PatternClass::BeyondMPlus2: return "k > m+2";
    case PatternClass::Timeout: return "timeout";
  }
  return "?";
}

inline PatternClass classify(std::size_t m, std::size_t k) {
  if (k <= m) return PatternClass::AtMostM;
  if (k == m + 1) return PatternClass::MPlus1;
  if (k == m + 2) return PatternClass::MPlus2;
  return PatternClass::BeyondMPlus2;
}

struct ScanRow {
  std::size_t m = 0;
  std::optional<std::size_t> k;  // empty on timeout
  std::size_t best_k = 0;        // patterns in the best witness found
  std::size_t proven_lower_bound = 0;
  PatternClass pattern_class = PatternClass::Timeout;
};

struct ScanReport {
  std::vector<ScanRow> rows;

  std::size_t count(PatternClass c) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [c](const ScanRow& r) { return r.pattern_class == c; }));
  }
  /// Any instance needing more than m+2 patterns.
  bool conjecture_b_counterexample() const { return count(PatternClass::BeyondMPlus2) > 0; }
};

/// Minimum pattern count per equality-constrained instance, classified
/// against m. Timeouts are recorded and the scan continues.
inline ScanRow scan_instance(const Instance& instance, double time_limit_seconds) {
  if (!instance.equality_constrained())
    throw std::invalid_argument("conjecture scan requires equality-constrained instances");
  ScanRow row;
  row.m = instance.order_count();
  PatminOptions opts;
  opts.time_limit_seconds = time_limit_seconds;
  const PatminReport r = min_patterns(instance, opts);
  row.proven_lower_bound = r.proven_lower_bound;
  row.best_k = r.min_pattern_count;
  if (r.status == PatminStatus::ProvedOptimal) {
    row.k = r.min_pattern_count;
    row.pattern_class = classify(row.m, r.min_pattern_count);
  } else if (r.proven_lower_bound > row.m + 2) {
    row.pattern_class = PatternClass::BeyondMPlus2;  // proven even without an exact k
  }
  return row;
}

inline ScanReport conjecture_scan(const std::vector<Instance>& instances, double time_limit_seconds) {
  ScanReport report;
  for (const Instance& inst : instances) report.rows.push_back(scan_instance(inst, time_limit_seconds));
  return report;
}

}  // namespace csplab

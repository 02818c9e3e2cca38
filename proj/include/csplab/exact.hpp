#pragma once

// Proven-optimal integer solutions of the general formulation
//     min sum_i c_i x_i   s.t.  q_j <= sum_i a_ij x_i <= Q_j,  x integer >= 0
// by LP-based branch-and-bound over the enumerated pattern pool, plus an
// independent exhaustive dynamic program used as a test oracle.

#include "csplab/core.hpp"
#include "csplab/patterns.hpp"
#include "csplab/simplex.hpp"

#include <chrono>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csplab {

enum class Objective { MinMasters, MinWaste };

inline const char* to_string(Objective o) { return o == Objective::MinMasters ? "masters" : "waste"; }

enum class SolveStatus { ProvedOptimal, Infeasible, TimeLimit };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::ProvedOptimal: return "proved_optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::TimeLimit: return "time_limit";
  }
  return "?";
}

class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds) {
    if (seconds < std::numeric_limits<double>::infinity())
      at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
  }
  static Deadline never() { return Deadline(); }

  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }
  double remaining_seconds() const {
    if (!at_) return std::numeric_limits<double>::infinity();
    return std::chrono::duration<double>(*at_ - std::chrono::steady_clock::now()).count();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct SolveOptions {
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  Count master_slack = 10;
  // Break ties among primary optima by the other metric. Callers that only
  // need the optimal value may switch this off.
  bool tie_break = true;
};

struct SolveReport {
  Objective objective = Objective::MinMasters;
  SolveStatus status = SolveStatus::Infeasible;
  Count objective_value = 0;   // of the reported solution
  Count secondary_value = 0;   // the other metric of the reported solution
  Solution solution;           // canonical; empty when no solution is known
  bool has_solution = false;
  Rational best_bound;         // proven lower bound on the objective
  std::optional<Count> master_cap;
  std::size_t nodes = 0;
};

inline Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

/// Master-count ceiling used where the search space would otherwise be
/// unbounded. For waste minimisation with an unbounded order it is a
/// heuristic cap; in every other case it is implied by feasibility.
inline Count default_master_cap(const Instance& instance, Objective objective, Count slack = 10) {
  const Length width = instance.master_width();
  const auto m = static_cast<Count>(instance.order_count());
  if (objective == Objective::MinWaste && instance.any_unbounded())
    return ceil_div(instance.demanded_width(), width) + m + slack;
  Count trivial = 0;  // one single-order pattern family per order
  for (const Order& o : instance.orders()) trivial += ceil_div(o.min_qty, width / o.size);
  if (objective == Objective::MinMasters) return trivial;
  Count total = 0;
  for (const Order& o : instance.orders()) total += o.max_qty.value();
  return total;
}

namespace detail {

struct IpResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<std::vector<Count>> x;  // incumbent levels
  Count value = 0;
  Rational bound;
  std::size_t nodes = 0;
};

/// Branch-and-bound over a fixed pattern pool for one linear objective.
class PatternIp {
 public:
  PatternIp(const Instance& instance, std::vector<Pattern> pool)
      : instance_(instance), pool_(std::move(pool)) {
    for (std::size_t i = 0; i < pool_.size(); ++i) index_.emplace(pool_[i].counts(), i);
    if (instance_.equality_constrained()) {
      groups_.assign(instance_.order_count(), {});
      for (std::size_t i = 0; i < pool_.size(); ++i)
        for (std::size_t j = 0; j < instance_.order_count(); ++j)
          if (pool_[i].count(j) > 0) {
            groups_[j].push_back(i);
            break;
          }
      for (auto& g : groups_)
        std::stable_sort(g.begin(), g.end(),
                         [&](std::size_t a, std::size_t b) { return pool_[a].waste() < pool_[b].waste(); });
    }
  }

  const std::vector<Pattern>& pool() const { return pool_; }

  struct ExtraRow {
    std::vector<Count> coefs;  // one per pattern
    Count upper = 0;           // 0 <= coefs.x <= upper
  };

  IpResult solve(const std::vector<Count>& costs, bool equality_waste_progression,
                 const std::vector<ExtraRow>& extra, std::optional<std::vector<Count>> incumbent,
                 const Deadline& deadline) {
    const std::size_t m = instance_.order_count();
    const std::size_t n = pool_.size();
    std::vector<LpRowBounds> rows;
    for (const Order& o : instance_.orders())
      rows.push_back({Rational(o.min_qty),
                      o.max_qty.bounded() ? std::optional<Rational>(Rational(o.max_qty.value())) : std::nullopt});
    for (const ExtraRow& r : extra) rows.push_back({Rational(0), Rational(r.upper)});
    ExactSimplex lp(std::move(rows));
    for (std::size_t i = 0; i < n; ++i) {
      SparseColumn col;
      for (std::size_t j = 0; j < m; ++j)
        if (pool_[i].count(j) != 0) col.emplace_back(j, pool_[i].count(j));
      for (std::size_t e = 0; e < extra.size(); ++e)
        if (extra[e].coefs[i] != 0) col.emplace_back(m + e, extra[e].coefs[i]);
      lp.add_column(std::move(col), Rational(costs[i]));
    }

    Count cost_gcd = 0;
    for (Count c : costs) cost_gcd = std::gcd(cost_gcd, c);
    auto round_bound = [&](const Rational& lp_value) -> Rational {
      if (equality_waste_progression) {
        // waste = W * masters - sum q_j w_j for every equality-feasible solution
        const Length w = instance_.master_width();
        const Length c = instance_.demanded_width();
        BigInt masters = ceil(Rational((lp_value + c) / w));
        return Rational(masters * w - c);
      }
      if (cost_gcd == 0) return Rational(0);
      return Rational(ceil(Rational(lp_value / cost_gcd)) * cost_gcd);
    };

    auto objective_of = [&](const std::vector<Count>& x) {
      Count z = 0;
      for (std::size_t i = 0; i < n; ++i) z += costs[i] * x[i];
      return z;
    };
    auto satisfies_extra = [&](const std::vector<Count>& x) {
      for (const ExtraRow& r : extra) {
        Count s = 0;
        for (std::size_t i = 0; i < n; ++i) s += r.coefs[i] * x[i];
        if (s > r.upper) return false;
      }
      return true;
    };

    IpResult result;
    if (incumbent) {
      result.x = incumbent;
      result.value = objective_of(*incumbent);
    }

    struct Change {
      std::size_t var;
      Count lower;
      std::optional<Count> upper;
    };
    struct Node {
      std::vector<Change> changes;
      Rational parent_bound;
    };
    std::vector<Node> stack;
    stack.push_back({{}, Rational(0)});
    std::vector<std::size_t> touched;
    std::optional<Rational> root_bound;

    while (!stack.empty()) {
      if (deadline.expired()) {
        result.status = SolveStatus::TimeLimit;
        Rational best = result.x ? Rational(result.value) : Rational(stack.front().parent_bound);
        for (const Node& node : stack)
          if (node.parent_bound < best) best = node.parent_bound;
        result.bound = best;
        return result;
      }
      Node node = std::move(stack.back());
      stack.pop_back();
      if (result.x && node.parent_bound >= result.value) continue;
      ++result.nodes;

      for (std::size_t v : touched) lp.set_bounds(v, Rational(0), std::nullopt);
      touched.clear();
      std::map<std::size_t, std::pair<Count, std::optional<Count>>> bounds;
      for (const Change& c : node.changes) bounds[c.var] = {c.lower, c.upper};
      for (const auto& [v, b] : bounds) {
        lp.set_bounds(v, Rational(b.first),
                      b.second ? std::optional<Rational>(Rational(*b.second)) : std::nullopt);
        touched.push_back(v);
      }

      if (lp.solve() != LpStatus::Optimal) continue;  // infeasible node
      const Rational bound = round_bound(lp.objective());
      if (!root_bound) root_bound = bound;
      if (result.x && bound >= result.value) continue;

      const std::vector<Rational> level = lp.values();
      std::optional<std::size_t> branch_var;
      Rational best_frac = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (is_integer(level[i])) continue;
        Rational f = frac(level[i]);
        if (!branch_var || f > best_frac) {
          branch_var = i;
          best_frac = f;
        }
      }

      if (!branch_var) {
        std::vector<Count> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = to_int64(floor(level[i]));
        const Count z = objective_of(x);
        if (!result.x || z < result.value) {
          result.x = std::move(x);
          result.value = z;
        }
        continue;
      }

      std::optional<Count> target_masters;
      if (!groups_.empty()) {
        // Equality: the rounded bound pins the master count of a matching solution.
        if (equality_waste_progression)
          target_masters = to_int64(BigInt((boost::multiprecision::numerator(bound) + instance_.demanded_width()) /
                                           instance_.master_width()));
        else if (std::all_of(costs.begin(), costs.end(), [](Count c) { return c == 1; }))
          target_masters = to_int64(boost::multiprecision::numerator(bound));
      }
      if (auto x = round_and_complete(level, target_masters)) {
        if (satisfies_extra(*x)) {
          const Count z = objective_of(*x);
          if (!result.x || z < result.value) {
            result.x = std::move(*x);
            result.value = z;
          }
        }
      }
      if (result.x && bound >= result.value) continue;

      const std::size_t v = *branch_var;
      const Count down = to_int64(floor(level[v]));
      Count cur_lower = 0;
      std::optional<Count> cur_upper;
      if (auto it = bounds.find(v); it != bounds.end()) {
        cur_lower = it->second.first;
        cur_upper = it->second.second;
      }
      Node down_node{node.changes, bound};
      down_node.changes.push_back({v, cur_lower, down});
      Node up_node{std::move(node.changes), bound};
      up_node.changes.push_back({v, down + 1, cur_upper});
      stack.push_back(std::move(down_node));
      stack.push_back(std::move(up_node));  // explored first
    }

    result.status = result.x ? SolveStatus::ProvedOptimal : SolveStatus::Infeasible;
    result.bound = result.x ? Rational(result.value) : Rational(0);
    return result;
  }

  /// Rounds an LP point down and completes the residual demand greedily
  /// with maximum-fill patterns. Returns nullopt if completion fails.
  std::optional<std::vector<Count>> round_and_complete(const std::vector<Rational>& level,
                                                      std::optional<Count> target_masters = std::nullopt) const {
    const std::size_t m = instance_.order_count();
    std::vector<Count> x(pool_.size(), 0);
    std::vector<Count> prod(m, 0);
    Count masters = 0;
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      x[i] = to_int64(floor(level[i]));
      if (x[i] == 0) continue;
      masters += x[i];
      for (std::size_t j = 0; j < m; ++j) prod[j] += x[i] * pool_[i].count(j);
    }
    if (target_masters && *target_masters > masters) {
      std::vector<Count> deficit(m);
      for (std::size_t j = 0; j < m; ++j) deficit[j] = instance_.order(j).min_qty - prod[j];
      std::vector<Count> extra(pool_.size(), 0);
      std::size_t budget = kCompletionNodes;
      if (complete_exactly(deficit, *target_masters - masters, 0, m, extra, budget)) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += extra[i];
        return x;
      }
    }
    constexpr Count kNoLimit = std::numeric_limits<Count>::max() / 4;
    for (;;) {
      std::vector<Count> deficit(m), room(m), limit(m);
      bool open = false;
      for (std::size_t j = 0; j < m; ++j) {
        const Order& o = instance_.order(j);
        deficit[j] = std::max<Count>(0, o.min_qty - prod[j]);
        room[j] = o.max_qty.bounded() ? o.max_qty.value() - prod[j] : kNoLimit;
        if (room[j] < 0) return std::nullopt;
        limit[j] = std::min(deficit[j], room[j]);
        open = open || deficit[j] > 0;
      }
      if (!open) return x;
      auto counts = max_fill_counts(instance_, limit);
      if (!counts) return std::nullopt;
      Count reps = kNoLimit;
      for (std::size_t j = 0; j < m; ++j)
        if ((*counts)[j] > 0) reps = std::min(reps, std::max<Count>(1, deficit[j] / (*counts)[j]));
      // Use leftover width on orders that still have room.
      Length used = 0;
      for (std::size_t j = 0; j < m; ++j) used += (*counts)[j] * instance_.order(j).size;
      for (std::size_t j = 0; j < m; ++j) {
        const Length w = instance_.order(j).size;
        while (instance_.master_width() - used >= w && ((*counts)[j] + 1) * reps <= room[j] &&
               (*counts)[j] + 1 <= instance_.master_width() / w) {
          ++(*counts)[j];
          used += w;
        }
      }
      auto it = index_.find(*counts);
      if (it == index_.end()) return std::nullopt;
      x[it->second] += reps;
      for (std::size_t j = 0; j < m; ++j) prod[j] += reps * (*counts)[j];
    }
  }

 private:
  static constexpr std::size_t kCompletionNodes = 20'000;

  /// Equality residual: patterns summing exactly to `deficit` on exactly
  /// `masters` masters, found depth-first within a node budget.
  bool complete_exactly(std::vector<Count>& deficit, Count masters, std::size_t start, std::size_t prev_focus,
                        std::vector<Count>& x, std::size_t& budget) const {
    const std::size_t m = instance_.order_count();
    std::size_t focus = m;
    Length width = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (deficit[j] < 0) return false;
      if (deficit[j] > 0 && focus == m) focus = j;
      width += deficit[j] * instance_.order(j).size;
    }
    if (focus == m) return masters == 0;
    if (masters <= 0 || width > masters * instance_.master_width() || budget == 0) return false;
    --budget;
    if (focus != prev_focus) start = 0;
    const auto& group = groups_[focus];
    for (std::size_t pos = start; pos < group.size(); ++pos) {
      const Pattern& p = pool_[group[pos]];
      Count xmax = masters;
      for (std::size_t j = 0; j < m; ++j)
        if (p.count(j) > 0) xmax = std::min(xmax, deficit[j] / p.count(j));
      for (Count r = xmax; r >= 1; --r) {
        for (std::size_t j = 0; j < m; ++j) deficit[j] -= r * p.count(j);
        x[group[pos]] += r;
        const bool ok = complete_exactly(deficit, masters - r, pos + 1, focus, x, budget);
        for (std::size_t j = 0; j < m; ++j) deficit[j] += r * p.count(j);
        if (ok) return true;
        x[group[pos]] -= r;
        if (budget == 0) return false;
      }
    }
    return false;
  }

  const Instance& instance_;
  std::vector<Pattern> pool_;
  std::map<std::vector<Count>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> groups_;  // equality only: pool indices by first order
};

inline Solution to_solution(const std::vector<Pattern>& pool, const std::vector<Count>& x) {
  std::vector<SolutionEntry> entries;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (x[i] > 0) entries.push_back({pool[i], x[i]});
  return canonicalize(Solution(std::move(entries)));
}

inline std::vector<Count> metric_costs(const std::vector<Pattern>& pool, Objective objective) {
  std::vector<Count> costs(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    costs[i] = objective == Objective::MinMasters ? 1 : pool[i].waste();
  return costs;
}

inline Count metric_of(const Solution& s, Objective objective) {
  return objective == Objective::MinMasters ? s.masters() : s.waste();
}

inline Objective other(Objective o) {
  return o == Objective::MinMasters ? Objective::MinWaste : Objective::MinMasters;
}

}  // namespace detail

/// Proven-optimal solution under the given objective. Among optima the
/// reported solution minimises the other metric.
inline SolveReport solve_exact(const Instance& instance, Objective objective, const SolveOptions& options = {}) {
  const Deadline deadline(options.time_limit_seconds);
  SolveReport report;
  report.objective = objective;

  detail::PatternIp ip(instance, enumerate_patterns(instance, {PatternFilter::AllFeasible, true}));
  const auto& pool = ip.pool();
  const bool equality = instance.equality_constrained();

  if (instance.demanded_width() == 0) {
    report.status = SolveStatus::ProvedOptimal;
    report.has_solution = true;
    report.best_bound = 0;
    return report;
  }

  std::vector<detail::PatternIp::ExtraRow> extra;
  if (objective == Objective::MinWaste && instance.any_unbounded()) {
    report.master_cap = default_master_cap(instance, objective, options.master_slack);
    extra.push_back({std::vector<Count>(pool.size(), 1), *report.master_cap});
  }

  const auto primary_costs = detail::metric_costs(pool, objective);
  auto first = ip.solve(primary_costs, equality && objective == Objective::MinWaste, extra, std::nullopt, deadline);
  report.nodes = first.nodes;
  report.best_bound = first.bound;
  if (first.status == SolveStatus::Infeasible) {
    report.status = SolveStatus::Infeasible;
    return report;
  }
  if (!first.x) {
    report.status = SolveStatus::TimeLimit;  // stopped before any incumbent
    return report;
  }
  std::vector<Count> x = *first.x;
  report.status = first.status;

  // In equality-constrained instances the two metrics determine each other.
  if (first.status == SolveStatus::ProvedOptimal && options.tie_break && !equality) {
    const Objective secondary = detail::other(objective);
    auto limited = extra;
    limited.push_back({primary_costs, first.value});
    auto second = ip.solve(detail::metric_costs(pool, secondary), false, limited, x, deadline);
    report.nodes += second.nodes;
    if (second.x) x = *second.x;
    if (second.status == SolveStatus::TimeLimit) report.status = SolveStatus::TimeLimit;
  }

  report.solution = detail::to_solution(pool, x);
  report.has_solution = true;
  report.objective_value = detail::metric_of(report.solution, objective);
  report.secondary_value = detail::metric_of(report.solution, detail::other(objective));
  if (report.status == SolveStatus::ProvedOptimal) report.best_bound = report.objective_value;
  return report;
}

struct BruteForceLimits {
  std::optional<Count> max_masters;  // defaults to default_master_cap
  std::size_t max_patterns = 5'000;
  std::size_t max_cells = 20'000'000;  // (masters + 1) * production states
};

class OracleRefused : public std::runtime_error {
 public:
  explicit OracleRefused(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive oracle: dynamic programming over (masters used, production
/// state) covering every multiset of patterns up to the master limit. No LP
/// and no bounding; production of orders without an upper bound is tracked
/// up to q_j only, which loses no feasible multiset.
inline SolveReport brute_force_solve(const Instance& instance, Objective objective, const BruteForceLimits& limits = {}) {
  SolveReport report;
  report.objective = objective;
  const std::size_t m = instance.order_count();
  const Count max_masters = limits.max_masters.value_or(default_master_cap(instance, objective));
  if (objective == Objective::MinWaste && instance.any_unbounded()) report.master_cap = max_masters;

  EnumerationMode mode{PatternFilter::AllFeasible, true, limits.max_patterns};
  std::vector<Pattern> pool;
  try {
    pool = enumerate_patterns(instance, mode);
  } catch (const EnumerationLimitExceeded&) {
    throw OracleRefused("pattern pool exceeds " + std::to_string(limits.max_patterns));
  }

  std::vector<Count> top(m), radix(m);
  std::size_t states = 1;
  for (std::size_t j = 0; j < m; ++j) {
    const Order& o = instance.order(j);
    top[j] = o.max_qty.bounded() ? o.max_qty.value() : o.min_qty;
    radix[j] = static_cast<Count>(states);
    states *= static_cast<std::size_t>(top[j] + 1);
    if (states > limits.max_cells) throw OracleRefused("production state space too large");
  }
  const std::size_t layers = static_cast<std::size_t>(max_masters) + 1;
  if (states * layers > limits.max_cells) throw OracleRefused("state space times master limit too large");

  auto decode = [&](std::size_t s, std::size_t j) { return static_cast<Count>(s / radix[j]) % (top[j] + 1); };
  std::vector<std::int64_t> next_of(states * pool.size(), -1);
  for (std::size_t s = 0; s < states; ++s)
    for (std::size_t p = 0; p < pool.size(); ++p) {
      std::size_t t = 0;
      bool ok = true;
      for (std::size_t j = 0; j < m && ok; ++j) {
        Count v = decode(s, j) + pool[p].count(j);
        if (v > top[j]) {
          if (instance.order(j).max_qty.bounded()) ok = false;
          v = top[j];
        }
        t += static_cast<std::size_t>(v * radix[j]);
      }
      if (ok) next_of[s * pool.size() + p] = static_cast<std::int64_t>(t);
    }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> waste(states * layers, kInf);
  std::vector<std::int32_t> via(states * layers, -1);
  std::vector<std::int64_t> from(states * layers, -1);
  waste[0] = 0;
  for (std::size_t n = 0; n + 1 < layers; ++n)
    for (std::size_t s = 0; s < states; ++s) {
      const std::int64_t w0 = waste[n * states + s];
      if (w0 == kInf) continue;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        const std::int64_t t = next_of[s * pool.size() + p];
        if (t < 0) continue;
        const std::size_t cell = (n + 1) * states + static_cast<std::size_t>(t);
        const std::int64_t w = w0 + pool[p].waste();
        if (w < waste[cell]) {
          waste[cell] = w;
          via[cell] = static_cast<std::int32_t>(p);
          from[cell] = static_cast<std::int64_t>(s);
        }
      }
    }

  auto is_final = [&](std::size_t s) {
    for (std::size_t j = 0; j < m; ++j)
      if (decode(s, j) < instance.order(j).min_qty) return false;
    return true;
  };
  std::optional<std::pair<std::size_t, std::size_t>> best;  // (layer, state)
  for (std::size_t n = 0; n < layers; ++n)
    for (std::size_t s = 0; s < states; ++s) {
      const std::int64_t w = waste[n * states + s];
      if (w == kInf || !is_final(s)) continue;
      if (!best) {
        best = {n, s};
        continue;
      }
      const std::int64_t bw = waste[best->first * states + best->second];
      const bool better = objective == Objective::MinMasters
                              ? (n < best->first || (n == best->first && w < bw))
                              : (w < bw || (w == bw && n < best->first));
      if (better) best = {n, s};
    }
  if (!best) {
    report.status = SolveStatus::Infeasible;
    return report;
  }
  std::vector<Count> x(pool.size(), 0);
  for (std::size_t n = best->first, s = best->second; n > 0; --n) {
    const std::size_t cell = n * states + s;
    ++x[static_cast<std::size_t>(via[cell])];
    s = static_cast<std::size_t>(from[cell]);
  }
  report.status = SolveStatus::ProvedOptimal;
  report.solution = detail::to_solution(pool, x);
  report.has_solution = true;
  report.objective_value = detail::metric_of(report.solution, objective);
  report.secondary_value = detail::metric_of(report.solution, detail::other(objective));
  report.best_bound = report.objective_value;
  return report;
}

}  // namespace csplab

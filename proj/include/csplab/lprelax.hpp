#pragma once

// Exact LP relaxation of the master-count formulation and the integer
// round-up (IRUP / modified IRUP) checks built on it.

#include "csplab/core.hpp"
#include "csplab/exact.hpp"
#include "csplab/patterns.hpp"
#include "csplab/simplex.hpp"

#include <stdexcept>
#include <vector>

namespace csplab {

enum class BoundMode { OneSided, Equality, TwoSided };

inline const char* to_string(BoundMode b) {
  switch (b) {
    case BoundMode::OneSided: return "one_sided";
    case BoundMode::Equality: return "equality";
    case BoundMode::TwoSided: return "two_sided";
  }
  return "?";
}

/// The instance with its bounds read under the given mode.
inline Instance with_bounds(const Instance& instance, BoundMode mode) {
  switch (mode) {
    case BoundMode::OneSided: return instance.one_sided();
    case BoundMode::Equality: return instance.equality();
    case BoundMode::TwoSided: return instance;
  }
  return instance;
}

struct LpActivity {
  Pattern pattern;
  Rational level;
};

struct LpReport {
  Rational value;
  std::vector<LpActivity> activities;  // positive levels only, canonical order
  BoundMode bound_mode = BoundMode::OneSided;
  std::vector<Rational> duals;
  std::size_t columns = 0;     // columns in the final restricted master
  std::size_t iterations = 0;  // simplex pivots
};

class InfeasibleLp : public std::runtime_error {
 public:
  InfeasibleLp() : std::runtime_error("LP relaxation is infeasible") {}
};

namespace detail {

inline SparseColumn pattern_column(const Pattern& p) {
  SparseColumn col;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p.count(j) != 0) col.emplace_back(j, p.count(j));
  return col;
}

inline LpReport collect(const ExactSimplex& lp, const std::vector<Pattern>& columns, BoundMode mode) {
  LpReport report;
  report.value = lp.objective();
  report.bound_mode = mode;
  report.duals = lp.duals();
  report.columns = columns.size();
  report.iterations = lp.iterations();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    Rational v = lp.value(i);
    if (v != 0) report.activities.push_back({columns[i], v});
  }
  std::sort(report.activities.begin(), report.activities.end(),
            [](const LpActivity& a, const LpActivity& b) { return canonical_before(a.pattern, b.pattern); });
  return report;
}

}  // namespace detail

/// min sum x_i over the relaxed bounds of the chosen mode. The one-sided
/// relaxation is solved by column generation with exact knapsack pricing;
/// the other modes use the full pattern set capped by Q_j.
inline LpReport lp_relaxation(const Instance& instance, BoundMode mode) {
  const Instance bounded = with_bounds(instance, mode);
  const std::size_t m = bounded.order_count();
  std::vector<LpRowBounds> rows;
  for (const Order& o : bounded.orders())
    rows.push_back({Rational(o.min_qty),
                    o.max_qty.bounded() ? std::optional<Rational>(Rational(o.max_qty.value())) : std::nullopt});
  ExactSimplex lp(std::move(rows));
  std::vector<Pattern> columns;

  if (mode != BoundMode::OneSided) {
    columns = enumerate_patterns(bounded, {PatternFilter::AllFeasible, true});
    for (const Pattern& p : columns) lp.add_column(detail::pattern_column(p), Rational(1));
    if (lp.solve() != LpStatus::Optimal) throw InfeasibleLp();
    return detail::collect(lp, columns, mode);
  }

  // Restricted master starts from one homogeneous pattern per order.
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Count> counts(m, 0);
    counts[j] = bounded.master_width() / bounded.order(j).size;
    columns.emplace_back(bounded, std::move(counts));
    lp.add_column(detail::pattern_column(columns.back()), Rational(1));
  }
  for (;;) {
    if (lp.solve() != LpStatus::Optimal) throw InfeasibleLp();
    const std::vector<Rational> y = lp.duals();
    PricedPattern best = best_pattern_for_prices(bounded, y);
    if (best.value <= 1) break;  // no column with negative reduced cost
    for (const Pattern& p : columns)
      if (p == best.pattern) throw std::logic_error("pricing returned a column already in the master");
    columns.push_back(best.pattern);
    lp.add_column(detail::pattern_column(best.pattern), Rational(1));
  }
  return detail::collect(lp, columns, mode);
}

inline LpReport lp_min_masters(const Instance& instance) { return lp_relaxation(instance, BoundMode::OneSided); }

struct GapReport {
  Rational z_lp;
  Count z_star = 0;
  Rational gap;          // z_star - z_lp
  Count rounded_gap = 0; // z_star - ceil(z_lp)
  BoundMode bound_mode = BoundMode::OneSided;
  SolveStatus status = SolveStatus::ProvedOptimal;

  bool irup() const { return rounded_gap == 0; }
  bool mirup() const { return rounded_gap <= 1; }
};

/// z_LP against the proven master-count optimum z*. The default mode is the
/// classical one-sided formulation; equality mode reads Q_j = q_j.
inline GapReport integrality_gap(const Instance& instance, BoundMode mode = BoundMode::OneSided,
                                 double time_limit_seconds = std::numeric_limits<double>::infinity()) {
  GapReport g;
  g.bound_mode = mode;
  g.z_lp = lp_relaxation(instance, mode).value;
  SolveOptions opts;
  opts.time_limit_seconds = time_limit_seconds;
  opts.tie_break = false;
  const SolveReport s = solve_exact(with_bounds(instance, mode), Objective::MinMasters, opts);
  if (s.status == SolveStatus::Infeasible) throw InfeasibleLp();
  g.status = s.status;
  g.z_star = s.objective_value;
  g.gap = Rational(g.z_star) - g.z_lp;
  g.rounded_gap = g.z_star - to_int64(ceil(g.z_lp));
  return g;
}

inline bool irup_holds(const Instance& instance, BoundMode mode = BoundMode::OneSided) {
  return integrality_gap(instance, mode).irup();
}

inline bool mirup_holds(const Instance& instance, BoundMode mode = BoundMode::OneSided) {
  return integrality_gap(instance, mode).mirup();
}

}  // namespace csplab

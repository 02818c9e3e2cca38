#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace csplab;
using namespace csplab::testing;

namespace {

Instance nine() {
  return eq(560, {{200, 42}, {148, 22}, {142, 32}, {140, 23}, {132, 22}, {125, 36}, {115, 39}, {114, 39}, {109, 46}});
}

void expect_witness(const Instance& inst, const PatminReport& r) {
  EXPECT_TRUE(validate_solution(inst, r.witness).feasible);
  EXPECT_EQ(r.witness.waste(), r.optimal_waste);
  EXPECT_TRUE(canonical_fixed_point(r.witness));
  EXPECT_TRUE(accounting_holds(inst, r.witness));
  if (r.status == PatminStatus::ProvedOptimal) {
    EXPECT_EQ(r.witness.pattern_count(), r.min_pattern_count);
    EXPECT_LE(static_cast<std::size_t>(pattern_lower_bound(inst)), r.min_pattern_count);
  }
}

}  // namespace

TEST(LowerBound, Examples) {
  EXPECT_EQ(pattern_lower_bound(eq(1000, {{300, 1}, {250, 1}, {200, 1}, {150, 1}, {90, 1}})), 1);
  EXPECT_EQ(pattern_lower_bound(nine()), 3);
  EXPECT_EQ(pattern_lower_bound(eq(1000, {{300, 7}, {250, 100}})), 1);
}

TEST(MinPatterns, MPlusOne) {
  const Instance inst = eq(1000, {{300, 7}, {250, 100}});
  const PatminReport r = min_patterns(inst);
  expect_witness(inst, r);
  EXPECT_EQ(r.status, PatminStatus::ProvedOptimal);
  EXPECT_EQ(r.optimal_waste, 900);
  EXPECT_EQ(r.min_pattern_count, 3u);
  EXPECT_EQ(classify(2, r.min_pattern_count), PatternClass::MPlus1);
}

TEST(MinPatterns, SingleOrder) {
  const Instance inst = eq(10, {{3, 7}});
  const PatminReport r = min_patterns(inst);
  expect_witness(inst, r);
  EXPECT_EQ(r.min_pattern_count, 2u);
}

TEST(MinPatterns, FiveOrderInstanceNeedsFour) {
  // The waste optimum is 0 on 99 masters; the best such cut uses four patterns.
  const Instance inst = eq(1000, {{300, 100}, {250, 100}, {200, 100}, {150, 100}, {90, 100}});
  const PatminReport r = min_patterns(inst);
  expect_witness(inst, r);
  EXPECT_EQ(r.status, PatminStatus::ProvedOptimal);
  EXPECT_EQ(r.optimal_waste, 0);
  EXPECT_EQ(r.optimal_masters, 99);
  EXPECT_EQ(r.min_pattern_count, 4u);
}

TEST(MinPatterns, OneSidedInstance) {
  const Instance inst = one_sided(1000, {{340, 15}, {300, 15}});
  const PatminReport r = min_patterns(inst);
  expect_witness(inst, r);
  EXPECT_EQ(r.optimal_waste, 300);
  EXPECT_EQ(r.status, PatminStatus::ProvedOptimal);
}

TEST(MinPatterns, TimeLimitGivesLowerBoundOnly) {
  PatminOptions opts;
  opts.time_limit_seconds = 0.5;
  const PatminReport r = min_patterns(nine(), opts);
  EXPECT_EQ(r.status, PatminStatus::LowerBoundOnly);
  EXPECT_GE(r.proven_lower_bound, 3u);
  EXPECT_LE(r.proven_lower_bound, r.min_pattern_count);
}

TEST(MinPatterns, RandomWitnessesAreSound) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const Instance inst = random_instance(rng, 3, 60, 1, 10, t % 2 == 0);
    const PatminReport r = min_patterns(inst);
    expect_witness(inst, r);
    EXPECT_EQ(r.status, PatminStatus::ProvedOptimal);
    EXPECT_LE(r.min_pattern_count, solve_exact(inst, Objective::MinWaste).solution.pattern_count());
  }
}

namespace {

// Exhaustive: can `k` distinct patterns with positive multiplicities summing
// to `masters` produce exactly `left`?
bool exact_cover(const std::vector<Pattern>& pool, std::size_t from, std::size_t k, std::vector<Count>& left,
                 Count masters) {
  if (k == 0) return masters == 0 && std::all_of(left.begin(), left.end(), [](Count c) { return c == 0; });
  for (std::size_t i = from; i < pool.size(); ++i) {
    for (Count x = 1; x <= masters; ++x) {
      bool ok = true;
      for (std::size_t j = 0; j < left.size(); ++j) ok = ok && left[j] >= x * pool[i].count(j);
      if (!ok) break;
      for (std::size_t j = 0; j < left.size(); ++j) left[j] -= x * pool[i].count(j);
      const bool found = exact_cover(pool, i + 1, k - 1, left, masters - x);
      for (std::size_t j = 0; j < left.size(); ++j) left[j] += x * pool[i].count(j);
      if (found) return true;
    }
  }
  return false;
}

}  // namespace

TEST(MinPatterns, MatchesExhaustiveSubsetSearch) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 25; ++t) {
    const Instance inst = random_instance(rng, 3, 14, 1, 5, true);
    const PatminReport r = min_patterns(inst);
    const auto pool = enumerate_patterns(inst, {PatternFilter::AllFeasible, true});
    const Count masters = (r.optimal_waste + inst.demanded_width()) / inst.master_width();
    std::size_t best = 0;
    for (std::size_t k = 1; k <= r.min_pattern_count && best == 0; ++k) {
      std::vector<Count> left;
      for (const Order& o : inst.orders()) left.push_back(o.min_qty);
      if (exact_cover(pool, 0, k, left, masters)) best = k;
    }
    EXPECT_EQ(best, r.min_pattern_count) << emit_instance(inst);
  }
}

TEST(VerifyWitness, NineOrderStoredWitness) {
  const auto corpus = builtin_corpus();
  const auto it = std::find_if(corpus.begin(), corpus.end(), [](const CorpusEntry& e) { return e.id == "nine11"; });
  ASSERT_NE(it, corpus.end());
  ASSERT_TRUE(it->stored_witness.has_value());
  const WitnessCheck c = verify_witness(it->instance, *it->stored_witness);
  EXPECT_TRUE(c.feasible);
  EXPECT_TRUE(c.waste_optimal);
  EXPECT_EQ(c.waste, 111);
  EXPECT_EQ(c.pattern_count, 11u);
}

TEST(Splits, Examples) {
  const Instance s275 = eq(1000, {{400, 1}, {375, 1}, {350, 1}, {275, 300}});
  const SplitReport r = min_split_for_order(s275, 3);
  EXPECT_EQ(r.status, PatminStatus::ProvedOptimal);
  EXPECT_EQ(r.min_appearances, 3u);
  EXPECT_EQ(r.witness.pattern_count(), 3u);
  EXPECT_TRUE(validate_solution(s275, r.witness).feasible);
  EXPECT_EQ(r.witness.waste(), r.optimal_waste);

  EXPECT_EQ(min_split_for_order(eq(10, {{3, 7}}), 0).min_appearances, 2u);
  EXPECT_THROW(min_split_for_order(eq(10, {{3, 7}}), 1), std::out_of_range);
}

TEST(Splits, BoundedByPatternCount) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Instance inst = random_instance(rng, 3, 50, 1, 10, true);
    const PatminReport p = min_patterns(inst);
    for (std::size_t j = 0; j < inst.order_count(); ++j) {
      const SplitReport s = min_split_for_order(inst, j);
      EXPECT_LE(s.min_appearances, p.min_pattern_count);
      EXPECT_EQ(static_cast<std::size_t>(summarize(inst, s.witness).split_profile[j]), s.min_appearances);
      EXPECT_EQ(s.witness.waste(), p.optimal_waste);
    }
  }
}

TEST(Scan, Classification) {
  EXPECT_EQ(classify(9, 11), PatternClass::MPlus2);
  EXPECT_EQ(classify(2, 3), PatternClass::MPlus1);
  EXPECT_EQ(classify(5, 1), PatternClass::AtMostM);
  EXPECT_EQ(classify(3, 6), PatternClass::BeyondMPlus2);
  const ScanReport r = conjecture_scan({eq(1000, {{300, 7}, {250, 100}}), eq(10, {{3, 7}})}, 10);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].pattern_class, PatternClass::MPlus1);
  EXPECT_EQ(r.rows[1].pattern_class, PatternClass::MPlus1);
  EXPECT_FALSE(r.conjecture_b_counterexample());
  EXPECT_THROW(scan_instance(one_sided(10, {{3, 7}}), 1), std::invalid_argument);
}

#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace csplab;
using namespace csplab::testing;

namespace {

Instance gap132() { return one_sided(132, {{44, 2}, {33, 3}, {12, 6}}); }

// Reduced cost of every enumerable pattern is nonnegative under the duals.
void expect_duals_price_out(const Instance& inst, const LpReport& lp) {
  for (const Pattern& p : enumerate_patterns(inst)) EXPECT_GE(1 - pattern_value(p, lp.duals), 0) << p.str();
  Rational dual_value = 0;
  for (std::size_t j = 0; j < inst.order_count(); ++j) dual_value += lp.duals[j] * inst.order(j).min_qty;
  EXPECT_EQ(dual_value, lp.value);
}

}  // namespace

TEST(Simplex, SmallBoundedLp) {
  // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6, 0 <= x,y  ->  x = 8/5, y = 6/5
  ExactSimplex lp({{Rational(0), Rational(4)}, {Rational(0), Rational(6)}});
  lp.add_column({{0, 1}, {1, 3}}, Rational(-1));
  lp.add_column({{0, 2}, {1, 1}}, Rational(-1));
  ASSERT_EQ(lp.solve(), LpStatus::Optimal);
  EXPECT_EQ(lp.value(0), Rational(8, 5));
  EXPECT_EQ(lp.value(1), Rational(6, 5));
  EXPECT_EQ(lp.objective(), Rational(-14, 5));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  EXPECT_THROW(ExactSimplex({{Rational(5), Rational(4)}}), std::invalid_argument);
  // x >= 5 and x <= 1 through two rows
  ExactSimplex bad({{Rational(5), std::nullopt}, {Rational(0), Rational(1)}});
  bad.add_column({{0, 1}, {1, 1}}, Rational(1));
  EXPECT_EQ(bad.solve(), LpStatus::Infeasible);

  ExactSimplex open({{Rational(1), std::nullopt}});
  open.add_column({{0, 1}}, Rational(-1));
  EXPECT_EQ(open.solve(), LpStatus::Unbounded);
}

TEST(Simplex, WarmStartAfterAddingColumns) {
  ExactSimplex lp({{Rational(3), std::nullopt}});
  lp.add_column({{0, 1}}, Rational(1));
  ASSERT_EQ(lp.solve(), LpStatus::Optimal);
  EXPECT_EQ(lp.objective(), 3);
  lp.add_column({{0, 3}}, Rational(1));
  ASSERT_EQ(lp.solve(), LpStatus::Optimal);
  EXPECT_EQ(lp.objective(), 1);
}

TEST(LpRelaxation, GapInstance) {
  const LpReport lp = lp_min_masters(gap132());
  EXPECT_EQ(to_fraction_string(lp.value), "259/132");
  Rational sum = 0;
  for (const LpActivity& a : lp.activities) sum += a.level;
  EXPECT_EQ(sum, lp.value);
  expect_duals_price_out(gap132(), lp);
}

TEST(LpRelaxation, TrivialAndPair) {
  EXPECT_EQ(lp_min_masters(one_sided(10, {{10, 5}})).value, 5);
  const Instance pair = one_sided(1000, {{340, 15}, {300, 15}});
  const LpReport lp = lp_min_masters(pair);
  EXPECT_EQ(lp.value, 10);
  EXPECT_EQ(lp.duals, (std::vector<Rational>{Rational(1, 3), Rational(1, 3)}));
}

TEST(LpRelaxation, ModesAgreeWithFullEnumeration) {
  // Equality mode over the capped pattern set equals a direct simplex over the same columns.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const Instance inst = random_instance(rng, 4, 30, 1, 6, true);
    const LpReport eqlp = lp_relaxation(inst, BoundMode::Equality);
    const LpReport one = lp_relaxation(inst, BoundMode::OneSided);
    EXPECT_LE(one.value, eqlp.value);
    expect_duals_price_out(inst.one_sided(), one);
  }
}

TEST(LpRelaxation, WeakDualityRandom) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = random_instance(rng, 5, 80, 1, 20, false);
    const LpReport lp = lp_min_masters(inst);
    expect_duals_price_out(inst, lp);
    EXPECT_LE(lp.value, solve_exact(inst, Objective::MinMasters).objective_value);
  }
}

TEST(Gap, GapInstance) {
  const GapReport g = integrality_gap(gap132());
  EXPECT_EQ(to_fraction_string(g.z_lp), "259/132");
  EXPECT_EQ(g.z_star, 3);
  EXPECT_EQ(to_fraction_string(g.gap), "137/132");
  EXPECT_EQ(g.rounded_gap, 1);
  EXPECT_FALSE(g.irup());
  EXPECT_TRUE(g.mirup());
  EXPECT_FALSE(irup_holds(gap132()));
  EXPECT_TRUE(mirup_holds(gap132()));
}

TEST(Gap, IntegralCases) {
  const Instance single = one_sided(10, {{10, 5}});
  const GapReport g = integrality_gap(single);
  EXPECT_EQ(g.gap, 0);
  EXPECT_EQ(g.rounded_gap, 0);
  EXPECT_TRUE(irup_holds(single));
  EXPECT_TRUE(mirup_holds(single));
  const GapReport pair = integrality_gap(one_sided(1000, {{340, 15}, {300, 15}}));
  EXPECT_EQ(pair.z_star, 10);
  EXPECT_EQ(pair.gap, 0);
}

TEST(Gap, EqualityModeSmallWidths) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Instance inst = random_instance(rng, 4, 15, 1, 8, true);
    EXPECT_TRUE(irup_holds(inst, BoundMode::Equality)) << emit_instance(inst);
  }
}

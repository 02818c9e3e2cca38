#pragma once

// Bounded-variable revised primal simplex over exact rationals.
//
// Solves   min c.x   s.t.  L_r <= A_r x <= U_r,   l_k <= x_k <= u_k
// with finite L_r and l_k. Each row gets an activity variable s_r = A_r x
// carrying the row bounds, so the working system is A x - s = 0 with an
// explicit dense basis inverse. Entering and leaving variables follow
// Bland's smallest-index rule in both phases, so the method cannot cycle.

#include "csplab/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace csplab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRowBounds {
  Rational lower;
  std::optional<Rational> upper;
};

using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;

class ExactSimplex {
 public:
  explicit ExactSimplex(std::vector<LpRowBounds> rows) : rows_(std::move(rows)) {
    const std::size_t r = rows_.size();
    vars_.resize(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
      vars_[i].lower = rows_[i].lower;
      vars_[i].upper = rows_[i].upper;
      if (vars_[i].upper && *vars_[i].upper < vars_[i].lower)
        throw std::invalid_argument("row lower bound exceeds upper bound");
    }
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return columns_.size(); }
  std::size_t iterations() const { return iterations_; }

  std::size_t add_column(SparseColumn entries, Rational cost, Rational lower = 0,
                         std::optional<Rational> upper = std::nullopt) {
    for (const auto& [row, coef] : entries)
      if (row >= rows_.size()) throw std::out_of_range("column entry row out of range");
    Var v;
    v.lower = std::move(lower);
    v.upper = std::move(upper);
    v.cost = std::move(cost);
    v.state = State::AtLower;
    const std::size_t k = vars_.size();
    vars_.push_back(std::move(v));
    columns_.push_back(std::move(entries));
    // A new column at lower bound zero keeps the current basis feasible.
    if (vars_[k].lower != 0) initialized_ = false;
    return k - 2 * rows_.size();
  }

  void set_bounds(std::size_t column, Rational lower, std::optional<Rational> upper) {
    Var& v = vars_.at(2 * rows_.size() + column);
    v.lower = std::move(lower);
    v.upper = std::move(upper);
    initialized_ = false;
  }

  void set_row_bounds(std::size_t row, Rational lower, std::optional<Rational> upper) {
    rows_.at(row) = {lower, upper};
    vars_[row].lower = std::move(lower);
    vars_[row].upper = std::move(upper);
    initialized_ = false;
  }

  void set_cost(std::size_t column, Rational cost) {
    vars_.at(2 * rows_.size() + column).cost = std::move(cost);
    // The basis stays primal feasible; phase two simply resumes.
  }

  LpStatus solve() {
    if (!initialized_) {
      initialize();
      if (needs_phase_one_) {
        status_ = iterate(true);
        if (phase_one_objective() != 0) {
          initialized_ = false;
          status_ = LpStatus::Infeasible;
          return status_;
        }
      }
      for (std::size_t i = 0; i < rows_.size(); ++i) vars_[rows_.size() + i].upper = Rational(0);
    }
    status_ = iterate(false);
    return status_;
  }

  LpStatus status() const { return status_; }

  Rational objective() const {
    Rational z = 0;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const Var& v = vars_[2 * rows_.size() + c];
      if (v.cost != 0) z += v.cost * value(c);
    }
    return z;
  }

  Rational value(std::size_t column) const { return var_value(2 * rows_.size() + column); }

  std::vector<Rational> values() const {
    std::vector<Rational> out(columns_.size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = value(c);
    return out;
  }

  /// Row activity A_r x.
  Rational row_activity(std::size_t row) const { return var_value(row); }

  /// Dual prices y with reduced cost c_k - y.A_k; nonnegative on rows held
  /// at their lower bound.
  std::vector<Rational> duals() const { return prices(false); }

 private:
  enum class State { Basic, AtLower, AtUpper };

  struct Var {
    Rational lower;
    std::optional<Rational> upper;
    Rational cost;
    State state = State::AtLower;
    std::size_t basis_row = 0;
  };

  std::size_t art(std::size_t row) const { return rows_.size() + row; }

  Rational nonbasic_value(const Var& v) const { return v.state == State::AtUpper ? *v.upper : v.lower; }

  Rational var_value(std::size_t k) const {
    const Var& v = vars_[k];
    return v.state == State::Basic ? xb_[v.basis_row] : nonbasic_value(v);
  }

  Rational cost_of(std::size_t k, bool phase_one) const {
    if (phase_one) return (k >= rows_.size() && k < 2 * rows_.size()) ? Rational(1) : Rational(0);
    return k >= 2 * rows_.size() ? vars_[k].cost : Rational(0);
  }

  template <typename Visit>
  void for_each_entry(std::size_t k, Visit&& visit) const {
    const std::size_t r = rows_.size();
    if (k < r) {
      visit(k, std::int64_t{-1});
    } else if (k < 2 * r) {
      visit(k - r, sigma_[k - r]);
    } else {
      for (const auto& [row, coef] : columns_[k - 2 * r]) visit(row, coef);
    }
  }

  void initialize() {
    const std::size_t r = rows_.size();
    sigma_.assign(r, 1);
    basis_.assign(r, 0);
    xb_.assign(r, Rational(0));
    binv_.assign(r, std::vector<Rational>(r, Rational(0)));
    std::vector<Rational> activity(r, Rational(0));
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      Var& v = vars_[2 * r + c];
      v.state = State::AtLower;
      if (v.upper && *v.upper < v.lower) throw std::invalid_argument("column lower bound exceeds upper bound");
      if (v.lower != 0)
        for (const auto& [row, coef] : columns_[c]) activity[row] += v.lower * coef;
    }
    needs_phase_one_ = false;
    for (std::size_t i = 0; i < r; ++i) {
      Var& s = vars_[i];
      Var& a = vars_[art(i)];
      a.lower = 0;
      a.upper.reset();
      const bool below = activity[i] < s.lower;
      const bool above = s.upper && activity[i] > *s.upper;
      if (!below && !above) {
        s.state = State::Basic;
        s.basis_row = i;
        basis_[i] = i;
        xb_[i] = activity[i];
        binv_[i][i] = -1;
        a.state = State::AtLower;
      } else {
        s.state = below ? State::AtLower : State::AtUpper;
        const Rational target = below ? s.lower : *s.upper;
        sigma_[i] = below ? 1 : -1;  // a_i = (s_i - A_i x) / sigma_i >= 0
        a.state = State::Basic;
        a.basis_row = i;
        basis_[i] = art(i);
        xb_[i] = (target - activity[i]) * sigma_[i];
        binv_[i][i] = sigma_[i];
        needs_phase_one_ = true;
      }
    }
    initialized_ = true;
  }

  Rational phase_one_objective() const {
    Rational z = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) z += var_value(art(i));
    return z;
  }

  std::vector<Rational> ftran(std::size_t k) const {
    const std::size_t r = rows_.size();
    std::vector<Rational> alpha(r, Rational(0));
    for_each_entry(k, [&](std::size_t row, std::int64_t coef) {
      for (std::size_t i = 0; i < r; ++i)
        if (binv_[i][row] != 0) alpha[i] += binv_[i][row] * coef;
    });
    return alpha;
  }

  std::vector<Rational> prices(bool phase_one) const {
    const std::size_t r = rows_.size();
    std::vector<Rational> y(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
      Rational cb = cost_of(basis_[i], phase_one);
      if (cb == 0) continue;
      for (std::size_t t = 0; t < r; ++t)
        if (binv_[i][t] != 0) y[t] += cb * binv_[i][t];
    }
    return y;
  }

  // Sign of the reduced cost c_k - y.A_k, computed on integers by scaling y
  // with the common denominator of its entries.
  struct ScaledPrices {
    std::vector<BigInt> num;
    BigInt denom = 1;
  };

  static ScaledPrices scale(const std::vector<Rational>& y) {
    ScaledPrices s;
    for (const Rational& v : y) s.denom = boost::multiprecision::lcm(s.denom, boost::multiprecision::denominator(v));
    s.num.reserve(y.size());
    for (const Rational& v : y)
      s.num.push_back(boost::multiprecision::numerator(v) * (s.denom / boost::multiprecision::denominator(v)));
    return s;
  }

  int reduced_cost_sign(std::size_t k, const ScaledPrices& y, bool phase_one) const {
    BigInt dot = 0;
    for_each_entry(k, [&](std::size_t row, std::int64_t coef) {
      if (y.num[row] != 0) dot += y.num[row] * coef;
    });
    const Rational c = cost_of(k, phase_one);
    // sign(c - dot/denom) = sign(num(c) * denom - dot * den(c))
    BigInt lhs = boost::multiprecision::numerator(c) * y.denom;
    BigInt rhs = dot * boost::multiprecision::denominator(c);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  LpStatus iterate(bool phase_one) {
    const std::size_t r = rows_.size();
    for (;;) {
      const ScaledPrices y = scale(prices(phase_one));
      std::size_t entering = vars_.size();
      int dir = 0;
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        const Var& v = vars_[k];
        if (v.state == State::Basic) continue;
        if (v.upper && *v.upper == v.lower) continue;
        const int sign = reduced_cost_sign(k, y, phase_one);
        if (v.state == State::AtLower && sign < 0) {
          entering = k;
          dir = 1;
          break;
        }
        if (v.state == State::AtUpper && sign > 0) {
          entering = k;
          dir = -1;
          break;
        }
      }
      if (entering == vars_.size()) return LpStatus::Optimal;
      ++iterations_;

      const std::vector<Rational> alpha = ftran(entering);
      Var& ev = vars_[entering];
      std::optional<Rational> theta;
      std::size_t leave_row = r;  // r means bound flip of the entering variable
      std::size_t leave_var = entering;
      if (ev.upper) theta = *ev.upper - ev.lower;
      for (std::size_t i = 0; i < r; ++i) {
        if (alpha[i] == 0) continue;
        const Rational rate = dir > 0 ? alpha[i] : Rational(-alpha[i]);
        const Var& bv = vars_[basis_[i]];
        Rational limit;
        if (rate > 0) {
          limit = (xb_[i] - bv.lower) / rate;
        } else if (bv.upper) {
          limit = (*bv.upper - xb_[i]) / (-rate);
        } else {
          continue;
        }
        if (!theta || limit < *theta || (limit == *theta && basis_[i] < leave_var)) {
          theta = limit;
          leave_row = i;
          leave_var = basis_[i];
        }
      }
      if (!theta) return LpStatus::Unbounded;

      const Rational step = dir > 0 ? *theta : Rational(-*theta);
      if (step != 0)
        for (std::size_t i = 0; i < r; ++i)
          if (alpha[i] != 0) xb_[i] -= step * alpha[i];

      if (leave_row == r) {
        ev.state = ev.state == State::AtLower ? State::AtUpper : State::AtLower;
        continue;
      }

      const Rational entering_value = nonbasic_value(ev) + step;
      Var& lv = vars_[basis_[leave_row]];
      const bool leaves_low = (dir > 0 ? alpha[leave_row] : Rational(-alpha[leave_row])) > 0;
      lv.state = leaves_low ? State::AtLower : State::AtUpper;

      const Rational pivot = alpha[leave_row];
      for (std::size_t t = 0; t < r; ++t)
        if (binv_[leave_row][t] != 0) binv_[leave_row][t] /= pivot;
      for (std::size_t i = 0; i < r; ++i) {
        if (i == leave_row || alpha[i] == 0) continue;
        for (std::size_t t = 0; t < r; ++t)
          if (binv_[leave_row][t] != 0) binv_[i][t] -= alpha[i] * binv_[leave_row][t];
      }
      basis_[leave_row] = entering;
      ev.state = State::Basic;
      ev.basis_row = leave_row;
      xb_[leave_row] = entering_value;
    }
  }

  std::vector<LpRowBounds> rows_;
  std::vector<Var> vars_;  // row activities, artificials, then structural columns
  std::vector<SparseColumn> columns_;
  std::vector<std::int64_t> sigma_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> xb_;
  std::vector<std::vector<Rational>> binv_;
  bool initialized_ = false;
  bool needs_phase_one_ = false;
  LpStatus status_ = LpStatus::Optimal;
  std::size_t iterations_ = 0;
};

}  // namespace csplab

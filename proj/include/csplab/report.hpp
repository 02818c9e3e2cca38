#pragma once

// Text and JSON renderings of solver reports. Rationals are always printed
// exactly, with a decimal next to them.

#include "csplab/corpus.hpp"
#include "csplab/exact.hpp"
#include "csplab/lprelax.hpp"
#include "csplab/patmin.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace csplab {

using Json = nlohmann::ordered_json;

inline std::string exact_and_decimal(const Rational& r) {
  return to_fraction_string(r) + " (" + to_decimal_string(r) + ")";
}

inline Json to_json(const Instance& instance) {
  Json orders = Json::array();
  for (const Order& o : instance.orders()) {
    Json q = o.max_qty.bounded() ? Json(o.max_qty.value()) : Json("*");
    orders.push_back({{"size", o.size}, {"min_qty", o.min_qty}, {"max_qty", q}});
  }
  return {{"master_width", instance.master_width()}, {"orders", orders}};
}

inline Json to_json(const Instance& instance, const Solution& solution) {
  const SolutionSummary s = summarize(instance, solution);
  Json entries = Json::array();
  for (const auto& e : solution.entries())
    entries.push_back({{"pattern", e.pattern.counts()}, {"reps", e.reps}, {"waste", e.pattern.waste()}});
  return {{"entries", entries},
          {"masters", s.masters},
          {"waste", s.total_waste},
          {"percent_waste", to_percent_string(s.percent_waste)},
          {"percent_waste_exact", to_fraction_string(s.percent_waste * 100)},
          {"produced", s.produced},
          {"split_profile", s.split_profile},
          {"pattern_count", s.pattern_count}};
}

inline std::string render_solution(const Instance& instance, const Solution& solution) {
  std::ostringstream out;
  const SolutionSummary s = summarize(instance, solution);
  for (const auto& e : solution.entries())
    out << "  " << e.reps << " x " << e.pattern.str() << "  waste " << e.pattern.waste() << "\n";
  out << "masters " << s.masters << "\n";
  out << "waste " << s.total_waste << " (" << to_percent_string(s.percent_waste) << ")\n";
  out << "patterns " << s.pattern_count << "\n";
  out << "produced";
  for (Count p : s.produced) out << " " << p;
  out << "\nsplits";
  for (Count p : s.split_profile) out << " " << p;
  out << "\n";
  return out.str();
}

inline Json to_json(const Instance& instance, const SolveReport& r) {
  Json j = {{"objective", to_string(r.objective)},
            {"status", to_string(r.status)},
            {"objective_value", r.objective_value},
            {"secondary_value", r.secondary_value},
            {"best_bound", to_fraction_string(r.best_bound)},
            {"best_bound_decimal", to_decimal_string(r.best_bound)},
            {"master_cap", r.master_cap ? Json(*r.master_cap) : Json(nullptr)},
            {"nodes", r.nodes}};
  j["solution"] = r.has_solution ? to_json(instance, r.solution) : Json(nullptr);
  return j;
}

inline std::string render(const Instance& instance, const SolveReport& r) {
  std::ostringstream out;
  out << "objective " << to_string(r.objective) << "\n";
  out << "status " << to_string(r.status) << "\n";
  if (r.has_solution) {
    out << "objective_value " << r.objective_value << "\n";
    out << "secondary_value " << r.secondary_value << "\n";
  }
  out << "best_bound " << exact_and_decimal(r.best_bound) << "\n";
  if (r.master_cap) out << "master_cap " << *r.master_cap << "\n";
  if (r.has_solution) out << render_solution(instance, r.solution);
  return out.str();
}

inline Json to_json(const LpReport& lp) {
  Json acts = Json::array();
  for (const LpActivity& a : lp.activities)
    acts.push_back({{"pattern", a.pattern.counts()},
                    {"level", to_fraction_string(a.level)},
                    {"level_decimal", to_decimal_string(a.level)}});
  Json duals = Json::array();
  for (const Rational& y : lp.duals) duals.push_back(to_fraction_string(y));
  return {{"value", to_fraction_string(lp.value)},
          {"value_decimal", to_decimal_string(lp.value)},
          {"bound_mode", to_string(lp.bound_mode)},
          {"activities", acts},
          {"duals", duals},
          {"columns", lp.columns},
          {"iterations", lp.iterations}};
}

inline Json to_json(const GapReport& g) {
  return {{"bound_mode", to_string(g.bound_mode)},
          {"status", to_string(g.status)},
          {"z_lp", to_fraction_string(g.z_lp)},
          {"z_lp_decimal", to_decimal_string(g.z_lp)},
          {"z_star", g.z_star},
          {"gap", to_fraction_string(g.gap)},
          {"gap_decimal", to_decimal_string(g.gap)},
          {"rounded_gap", g.rounded_gap},
          {"irup", g.irup()},
          {"mirup", g.mirup()}};
}

inline std::string render(const GapReport& g, const LpReport& lp) {
  std::ostringstream out;
  out << "bound_mode " << to_string(g.bound_mode) << "\n";
  out << "z_lp " << exact_and_decimal(g.z_lp) << "\n";
  for (const LpActivity& a : lp.activities) out << "  " << exact_and_decimal(a.level) << " x " << a.pattern.str() << "\n";
  out << "z_star " << g.z_star << (g.status == SolveStatus::ProvedOptimal ? "" : " (not proved)") << "\n";
  out << "gap " << exact_and_decimal(g.gap) << "\n";
  out << "rounded_gap " << g.rounded_gap << "\n";
  out << "irup " << (g.irup() ? "true" : "false") << "\n";
  out << "mirup " << (g.mirup() ? "true" : "false") << "\n";
  return out.str();
}

inline Json to_json(const Instance& instance, const PatminReport& r) {
  return {{"status", to_string(r.status)},
          {"optimal_waste", r.optimal_waste},
          {"optimal_masters", r.optimal_masters},
          {"min_pattern_count", r.min_pattern_count},
          {"proven_lower_bound", r.proven_lower_bound},
          {"pattern_lower_bound", pattern_lower_bound(instance)},
          {"pattern_class", to_string(classify(instance.order_count(), r.min_pattern_count))},
          {"nodes", r.nodes},
          {"witness", to_json(instance, r.witness)}};
}

inline std::string render(const Instance& instance, const PatminReport& r) {
  std::ostringstream out;
  out << "status " << to_string(r.status) << "\n";
  out << "optimal_waste " << r.optimal_waste << "\n";
  out << "min_pattern_count " << r.min_pattern_count << "\n";
  out << "proven_lower_bound " << r.proven_lower_bound << "\n";
  out << "pattern_lower_bound " << pattern_lower_bound(instance) << "\n";
  out << "class " << to_string(classify(instance.order_count(), r.min_pattern_count)) << "\n";
  out << render_solution(instance, r.witness);
  return out.str();
}

inline Json to_json(const Instance& instance, const SplitReport& r) {
  return {{"status", to_string(r.status)},
          {"order_index", r.order_index},
          {"order_size", instance.order(r.order_index).size},
          {"optimal_waste", r.optimal_waste},
          {"min_appearances", r.min_appearances},
          {"proven_lower_bound", r.proven_lower_bound},
          {"witness", to_json(instance, r.witness)}};
}

inline std::string render(const Instance& instance, const SplitReport& r) {
  std::ostringstream out;
  out << "status " << to_string(r.status) << "\n";
  out << "order " << r.order_index << " (size " << instance.order(r.order_index).size << ")\n";
  out << "optimal_waste " << r.optimal_waste << "\n";
  out << "min_appearances " << r.min_appearances << "\n";
  out << "proven_lower_bound " << r.proven_lower_bound << "\n";
  out << render_solution(instance, r.witness);
  return out.str();
}

inline Json to_json(const VerifyReport& r) {
  Json rows = Json::array();
  for (const VerifyRow& row : r.rows)
    rows.push_back({{"entry", row.entry},
                    {"check", row.check},
                    {"expected", row.expected},
                    {"actual", row.actual},
                    {"status", to_string(row.status)},
                    {"anchor", row.anchor},
                    {"source", row.source}});
  return {{"rows", rows},
          {"pass", r.count(CheckStatus::Pass)},
          {"fail", r.count(CheckStatus::Fail)},
          {"timeout", r.count(CheckStatus::Timeout)}};
}

inline std::string render(const VerifyReport& r) {
  std::size_t we = 5, wc = 5, wx = 8, wa = 6;
  for (const VerifyRow& row : r.rows) {
    we = std::max(we, row.entry.size());
    wc = std::max(wc, row.check.size());
    wx = std::max(wx, row.expected.size());
    wa = std::max(wa, row.actual.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream out;
  out << pad("entry", we) << pad("check", wc) << pad("expected", wx) << pad("actual", wa) << pad("status", 7)
      << "anchor\n";
  for (const VerifyRow& row : r.rows)
    out << pad(row.entry, we) << pad(row.check, wc) << pad(row.expected, wx) << pad(row.actual, wa)
        << pad(to_string(row.status), 7) << row.anchor << "\n";
  out << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
      << r.count(CheckStatus::Timeout) << " timeout\n";
  return out.str();
}

}  // namespace csplab

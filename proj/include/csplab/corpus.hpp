#pragma once

// Instance text format, the built-in registry of reference instances with
// their expected results, the seeded generator, and corpus verification.

#include "csplab/core.hpp"
#include "csplab/exact.hpp"
#include "csplab/lprelax.hpp"
#include "csplab/patmin.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace csplab {

// ---------------------------------------------------------------- format

enum class ParseErrorKind { Malformed, DuplicateSize, SizeExceedsMaster, MinExceedsMax, MissingMaster, Invalid };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

struct ParsedInstance {
  Instance instance;
  // labels[j]: 1-based position in the file of the order stored at index j
  std::vector<std::size_t> labels;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

inline std::optional<std::int64_t> parse_integer(const std::string& s) {
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

inline ParsedInstance parse_instance_labeled(const std::string& text) {
  std::istringstream in(text);
  std::optional<Length> master;
  struct Row {
    Order order;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = detail::split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    if (!master) {
      if (words.size() != 2 || words[0] != "master")
        throw ParseError(ParseErrorKind::MissingMaster, lineno, "expected 'master <width>'");
      auto w = detail::parse_integer(words[1]);
      if (!w || *w < 1) throw ParseError(ParseErrorKind::Malformed, lineno, "master width must be a positive integer");
      master = *w;
      continue;
    }
    if (words.size() != 4 || words[0] != "order")
      throw ParseError(ParseErrorKind::Malformed, lineno, "expected 'order <size> <qmin> <qmax|*>'");
    auto size = detail::parse_integer(words[1]);
    auto q = detail::parse_integer(words[2]);
    if (!size || *size < 1) throw ParseError(ParseErrorKind::Malformed, lineno, "order size must be a positive integer");
    if (!q) throw ParseError(ParseErrorKind::Malformed, lineno, "minimum quantity must be a nonnegative integer");
    MaxQty qmax = MaxQty::unbounded();
    if (words[3] != "*") {
      auto Q = detail::parse_integer(words[3]);
      if (!Q) throw ParseError(ParseErrorKind::Malformed, lineno, "maximum quantity must be an integer or '*'");
      qmax = MaxQty(*Q);
    }
    if (*size > *master)
      throw ParseError(ParseErrorKind::SizeExceedsMaster, lineno,
                       "order size " + words[1] + " exceeds master width " + std::to_string(*master));
    if (qmax.bounded() && *q > qmax.value())
      throw ParseError(ParseErrorKind::MinExceedsMax, lineno, "minimum quantity exceeds maximum");
    for (const Row& r : rows)
      if (r.order.size == *size)
        throw ParseError(ParseErrorKind::DuplicateSize, lineno,
                         "duplicate order size " + words[1] + " (first on line " + std::to_string(r.line) + ")");
    rows.push_back({{*size, *q, qmax}, lineno});
  }
  if (!master) throw ParseError(ParseErrorKind::MissingMaster, lineno, "missing 'master' line");

  std::vector<std::size_t> perm(rows.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].order.size > rows[b].order.size; });
  std::vector<Order> orders;
  std::vector<std::size_t> labels;
  for (std::size_t i : perm) {
    orders.push_back(rows[i].order);
    labels.push_back(i + 1);
  }
  try {
    return {Instance(*master, std::move(orders)), std::move(labels)};
  } catch (const InvalidInstance& e) {
    throw ParseError(ParseErrorKind::Invalid, lineno, e.what());
  }
}

inline Instance parse_instance(const std::string& text) { return parse_instance_labeled(text).instance; }

inline std::string emit_instance(const Instance& instance) {
  std::string out = "master " + std::to_string(instance.master_width()) + "\n";
  for (const Order& o : instance.orders())
    out += "order " + std::to_string(o.size) + " " + std::to_string(o.min_qty) + " " + o.max_qty.str() + "\n";
  return out;
}

// ------------------------------------------------------------- generator

struct GenParams {
  std::size_t order_count = 10;
  Length master_width = 5000;
  Rational size_lo = Rational(8, 100);  // fractions of W
  Rational size_hi = Rational(35, 100);
  Count demand_lo = 10;
  Count demand_hi = 60;
  bool equality = true;  // false: one-sided, Q unbounded

  void validate() const {
    if (order_count < 1) throw std::invalid_argument("order count must be positive");
    if (master_width < 1) throw std::invalid_argument("master width must be positive");
    if (!(size_lo > 0 && size_lo < size_hi && size_hi <= 1))
      throw std::invalid_argument("size range must satisfy 0 < lo < hi <= 1");
    if (demand_lo < 1 || demand_hi < demand_lo) throw std::invalid_argument("demand range must satisfy 1 <= lo <= hi");
  }
};

namespace detail {

// Uniform in [0, n) by rejection, so results do not depend on the standard
// library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

}  // namespace detail

inline Instance generate_instance(const GenParams& params, std::uint64_t seed) {
  params.validate();
  const Length lo = std::max<Length>(1, to_int64(ceil(params.size_lo * params.master_width)));
  const Length hi = to_int64(floor(params.size_hi * params.master_width));
  if (hi < lo || static_cast<std::uint64_t>(hi - lo + 1) < params.order_count)
    throw std::invalid_argument("size range [" + std::to_string(lo) + "," + std::to_string(hi) + "] holds fewer than " +
                                std::to_string(params.order_count) + " distinct sizes");
  std::mt19937_64 rng(seed);
  std::vector<Length> sizes;
  while (sizes.size() < params.order_count) {
    Length s = lo + static_cast<Length>(detail::uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    if (std::find(sizes.begin(), sizes.end(), s) == sizes.end()) sizes.push_back(s);
  }
  std::vector<Order> orders;
  for (Length s : sizes) {
    Count q = params.demand_lo +
              static_cast<Count>(detail::uniform_below(rng, static_cast<std::uint64_t>(params.demand_hi - params.demand_lo + 1)));
    orders.push_back({s, q, params.equality ? MaxQty(q) : MaxQty::unbounded()});
  }
  std::sort(orders.begin(), orders.end(), [](const Order& a, const Order& b) { return a.size > b.size; });
  return Instance(params.master_width, std::move(orders));
}

// ---------------------------------------------------------------- corpus

enum class CostClass { Fast, Long };

inline const char* to_string(CostClass c) { return c == CostClass::Fast ? "fast" : "long"; }

struct Expectation {
  std::string check;     // see evaluate_check for the vocabulary
  std::string expected;  // exact text, or ">N" for a strict lower bound
  std::string source;    // published | derived | trivial
  std::string anchor;    // where the claim comes from, in words
};

struct CorpusEntry {
  std::string id;
  Instance instance;
  std::vector<Expectation> expectations;
  CostClass cost_class = CostClass::Fast;
  std::optional<Solution> stored_witness;
};

inline Instance equality_instance(Length width, const std::vector<std::pair<Length, Count>>& orders) {
  std::vector<Order> o;
  for (auto [w, q] : orders) o.push_back({w, q, MaxQty(q)});
  return Instance(width, std::move(o));
}

inline std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  const std::string pub = "published", der = "derived", triv = "trivial";

  out.push_back({"gap132",
                 equality_instance(132, {{44, 2}, {33, 3}, {12, 6}}),
                 {{"gap.z_lp", "259/132", pub, "integrality gap example, one-sided"},
                  {"gap.z_star", "3", pub, "integrality gap example, one-sided"},
                  {"gap.gap", "137/132", der, "z* - z_LP"},
                  {"gap.rounded_gap", "1", der, "z* - ceil(z_LP)"},
                  {"gap.irup", "false", pub, "round-up property fails"},
                  {"gap.mirup", "true", pub, "modified round-up bound holds"}},
                 CostClass::Fast,
                 std::nullopt});

  out.push_back({"twosided2",
                 Instance(1000, {{340, 15, MaxQty(18)}, {300, 15, MaxQty(15)}}),
                 {{"waste.waste", "380", pub, "two-sided master-vs-waste table"},
                  {"waste.masters", "11", pub, "two-sided master-vs-waste table"},
                  {"waste.percent", "3.455%", der, "380 / 11000"},
                  {"masters.masters", "10", pub, "two-sided master-vs-waste table"},
                  {"masters.waste", "400", pub, "two-sided master-vs-waste table"},
                  {"masters.percent", "4.000%", der, "400 / 10000"}},
                 CostClass::Fast,
                 std::nullopt});

  out.push_back({"onesided2",
                 Instance(1000, {{340, 15, MaxQty::unbounded()}, {300, 15, MaxQty::unbounded()}}),
                 {{"masters.masters", "10", pub, "one-sided master-vs-waste variant"},
                  {"waste.masters", ">10", pub, "waste optimum needs more masters than the master optimum"},
                  {"waste.waste", "300", der, "computed by the exact solver and the oracle"},
                  {"waste.percent", "2.000%", der, "300 / 15000"}},
                 CostClass::Fast,
                 std::nullopt});

  out.push_back({"split1",
                 equality_instance(10, {{3, 7}}),
                 {{"masters.masters", "3", triv, "ceil(7 / 3)"},
                  {"patmin.k", "2", pub, "single-order splitting example"},
                  {"split[0]", "2", pub, "single-order splitting example"},
                  {"patmin.lower_bound", "1", triv, "ceil(3 / 10)"}},
                 CostClass::Fast,
                 std::nullopt});

  out.push_back({"split275",
                 equality_instance(1000, {{400, 1}, {375, 1}, {350, 1}, {275, 300}}),
                 {{"split[3]", "3", pub, "size 275 appears in every pattern"},
                  {"split[3].witness_k", "3", der, "exhaustive search over the feasible patterns"}},
                 CostClass::Fast,
                 std::nullopt});

  out.push_back({"mplus1",
                 equality_instance(1000, {{300, 7}, {250, 100}}),
                 {{"patmin.k", "3", pub, "three-pattern optimum for m = 2"},
                  {"patmin.waste", "900", der, "oracle over the four feasible patterns"},
                  {"oracle.waste", "900", der, "oracle over the four feasible patterns"},
                  {"patmin.lower_bound", "1", triv, "ceil(550 / 1000)"}},
                 CostClass::Fast,
                 std::nullopt});

  const Instance nine = equality_instance(
      560, {{200, 42}, {148, 22}, {142, 32}, {140, 23}, {132, 22}, {125, 36}, {115, 39}, {114, 39}, {109, 46}});
  const Solution nine_witness = make_solution(nine, {{{1, 0, 1, 0, 0, 0, 0, 0, 2}, 5},
                                                     {{1, 0, 0, 1, 0, 0, 0, 0, 2}, 1},
                                                     {{1, 0, 0, 0, 1, 0, 0, 2, 0}, 12},
                                                     {{1, 0, 0, 0, 0, 2, 0, 0, 1}, 12},
                                                     {{1, 0, 0, 0, 0, 1, 2, 0, 0}, 12},
                                                     {{0, 3, 0, 0, 0, 0, 1, 0, 0}, 7},
                                                     {{0, 1, 0, 2, 1, 0, 0, 0, 0}, 1},
                                                     {{0, 0, 3, 0, 1, 0, 0, 0, 0}, 9},
                                                     {{0, 0, 0, 4, 0, 0, 0, 0, 0}, 5},
                                                     {{0, 0, 0, 0, 0, 0, 2, 0, 3}, 4},
                                                     {{0, 0, 0, 0, 0, 0, 0, 3, 2}, 5}});
  out.push_back({"nine11",
                 nine,
                 {{"patmin.lower_bound", "3", der, "ceil(1225 / 560)"},
                  {"witness.verified", "true", pub, "stored 11-pattern waste-optimal solution"},
                  {"waste.waste", "111", der, "computed by the exact solver"},
                  {"patmin.k", "11", pub, "nine-order instance needs 11 patterns"}},
                 CostClass::Long,
                 nine_witness});

  out.push_back({"onepat5",
                 equality_instance(1000, {{300, 100}, {250, 100}, {200, 100}, {150, 100}, {90, 100}}),
                 {{"patmin.k", "1", pub, "single-pattern construction"},
                  {"patmin.witness", "100x(1,1,1,1,1)", pub, "single-pattern construction"},
                  {"waste.masters", "100", pub, "single-pattern construction"},
                  {"waste.waste", "1000", triv, "100 * (1000 - 990)"},
                  {"patmin.lower_bound", "1", pub, "ceil(990 / 1000)"}},
                 CostClass::Fast,
                 std::nullopt});

  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

// ---------------------------------------------------------- verification

enum class CheckStatus { Pass, Fail, Timeout };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Timeout: return "timeout";
  }
  return "?";
}

struct VerifyRow {
  std::string entry;
  std::string check;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Fail;
  std::string anchor;
  std::string source;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [s](const VerifyRow& r) { return r.status == s; }));
  }
  bool all_passed() const { return count(CheckStatus::Pass) == rows.size(); }
  bool any_failed() const { return count(CheckStatus::Fail) > 0; }
};

enum class Selection { Fast, All };

struct VerifyOptions {
  Selection selection = Selection::Fast;
  // Budget for long entries; 0 reports them all as timeout.
  double long_budget_seconds = std::numeric_limits<double>::infinity();
  std::size_t workers = 1;
};

namespace detail {

class TimedOut : public std::runtime_error {
 public:
  TimedOut() : std::runtime_error("time limit") {}
};

/// Lazily runs the operations behind each check kind once per entry.
class EntryEvaluator {
 public:
  EntryEvaluator(const CorpusEntry& entry, double budget) : entry_(entry), budget_(budget) {}

  std::string evaluate(const std::string& check) {
    const Instance& inst = entry_.instance;
    if (check.rfind("gap.", 0) == 0) {
      const GapReport& g = gap();
      if (check == "gap.z_lp") return to_fraction_string(g.z_lp);
      if (check == "gap.z_star") return std::to_string(g.z_star);
      if (check == "gap.gap") return to_fraction_string(g.gap);
      if (check == "gap.rounded_gap") return std::to_string(g.rounded_gap);
      if (check == "gap.irup") return g.irup() ? "true" : "false";
      if (check == "gap.mirup") return g.mirup() ? "true" : "false";
    }
    if (check.rfind("waste.", 0) == 0 || check.rfind("masters.", 0) == 0) {
      const bool waste = check[0] == 'w';
      const SolveReport& r = solve(waste ? Objective::MinWaste : Objective::MinMasters);
      const std::string field = check.substr(check.find('.') + 1);
      const SolutionSummary s = summarize(inst, r.solution);
      if (field == "waste") return std::to_string(s.total_waste);
      if (field == "masters") return std::to_string(s.masters);
      if (field == "percent") return to_percent_string(s.percent_waste);
    }
    if (check == "oracle.waste") return std::to_string(brute_force_solve(inst, Objective::MinWaste).objective_value);
    if (check == "patmin.lower_bound") return std::to_string(pattern_lower_bound(inst));
    if (check.rfind("patmin.", 0) == 0) {
      const PatminReport& p = patmin();
      if (check == "patmin.k") return std::to_string(p.min_pattern_count);
      if (check == "patmin.waste") return std::to_string(p.optimal_waste);
      if (check == "patmin.witness") {
        std::string s;
        for (const auto& e : p.witness.entries()) s += (s.empty() ? "" : " + ") + std::to_string(e.reps) + "x" + e.pattern.str();
        return s;
      }
    }
    if (check.rfind("split[", 0) == 0) {
      const std::size_t close = check.find(']');
      const std::size_t j = std::stoul(check.substr(6, close - 6));
      const SplitReport& r = split(j);
      if (close + 1 == check.size()) return std::to_string(r.min_appearances);
      if (check.substr(close + 1) == ".witness_k") return std::to_string(r.witness.pattern_count());
    }
    if (check == "witness.verified") {
      if (!entry_.stored_witness) return "no witness";
      const WitnessCheck c = verify_witness(inst, *entry_.stored_witness, remaining());
      if (c.solver_status == SolveStatus::TimeLimit) throw TimedOut();
      return c.waste_optimal ? "true" : "false";
    }
    throw std::invalid_argument("unknown check '" + check + "'");
  }

 private:
  double remaining() const { return deadline_.remaining_seconds(); }

  const GapReport& gap() {
    if (!gap_) {
      gap_ = integrality_gap(entry_.instance, BoundMode::OneSided, remaining());
      if (gap_->status == SolveStatus::TimeLimit) throw TimedOut();
    }
    return *gap_;
  }
  const SolveReport& solve(Objective o) {
    auto it = solves_.find(o);
    if (it == solves_.end()) {
      SolveOptions opts;
      opts.time_limit_seconds = remaining();
      it = solves_.emplace(o, solve_exact(entry_.instance, o, opts)).first;
    }
    if (it->second.status == SolveStatus::TimeLimit) throw TimedOut();
    if (it->second.status == SolveStatus::Infeasible) throw std::runtime_error("infeasible");
    return it->second;
  }
  const PatminReport& patmin() {
    if (!patmin_) {
      PatminOptions opts;
      opts.time_limit_seconds = remaining();
      patmin_ = min_patterns(entry_.instance, opts);
    }
    if (patmin_->status != PatminStatus::ProvedOptimal) throw TimedOut();
    return *patmin_;
  }
  const SplitReport& split(std::size_t j) {
    auto it = splits_.find(j);
    if (it == splits_.end()) it = splits_.emplace(j, min_split_for_order(entry_.instance, j, remaining())).first;
    if (it->second.status != PatminStatus::ProvedOptimal) throw TimedOut();
    return it->second;
  }

  const CorpusEntry& entry_;
  double budget_;
  Deadline deadline_{budget_};
  std::optional<GapReport> gap_;
  std::map<Objective, SolveReport> solves_;
  std::optional<PatminReport> patmin_;
  std::map<std::size_t, SplitReport> splits_;
};

inline bool matches(const std::string& expected, const std::string& actual) {
  if (!expected.empty() && expected[0] == '>') {
    try {
      std::size_t used = 0;
      const long long a = std::stoll(actual, &used);
      return used == actual.size() && a > std::stoll(expected.substr(1));
    } catch (const std::exception&) {
      return false;
    }
  }
  return expected == actual;
}

inline std::vector<VerifyRow> verify_entry(const CorpusEntry& entry, double budget) {
  std::vector<VerifyRow> rows;
  const bool skip = entry.cost_class == CostClass::Long && budget <= 0;
  EntryEvaluator eval(entry, budget);
  for (const Expectation& e : entry.expectations) {
    VerifyRow row{entry.id, e.check, e.expected, "", CheckStatus::Timeout, e.anchor, e.source};
    if (!skip) {
      try {
        row.actual = eval.evaluate(e.check);
        row.status = matches(e.expected, row.actual) ? CheckStatus::Pass : CheckStatus::Fail;
      } catch (const TimedOut&) {
        row.status = CheckStatus::Timeout;
      } catch (const std::exception& ex) {
        row.actual = std::string("error: ") + ex.what();
        row.status = CheckStatus::Fail;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

/// Runs every expectation of the given entries. Fast entries get no time
/// limit; long entries share `long_budget_seconds` each. Rows come out in
/// entry order, then expectation order, whatever the worker count.
inline VerifyReport verify_entries(const std::vector<CorpusEntry>& entries, const VerifyOptions& options) {
  std::vector<const CorpusEntry*> selected;
  for (const CorpusEntry& e : entries)
    if (options.selection == Selection::All || e.cost_class == CostClass::Fast) selected.push_back(&e);

  std::vector<std::vector<VerifyRow>> results(selected.size());
  auto run = [&](std::size_t i) {
    const CorpusEntry& e = *selected[i];
    const double budget =
        e.cost_class == CostClass::Long ? options.long_budget_seconds : std::numeric_limits<double>::infinity();
    results[i] = detail::verify_entry(e, budget);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, selected.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) run(i);
      });
    for (auto& t : pool) t.join();
  }
  VerifyReport report;
  for (auto& r : results)
    for (auto& row : r) report.rows.push_back(std::move(row));
  return report;
}

inline VerifyReport verify_corpus(const VerifyOptions& options = {}) {
  return verify_entries(builtin_corpus(), options);
}

}  // namespace csplab

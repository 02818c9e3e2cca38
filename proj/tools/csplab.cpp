// Command-line front end.
//
//   csplab solve   --input F [--objective waste|masters]
//   csplab gap     --input F [--bounds one-sided|equality|two-sided]
//   csplab patterns --input F [--mode all|maximal] [--cap]
//   csplab patmin  --input F [--prove]
//   csplab splits  --input F (--order J | --all-orders)
//   csplab verify  [--all]
//   csplab gen     [--orders M --width W ...] --seed N
//
// Exit status: 0 ok, 1 infeasible or failed check, 2 usage or parse error,
// 3 time limit reached without proof.

#include "csplab/csplab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace {

using namespace csplab;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kTimeLimit = 3;

constexpr double kPatminDefaultLimit = 60.0;

struct Shared {
  std::string input;
  double time_limit = std::numeric_limits<double>::infinity();
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  bool json = false;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw CLI::ValidationError("--input", "an instance file is required");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Shared& s, const Json& j, const std::string& text) {
  if (s.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_solve(const Shared& s, const std::string& objective_name) {
  const Instance inst = parse_instance(read_input(s.input));
  const Objective obj = objective_name == "masters" ? Objective::MinMasters : Objective::MinWaste;
  SolveOptions opts;
  opts.time_limit_seconds = s.time_limit;
  const SolveReport r = solve_exact(inst, obj, opts);
  if (r.has_solution && !validate_solution(inst, r.solution).feasible)
    throw std::logic_error("solver returned an infeasible solution");
  emit(s, to_json(inst, r), render(inst, r));
  if (r.status == SolveStatus::Infeasible) return kFailed;
  return r.status == SolveStatus::TimeLimit ? kTimeLimit : kOk;
}

BoundMode parse_bounds(const std::string& b) {
  if (b == "equality") return BoundMode::Equality;
  if (b == "two-sided") return BoundMode::TwoSided;
  return BoundMode::OneSided;
}

int cmd_gap(const Shared& s, const std::string& bounds) {
  const Instance inst = parse_instance(read_input(s.input));
  const BoundMode mode = parse_bounds(bounds);
  GapReport g;
  LpReport lp;
  try {
    lp = lp_relaxation(inst, mode);
    g = integrality_gap(inst, mode, s.time_limit);
  } catch (const InfeasibleLp& e) {
    std::cerr << "csplab: " << e.what() << "\n";
    return kFailed;
  }
  Json j = to_json(g);
  j["lp"] = to_json(lp);
  emit(s, j, render(g, lp));
  return g.status == SolveStatus::TimeLimit ? kTimeLimit : kOk;
}

int cmd_patterns(const Shared& s, const std::string& mode, bool cap) {
  const Instance inst = parse_instance(read_input(s.input));
  EnumerationMode em;
  em.filter = mode == "maximal" ? PatternFilter::MaximalOnly : PatternFilter::AllFeasible;
  em.cap_by_max_qty = cap;
  const auto pats = enumerate_patterns(inst, em);
  Json arr = Json::array();
  std::ostringstream text;
  for (const Pattern& p : pats) {
    const bool maximal = is_maximal(inst, p);
    arr.push_back({{"pattern", p.counts()}, {"waste", p.waste()}, {"maximal", maximal}});
    text << p.str() << "  waste " << p.waste() << (maximal ? "  maximal" : "") << "\n";
  }
  text << pats.size() << " patterns\n";
  emit(s, Json{{"mode", mode}, {"capped", cap}, {"count", pats.size()}, {"patterns", arr}}, text.str());
  return kOk;
}

int cmd_patmin(const Shared& s, bool prove) {
  const Instance inst = parse_instance(read_input(s.input));
  PatminOptions opts;
  opts.time_limit_seconds = std::isinf(s.time_limit) && !prove ? kPatminDefaultLimit : s.time_limit;
  PatminReport r;
  try {
    r = min_patterns(inst, opts);
  } catch (const PatminInfeasible& e) {
    std::cerr << "csplab: " << e.what() << "\n";
    return kFailed;
  }
  emit(s, to_json(inst, r), render(inst, r));
  return r.status == PatminStatus::ProvedOptimal ? kOk : kTimeLimit;
}

int cmd_splits(const Shared& s, std::optional<std::size_t> order) {
  const Instance inst = parse_instance(read_input(s.input));
  std::vector<std::size_t> which;
  if (order) {
    if (*order >= inst.order_count()) throw CLI::ValidationError("--order", "order index out of range");
    which.push_back(*order);
  } else {
    for (std::size_t j = 0; j < inst.order_count(); ++j) which.push_back(j);
  }
  const Deadline deadline(s.time_limit);
  Json arr = Json::array();
  std::string text;
  bool timed_out = false;
  for (std::size_t j : which) {
    SplitReport r;
    try {
      r = min_split_for_order(inst, j, deadline.remaining_seconds());
    } catch (const PatminInfeasible& e) {
      std::cerr << "csplab: " << e.what() << "\n";
      return kFailed;
    }
    timed_out = timed_out || r.status != PatminStatus::ProvedOptimal;
    arr.push_back(to_json(inst, r));
    text += render(inst, r);
  }
  emit(s, order ? arr[0] : Json{{"splits", arr}}, text);
  return timed_out ? kTimeLimit : kOk;
}

int cmd_verify(const Shared& s, bool all) {
  VerifyOptions opts;
  opts.selection = all ? Selection::All : Selection::Fast;
  opts.long_budget_seconds = s.time_limit;
  opts.workers = s.workers;
  const VerifyReport r = verify_corpus(opts);
  emit(s, to_json(r), render(r));
  return r.any_failed() ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact one-dimensional cutting stock solver"};
  app.require_subcommand(1, 1);
  Shared shared;
  auto add_shared = [&](CLI::App* c) {
    c->add_option("--input", shared.input, "Instance file ('-' reads standard input)");
    c->add_option("--time-limit", shared.time_limit, "Time limit in seconds")->check(CLI::NonNegativeNumber);
    c->add_option("--workers", shared.workers, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--seed", shared.seed, "Random seed");
    c->add_flag("--json", shared.json, "Print a JSON document");
  };

  std::string objective = "waste";
  auto* solve = app.add_subcommand("solve", "Proven-optimal integer solution");
  add_shared(solve);
  solve->add_option("--objective", objective, "waste or masters")->check(CLI::IsMember({"waste", "masters"}));

  std::string bounds = "one-sided";
  auto* gap = app.add_subcommand("gap", "LP relaxation against the integer optimum");
  add_shared(gap);
  gap->add_option("--bounds", bounds, "one-sided, equality or two-sided")
      ->check(CLI::IsMember({"one-sided", "equality", "two-sided"}));

  std::string mode = "all";
  bool cap = false;
  auto* patterns = app.add_subcommand("patterns", "List feasible patterns");
  add_shared(patterns);
  patterns->add_option("--mode", mode, "all or maximal")->check(CLI::IsMember({"all", "maximal"}));
  patterns->add_flag("--cap", cap, "Cap counts by the maximum quantities");

  bool prove = false;
  auto* patmin = app.add_subcommand("patmin", "Fewest patterns among waste-optimal solutions");
  add_shared(patmin);
  patmin->add_flag("--prove", prove, "No default time limit; run until k is proved");

  std::optional<std::size_t> order;
  bool all_orders = false;
  auto* splits = app.add_subcommand("splits", "Fewest patterns containing an order");
  add_shared(splits);
  auto* order_opt = splits->add_option("--order", order, "Order index, 0 = largest size");
  splits->add_flag("--all-orders", all_orders, "Every order")->excludes(order_opt);

  bool all = false;
  auto* verify = app.add_subcommand("verify", "Check the built-in reference instances");
  add_shared(verify);
  verify->add_flag("--all", all, "Include long-running entries");

  GenParams gp;
  double size_lo = 0.08, size_hi = 0.35;
  bool one_sided = false;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  add_shared(gen);
  gen->add_option("--orders", gp.order_count, "Order count")->check(CLI::PositiveNumber);
  gen->add_option("--width", gp.master_width, "Master width")->check(CLI::PositiveNumber);
  gen->add_option("--size-lo", size_lo, "Smallest size as a fraction of the width");
  gen->add_option("--size-hi", size_hi, "Largest size as a fraction of the width");
  gen->add_option("--demand-lo", gp.demand_lo, "Smallest demand");
  gen->add_option("--demand-hi", gp.demand_hi, "Largest demand");
  gen->add_flag("--one-sided", one_sided, "Unbounded maximum quantities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(shared, objective);
    if (*gap) return cmd_gap(shared, bounds);
    if (*patterns) return cmd_patterns(shared, mode, cap);
    if (*patmin) return cmd_patmin(shared, prove);
    if (*splits) {
      if (!order && !all_orders) throw CLI::ValidationError("--order", "give --order J or --all-orders");
      return cmd_splits(shared, order);
    }
    if (*verify) return cmd_verify(shared, all);
    if (*gen) {
      // Decimal fractions are read exactly, e.g. 0.08 -> 2/25.
      auto exact = [](double v) {
        const auto scaled = static_cast<std::int64_t>(std::llround(v * 1e6));
        return Rational(scaled, 1'000'000);
      };
      gp.size_lo = exact(size_lo);
      gp.size_hi = exact(size_hi);
      gp.equality = !one_sided;
      const Instance inst = generate_instance(gp, shared.seed);
      const std::string text = emit_instance(inst);
      emit(shared, Json{{"seed", shared.seed}, {"instance", to_json(inst)}, {"text", text}}, text);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "csplab: " << shared.input << ": " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "csplab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "csplab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "csplab: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

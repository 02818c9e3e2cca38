#include "helpers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace csplab;
using namespace csplab::testing;

namespace {

ParseErrorKind parse_error_kind(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseErrorKind::Invalid;
}

const CorpusEntry& entry(const std::vector<CorpusEntry>& c, const std::string& id) {
  for (const CorpusEntry& e : c)
    if (e.id == id) return e;
  throw std::out_of_range(id);
}

}  // namespace

TEST(Parse, GapInstance) {
  const Instance inst = parse_instance("master 132\norder 44 2 2\norder 33 3 3\norder 12 6 6\n");
  EXPECT_EQ(inst, eq(132, {{44, 2}, {33, 3}, {12, 6}}));
}

TEST(Parse, UnboundedAndSorting) {
  const ParsedInstance p = parse_instance_labeled("# comment\n\nmaster 1000\norder 300 15 15\norder 340 15 *   \n");
  EXPECT_EQ(p.instance.order(0).size, 340);
  EXPECT_FALSE(p.instance.order(0).max_qty.bounded());
  EXPECT_EQ(p.instance.order(1).max_qty, MaxQty(15));
  EXPECT_EQ(p.labels, (std::vector<std::size_t>{2, 1}));
}

TEST(Parse, DistinctErrorsWithLines) {
  std::size_t line = 0;
  EXPECT_EQ(parse_error_kind("master 100\norder 100 1 1\norder 100 1 1\n", &line), ParseErrorKind::DuplicateSize);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(parse_error_kind("master 100\norder 101 1 1\n", &line), ParseErrorKind::SizeExceedsMaster);
  EXPECT_EQ(line, 2u);
  EXPECT_EQ(parse_error_kind("master 100\norder 10 5 4\n", &line), ParseErrorKind::MinExceedsMax);
  EXPECT_EQ(parse_error_kind("master 100\norder 10 x 4\n", &line), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_error_kind("master 100\nitem 10 1 4\n", &line), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_error_kind("master 100\norder 10 1\n", &line), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_error_kind("order 10 1 1\n", &line), ParseErrorKind::MissingMaster);
  EXPECT_EQ(line, 1u);
  EXPECT_EQ(parse_error_kind("# nothing\n", &line), ParseErrorKind::MissingMaster);
  EXPECT_EQ(parse_error_kind("master 0\n", &line), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_error_kind("master 10\norder -3 1 1\n", &line), ParseErrorKind::Malformed);
}

TEST(Emit, RoundTripCorpusAndGenerated) {
  for (const CorpusEntry& e : builtin_corpus()) EXPECT_EQ(parse_instance(emit_instance(e.instance)), e.instance) << e.id;
  GenParams one;
  one.equality = false;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance a = generate_instance(GenParams{}, seed);
    EXPECT_EQ(parse_instance(emit_instance(a)), a);
    const Instance b = generate_instance(one, seed);
    EXPECT_EQ(parse_instance(emit_instance(b)), b);
  }
}

TEST(Emit, Format) {
  EXPECT_EQ(emit_instance(Instance(1000, {{340, 15, MaxQty::unbounded()}, {300, 15, MaxQty(15)}})),
            "master 1000\norder 340 15 *\norder 300 15 15\n");
}

TEST(Generator, DeterministicAndInRange) {
  GenParams p;
  p.order_count = 10;
  p.master_width = 5000;
  const Instance a = generate_instance(p, 42);
  EXPECT_EQ(a, generate_instance(p, 42));
  EXPECT_EQ(a.order_count(), 10u);
  EXPECT_TRUE(a.equality_constrained());
  for (std::size_t j = 0; j < a.order_count(); ++j) {
    EXPECT_GE(a.order(j).size, 400);
    EXPECT_LE(a.order(j).size, 1750);
    EXPECT_GE(a.order(j).min_qty, 10);
    EXPECT_LE(a.order(j).min_qty, 60);
    if (j > 0) {
      EXPECT_LT(a.order(j).size, a.order(j - 1).size);
    }
  }
}

TEST(Generator, SeedsDiffer) {
  int differing = 0;
  for (std::uint64_t s = 0; s < 100; ++s)
    if (generate_instance(GenParams{}, 2 * s) != generate_instance(GenParams{}, 2 * s + 1)) ++differing;
  EXPECT_EQ(differing, 100);
}

TEST(Generator, RejectsNarrowRangeAndBadParams) {
  GenParams p;
  p.order_count = 5;
  p.master_width = 10;
  p.size_lo = Rational(1, 2);
  p.size_hi = Rational(6, 10);
  EXPECT_THROW(generate_instance(p, 1), std::invalid_argument);
  GenParams q;
  q.demand_lo = 0;
  EXPECT_THROW(generate_instance(q, 1), std::invalid_argument);
  GenParams r;
  r.size_hi = Rational(3, 2);
  EXPECT_THROW(generate_instance(r, 1), std::invalid_argument);
}

TEST(Corpus, RequiredEntries) {
  const auto c = builtin_corpus();
  std::set<std::string> ids;
  for (const CorpusEntry& e : c) ids.insert(e.id);
  for (const char* id : {"gap132", "twosided2", "onesided2", "split1", "split275", "mplus1", "nine11", "onepat5"})
    EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_EQ(entry(c, "nine11").cost_class, CostClass::Long);
  const auto& gap = entry(c, "gap132").expectations;
  EXPECT_TRUE(std::any_of(gap.begin(), gap.end(),
                          [](const Expectation& e) { return e.check == "gap.z_lp" && e.expected == "259/132"; }));
  const auto& one = entry(c, "onepat5").expectations;
  EXPECT_TRUE(std::any_of(one.begin(), one.end(),
                          [](const Expectation& e) { return e.check == "patmin.k" && e.expected == "1"; }));
}

TEST(Verify, CorruptedExpectationFails) {
  auto c = builtin_corpus();
  std::vector<CorpusEntry> one{entry(c, "twosided2")};
  VerifyReport ok = verify_entries(one, {});
  EXPECT_TRUE(ok.all_passed());
  one[0].expectations[0].expected = "381";
  VerifyReport bad = verify_entries(one, {});
  EXPECT_TRUE(bad.any_failed());
  EXPECT_EQ(bad.rows[0].status, CheckStatus::Fail);
  EXPECT_EQ(bad.rows[0].actual, "380");
}

TEST(Verify, EmptyBudgetTimesOutLongEntriesOnly) {
  VerifyOptions opts;
  opts.selection = Selection::All;
  opts.long_budget_seconds = 0;
  const VerifyReport r = verify_corpus(opts);
  for (const VerifyRow& row : r.rows) {
    if (row.entry == "nine11")
      EXPECT_EQ(row.status, CheckStatus::Timeout);
    else
      EXPECT_NE(row.status, CheckStatus::Timeout) << row.entry << " " << row.check;
  }
}

TEST(Verify, FastSelectionOutcome) {
  const VerifyReport r = verify_corpus();
  for (const VerifyRow& row : r.rows) {
    EXPECT_NE(row.entry, "nine11");
    // onepat5's single-pattern claims do not survive: a zero-waste cut exists
    if (row.entry == "onepat5" && row.check != "patmin.lower_bound")
      EXPECT_EQ(row.status, CheckStatus::Fail) << row.check;
    else
      EXPECT_EQ(row.status, CheckStatus::Pass) << row.entry << " " << row.check << " " << row.actual;
  }
}

TEST(Verify, WorkerCountDoesNotChangeReport) {
  VerifyOptions one, three;
  three.workers = 3;
  const Json a = to_json(verify_corpus(one));
  const Json b = to_json(verify_corpus(three));
  EXPECT_EQ(a.dump(), b.dump());
}

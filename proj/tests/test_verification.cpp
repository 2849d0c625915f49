#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "pack2dom/verification.hpp"

using namespace pack2dom;

namespace {

SurveyResult survey_builtin(int n, int workers = 1, const std::string& checkpoint = {}) {
  GraphStream s = enumerate_connected(n);
  SurveyOptions o;
  o.workers = workers;
  o.checkpoint = checkpoint;
  o.batch = 64;
  return run_survey(s, o);
}

std::string dump(const std::vector<GraphReport>& reports) {
  std::ostringstream os;
  write_reports(os, reports);
  return os.str();
}

}  // namespace

TEST(Verification, ClaimIds) {
  EXPECT_EQ(kClaimIds.size(), 10u);
  EXPECT_STREQ(claim_id(Claim::thm_main), "thm-main");
  EXPECT_STREQ(claim_id(Claim::prop_nu2_4), "prop-nu2-4");
  EXPECT_EQ(verdict_from_string("fail"), Verdict::fail);
  EXPECT_THROW(verdict_from_string("maybe"), std::invalid_argument);
}

TEST(Verification, InvariantsOfSmallGraphs) {
  EXPECT_EQ(compute_invariants(named::complete(4)), (Invariants{1, 3, 1, 4}));
  EXPECT_EQ(compute_invariants(named::star(5)), (Invariants{1, 1, 5, 2}));
  EXPECT_EQ(compute_invariants(named::path(5)), (Invariants{2, 2, 3, 4}));
}

TEST(Verification, InequalityApplicability) {
  // K2: gamma = beta = nu2 = 1, so only the unconditional bounds apply.
  const Graph k2 = named::complete(2);
  const InequalityFlags f = check_inequalities(k2, compute_invariants(k2));
  EXPECT_EQ(f.eq1, Verdict::pass);
  EXPECT_EQ(f.eq2lo, Verdict::pass);
  EXPECT_EQ(f.eq2hi, Verdict::na);
  EXPECT_EQ(f.eq3, Verdict::na);
  const Graph isolated = Graph::from_edges(3, {{0, 1}});
  const InequalityFlags g = check_inequalities(isolated, compute_invariants(isolated));
  EXPECT_EQ(g.eq1, Verdict::na);
  EXPECT_EQ(g.eq2lo, Verdict::na);
}

TEST(Verification, TheoremOnSmallestMember) {
  const Graph t = generate_family(1, 1).graph;
  const Invariants inv = compute_invariants(t);
  EXPECT_EQ(inv.gamma, 4);
  EXPECT_EQ(inv.nu2, 5);
  EXPECT_TRUE(in_theorem_scope(t, inv));
  EXPECT_EQ(check_theorem_equality(t, inv), Verdict::pass);
  EXPECT_EQ(check_lemma_connected_packing(t, inv), Verdict::pass);
  EXPECT_EQ(check_lemma_forest(t, inv), Verdict::pass);
}

TEST(Verification, TheoremFailsOnInconsistentInvariants) {
  // Feeding wrong invariants must flip the verdict: the check is not vacuous.
  const Graph t = generate_family(1, 1).graph;
  Invariants wrong = compute_invariants(t);
  wrong.gamma = 3;
  EXPECT_EQ(check_theorem_equality(t, wrong), Verdict::fail);
}

TEST(Verification, LemmaScope) {
  const Graph k4 = named::complete(4);
  EXPECT_EQ(check_lemma_connected_packing(k4, compute_invariants(k4)), Verdict::na);
  const Graph star = named::star(4);
  // gamma = nu2 - 1 = 1 and every maximum packing is a 2-edge path.
  EXPECT_EQ(check_lemma_forest(star, compute_invariants(star)), Verdict::pass);
}

TEST(Verification, SmallNu2Flags) {
  const Graph star = named::star(4);
  const SmallNu2Flags f = check_small_nu2(star, compute_invariants(star));
  EXPECT_EQ(f.nu2_2, Verdict::pass);
  EXPECT_EQ(f.nu2_3, Verdict::na);
  const Graph path = named::path(4);  // |E| = nu2, out of scope
  EXPECT_EQ(check_small_nu2(path, compute_invariants(path)).nu2_2, Verdict::na);
}

TEST(Verification, ReportJsonRoundTrip) {
  const Graph t = generate_family(1, 1).graph;
  const GraphReport r = evaluate_graph(t, canonical_form(t));
  const Json j = to_json(r);
  EXPECT_EQ(j["family"]["s"], 1);
  EXPECT_EQ(j["flags"]["thm-main"], "pass");
  EXPECT_FALSE(j.contains("connected"));
  EXPECT_EQ(report_from_json(Json::parse(j.dump())), r);
}

TEST(Verification, BoundExceededBecomesNote) {
  SolverBounds tight;
  tight.exact_vertices = 4;
  const GraphReport r = evaluate_graph(named::path(6), "x", tight);
  EXPECT_FALSE(r.invariants.has_value());
  EXPECT_FALSE(r.note.empty());
  for (Verdict v : r.flags) EXPECT_EQ(v, Verdict::na);
  const Json j = to_json(r);
  EXPECT_TRUE(j["gamma"].is_null());
  EXPECT_EQ(report_from_json(j), r);
}

TEST(Survey, EmptyStream) {
  std::istringstream in("");
  GraphStream s = ingest_graph6(in, true, "empty");
  const SurveyResult r = run_survey(s);
  EXPECT_TRUE(r.reports.empty());
  EXPECT_EQ(r.summary.graphs, 0u);
  EXPECT_TRUE(r.summary.ok());
  EXPECT_EQ(to_json(r.summary)["corpus"], "empty");
}

TEST(Survey, SmallOrdersHaveNoCounterexamples) {
  for (int n = 1; n <= 6; ++n) {
    const SurveyResult r = survey_builtin(n);
    EXPECT_TRUE(r.summary.ok()) << n;
    std::size_t applicable = 0;
    for (const ClaimTotals& t : r.summary.totals) {
      EXPECT_EQ(t.pass + t.fail + t.na, r.summary.graphs);
      applicable += t.pass;
    }
    if (n >= 3) {
      EXPECT_GT(applicable, 0u);
    }
  }
}

TEST(Survey, ReportsMatchOracleInvariants) {
  const SurveyResult r = survey_builtin(6);
  for (const GraphReport& rep : r.reports) {
    const Graph g = parse_graph6(rep.g6);
    ASSERT_TRUE(rep.invariants);
    EXPECT_EQ(rep.invariants->gamma, oracle::gamma(g));
    EXPECT_EQ(rep.invariants->beta, oracle::beta(g));
    EXPECT_EQ(rep.invariants->nu2, oracle::nu2(g));
  }
}

TEST(Survey, WorkerCountDoesNotChangeOutput) {
  const SurveyResult one = survey_builtin(6, 1);
  const SurveyResult four = survey_builtin(6, 4);
  EXPECT_EQ(dump(one.reports), dump(four.reports));
  EXPECT_EQ(to_json(one.summary).dump(), to_json(four.summary).dump());
}

TEST(Survey, DuplicateGraphsInCorpusAreKept) {
  std::istringstream in("C~\nC~\n");
  GraphStream s = ingest_graph6(in, true, "dups");
  EXPECT_EQ(run_survey(s).summary.graphs, 2u);
}

TEST(Survey, CheckpointResume) {
  const auto path = std::filesystem::temp_directory_path() / "pack2dom_checkpoint_test.jsonl";
  std::filesystem::remove(path);
  const SurveyResult fresh = survey_builtin(6);

  // Simulate an interrupted run: keep only some finished reports plus a
  // torn line.
  {
    std::ofstream out(path);
    for (std::size_t i = 0; i < 40; ++i) out << to_json(fresh.reports[i]).dump() << '\n';
    out << "{\"g6\":\"E";
  }
  const SurveyResult resumed = survey_builtin(6, 2, path.string());
  EXPECT_EQ(dump(resumed.reports), dump(fresh.reports));
  EXPECT_EQ(to_json(resumed.summary).dump(), to_json(fresh.summary).dump());

  // The checkpoint now holds every report; a third run computes nothing new.
  std::ifstream in(path);
  std::size_t complete = 0;
  std::string line;
  while (std::getline(in, line)) {
    try {
      report_from_json(Json::parse(line));
      ++complete;
    } catch (const std::exception&) {
    }
  }
  EXPECT_EQ(complete, fresh.reports.size());
  std::filesystem::remove(path);
}

TEST(Survey, AccumulatorRecordsFailures) {
  GraphReport r;
  r.g6 = "X";
  r.flags.fill(Verdict::na);
  r.flags[static_cast<std::size_t>(Claim::eq3)] = Verdict::fail;
  SurveyAccumulator acc("manual");
  acc.add(r);
  const SurveyReport s = acc.finish();
  EXPECT_FALSE(s.ok());
  ASSERT_EQ(s.counterexamples.size(), 1u);
  EXPECT_EQ(s.counterexamples[0].claim, "eq3");
  EXPECT_EQ(s.totals_for(Claim::eq3).fail, 1u);
  EXPECT_EQ(s.solver_na, 1u);
}

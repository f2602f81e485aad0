#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "groundeq/gen_procedure.hpp"
#include "groundeq/gtrs.hpp"
#include "groundeq/vp_procedure.hpp"
#include "support.hpp"

using namespace groundeq;
using groundeq::testing::T;

namespace {

class XorParity : public ::testing::Test {
 protected:
  Problem problem = groundeq::testing::load(groundeq::testing::kXorParity);
  TermStore& s = *problem.store;
  GroundEquation eq(std::string_view l, std::string_view r) { return {T(s, l), T(s, r)}; }
  Gtes w1() { return seed_gen(s, problem.tes, problem.p, problem.q).w; }
};

std::vector<std::string> render(const TermStore& s, const std::vector<TermId>& ts,
                                const StateLabeler& label = {}) {
  std::vector<std::string> out;
  for (TermId t : ts) out.push_back(to_string(s, t, label));
  return out;
}

}  // namespace

TEST_F(XorParity, SeedContainsListedRulesAndRightSideMatches) {
  Gtes w = w1();
  for (auto e : {eq("f(0,0)", "0"), eq("f(1,1)", "0"), eq("f(0,1)", "1"), eq("f(1,0)", "1")})
    EXPECT_TRUE(w.contains(e));
  EXPECT_TRUE(w.contains(eq("f(0,f(0,1))", "f(0,1)")));
  EXPECT_TRUE(w.contains(eq("f(f(0,1),0)", "f(0,1)")));
  EXPECT_EQ(w.size(), 6u);
}

TEST_F(XorParity, NormalFormLayersAndRepresentatives) {
  const TermId targets[] = {problem.p, problem.q};
  CctaResult c = build_ccta(s, w1(), targets);
  NormSets norm = norm_sets(s, c.automaton, 1, 1000);
  ASSERT_EQ(norm.layers.size(), 2u);
  EXPECT_EQ(render(s, norm.layers[0], c.automaton.labeler(s)),
            (std::vector<std::string>{"[0]", "[1]"}));
  EXPECT_EQ(norm.layers[1], norm.layers[0]);
  auto reps = rep_set(s, norm, trees_of_states(s, c.automaton));
  EXPECT_EQ(render(s, reps), (std::vector<std::string>{"0", "1"}));
}

TEST_F(XorParity, SeedIsAlreadyClosed) {
  Gtes w = w1();
  EXPECT_EQ(step_gen(s, problem.tes, w, problem.p, problem.q, SystemKind::W, 1), w);
}

TEST_F(XorParity, RunAnswersNoAtStepTwo) {
  RunResult r = run_gen(s, problem.tes, problem.p, problem.q);
  EXPECT_EQ(r.verdict, Verdict::no(2));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_TRUE(r.steps[0].systems[0].totally_defined);
  EXPECT_EQ(r.steps[0].systems[0].ccta.automaton.state_count(), 2u);
}

TEST_F(XorParity, IdenticalTermsAnswerYes) {
  EXPECT_EQ(run_gen(s, problem.tes, problem.q, problem.q).verdict, Verdict::yes(1));
}

TEST_F(XorParity, TinyBudgetExhausts) {
  ProcedureOptions opts;
  opts.budget = 1;
  RunResult r = run_gen(s, problem.tes, problem.p, problem.q, opts);
  EXPECT_EQ(r.verdict, Verdict::exhausted(2));
  EXPECT_FALSE(r.note.empty());
}

TEST(NormSetsTest, NoRulesKeepsConstants) {
  Signature sig;
  sig.add("c", 0);
  TermStore s(sig);
  TreeAutomaton a({}, {});
  NormSets norm = norm_sets(s, a, 2, 100);
  ASSERT_EQ(norm.layers.size(), 3u);
  for (const auto& layer : norm.layers) EXPECT_EQ(layer, std::vector<TermId>{T(s, "c")});
  EXPECT_EQ(rep_set(s, norm, {}), std::vector<TermId>{T(s, "c")});
}

TEST(NormSetsTest, PartialAutomatonLeavesMixedTerms) {
  Problem pr = groundeq::testing::load(groundeq::testing::kUnaryCollapse);
  TermStore& s = *pr.store;
  Seeds seeds = seed_all(s, pr.tes, pr.p, pr.q, MatchSides::LhsOnly);
  const TermId targets[] = {pr.p, pr.q};
  CctaResult c = build_ccta(s, seeds.w, targets);
  NormSets norm = norm_sets(s, c.automaton, 2, 10000);
  const auto& top = norm.top();
  EXPECT_TRUE(std::any_of(top.begin(), top.end(), [&](TermId t) {
    return s.kind(t) == NodeKind::App && s.has_state(t);
  }));
  for (std::size_t j = 1; j < norm.layers.size(); ++j)
    for (TermId t : norm.layers[j - 1])
      EXPECT_NE(std::find(norm.layers[j].begin(), norm.layers[j].end(), t), norm.layers[j].end());

  NormSets one = norm_sets(s, c.automaton, 1, 10000);
  auto reps = rep_set(s, one, trees_of_states(s, c.automaton));
  EXPECT_NE(std::find(reps.begin(), reps.end(), T(s, "$")), reps.end());
  EXPECT_NE(std::find(reps.begin(), reps.end(), T(s, "h($)")), reps.end());
  for (TermId t : reps) EXPECT_TRUE(s.is_pure(t));
}

TEST(GenProcedureTest, GroundEquationSeedsItself) {
  Problem pr = groundeq::testing::load("sig a/0 g/1\neq g(a) = g(g(a))\npair g(a) g(g(a))\n");
  Seeds seeds = seed_gen(*pr.store, pr.tes, pr.p, pr.q);
  EXPECT_EQ(seeds.w, (Gtes{{pr.p, pr.q}}));
  EXPECT_EQ(run_gen(*pr.store, pr.tes, pr.p, pr.q).verdict, Verdict::yes(1));
}

TEST(GenProcedureTest, CoincidesWithVpStepOnPreservingSystems) {
  Problem pr = groundeq::testing::load(groundeq::testing::kUnaryCollapse);
  TermStore& s = *pr.store;
  Seeds seeds = seed_all(s, pr.tes, pr.p, pr.q, MatchSides::Both);
  for (const auto& [cur, kind] : {std::pair{seeds.w, SystemKind::W}, std::pair{seeds.p, SystemKind::P},
                                  std::pair{seeds.q, SystemKind::Q}})
    EXPECT_EQ(step_gen(s, pr.tes, cur, pr.p, pr.q, kind, 1),
              step_vp(s, pr.tes, cur, pr.p, pr.q, kind));
  RunResult r = run_gen(s, pr.tes, pr.p, pr.q);
  EXPECT_EQ(r.verdict.kind, Verdict::Kind::Yes);
  EXPECT_LE(r.verdict.step, 2u);
}

class GenProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(GenProperties, RunInvariants) {
  std::mt19937 rng(GetParam());
  for (int round = 0; round < 8; ++round) {
    TermStore s(groundeq::testing::random_signature(rng, 3, 2));
    Tes tes = groundeq::testing::random_tes(s, rng, 3, 2, 2, false);
    TermId p = groundeq::testing::random_ground_term(s, rng, 3);
    TermId q = groundeq::testing::random_ground_term(s, rng, 3);
    ProcedureOptions opts;
    opts.max_steps = 4;
    opts.budget = 20000;
    RunResult r = run_gen(s, tes, p, q, opts);

    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const StepRecord& step = r.steps[i];
      for (const SystemRecord& sys : step.systems) {
        for (const GroundEquation& e : sys.equations)
          EXPECT_TRUE(groundeq::testing::is_instance(s, tes, e));
        if (!sys.norm) continue;
        const auto& layers = sys.norm->layers;
        for (unsigned j = 0; j < layers.size() && j <= 2; ++j)
          for (TermId t : ground_terms_up_to(s, j, 100000))
            EXPECT_NE(std::find(layers[j].begin(), layers[j].end(),
                                nf_mixed(s, sys.ccta.automaton, t)),
                      layers[j].end());
      }
      for (int k = 1; k < 3; ++k)
        for (const GroundEquation& e : step.systems[k].equations)
          EXPECT_TRUE(gtes_equiv(s, step.systems[0].equations, e.lhs, e.rhs));
      if (i > 0) {
        for (int k = 0; k < 3; ++k)
          EXPECT_TRUE(r.steps[i - 1].systems[k].equations.subset_of(step.systems[k].equations));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GenProperties, ::testing::Range(1u, 11u));

#include <gtest/gtest.h>

#include "greedy/drift.hpp"
#include "greedy/drift_suite.hpp"
#include "greedy/errors.hpp"
#include "greedy/generators.hpp"

namespace {

using greedy::analysis::exact_drift_dv;
using greedy::analysis::exact_drift_q;
using greedy::analysis::Rational;

greedy::Hypergraph steiner(std::uint32_t n, std::uint32_t ell = 2, std::uint32_t k = 3) {
  return greedy::build_steiner(greedy::steiner_params(n, ell, k));
}

TEST(DriftQ, SingleEdge) {
  const auto h = greedy::build_hypergraph(3, 3, {{0, 1, 2}});
  greedy::ProcessState s(h, 0);
  const auto rep = exact_drift_q(s, h, 1);
  EXPECT_EQ(rep.exact, Rational(-1));
  EXPECT_EQ(rep.main_term, Rational(-3));
  EXPECT_EQ(rep.gap, Rational(2));
  EXPECT_EQ(rep.bound, Rational(3));
  EXPECT_TRUE(rep.within_bound);
}

TEST(DriftQ, DisjointEdgesMeetBound) {
  const auto h = greedy::build_hypergraph(4, 2, {{0, 1}, {2, 3}});
  greedy::ProcessState s(h, 0);
  const auto rep = exact_drift_q(s, h, 1);
  EXPECT_EQ(rep.exact, Rational(-1));
  EXPECT_EQ(rep.main_term, Rational(-2));
  EXPECT_EQ(rep.gap, rep.bound);
  EXPECT_TRUE(rep.within_bound);
}

TEST(DriftQ, TrianglesOfKFive) {
  const auto h = steiner(5);
  greedy::ProcessState s(h, 0);
  const auto rep = exact_drift_q(s, h, 1);
  EXPECT_EQ(rep.exact, Rational(-7));
  EXPECT_EQ(rep.main_term, Rational(-9));
  EXPECT_EQ(rep.gap, Rational(2));
  EXPECT_TRUE(rep.within_bound);
}

TEST(DriftQ, EmptyPoolIsAnError) {
  const auto h = greedy::build_hypergraph(3, 3, {{0, 1, 2}});
  greedy::ProcessState s(h, 0);
  greedy::greedy_step(s, h);
  EXPECT_THROW(exact_drift_q(s, h, 1), greedy::StateError);
}

TEST(DriftQ, FaultShowsUp) {
  const auto h = greedy::build_hypergraph(4, 2, {{0, 1}, {2, 3}});
  greedy::ProcessState s(h, 0);
  EXPECT_FALSE(exact_drift_q(s, h, 1, {.kill_bias = -1}).within_bound);
  const auto star = greedy::build_hypergraph(4, 2, {{0, 1}, {0, 2}, {0, 3}});
  greedy::ProcessState t(star, 0);
  EXPECT_FALSE(exact_drift_dv(t, star, 0, 1, {.kill_bias = -1}).within_bound);
}

TEST(DriftDv, SingleEdge) {
  const auto h = greedy::build_hypergraph(3, 3, {{0, 1, 2}});
  greedy::ProcessState s(h, 0);
  const auto rep = exact_drift_dv(s, h, 1, 1);
  EXPECT_EQ(rep.exact, Rational(-1));
  EXPECT_EQ(rep.main_term, Rational(-2));
  EXPECT_EQ(rep.lower_order, Rational(1));
  EXPECT_EQ(rep.gap, Rational(2));
  EXPECT_EQ(rep.bound, Rational(3));
  EXPECT_TRUE(rep.within_bound);
}

TEST(DriftDv, TrianglesOfKFive) {
  const auto h = steiner(5);
  greedy::ProcessState s(h, 0);
  for (greedy::VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto rep = exact_drift_dv(s, h, v, 1);
    EXPECT_EQ(rep.exact, Rational(-21, 10));
    EXPECT_EQ(rep.main_term, Rational(-18, 10));
    EXPECT_EQ(rep.gap, Rational(3, 5));
    EXPECT_EQ(rep.bound, Rational(9, 10));
    EXPECT_TRUE(rep.within_bound);
  }
}

TEST(DriftDv, StarCentreMeetsBound) {
  const auto h = greedy::build_hypergraph(4, 2, {{0, 1}, {0, 2}, {0, 3}});
  greedy::ProcessState s(h, 0);
  const auto rep = exact_drift_dv(s, h, 0, 1);
  EXPECT_EQ(rep.exact, Rational(-3));
  EXPECT_EQ(rep.gap, Rational(1));
  EXPECT_EQ(rep.bound, Rational(1));
  EXPECT_TRUE(rep.within_bound);
}

TEST(DriftDv, SaturatedVertexIsAnError) {
  const auto h = greedy::build_hypergraph(4, 2, {{0, 1}, {2, 3}});
  greedy::ProcessState s(h, 0);
  greedy::apply_choice(s, h, 0);
  EXPECT_THROW(exact_drift_dv(s, h, 0, 1), greedy::StateError);
  EXPECT_NO_THROW(exact_drift_dv(s, h, 2, 1));
}

// Independent oracle: apply every live choice to a copy of the state and
// average the observed changes.
TEST(Drift, AgreesWithSimulatedChoices) {
  greedy::Rng rng = greedy::make_rng(12);
  for (int inst = 0; inst < 8; ++inst) {
    const std::uint32_t r = 2 + inst % 3;
    const auto h = greedy::random_near_regular(15 + inst, r, 4, rng).hypergraph;
    const std::uint64_t L = greedy::max_codegree(h);
    greedy::ProcessState s(h, inst);
    while (s.q() > 0) {
      const auto q = static_cast<std::int64_t>(s.q());
      std::int64_t q_change = 0;
      std::vector<std::int64_t> d_change(h.vertex_count(), 0);
      for (greedy::EdgeId e : s.pool().live()) {
        greedy::ProcessState copy = s;
        greedy::apply_choice(copy, h, e);
        q_change += static_cast<std::int64_t>(copy.q()) - q;
        for (greedy::VertexId v = 0; v < h.vertex_count(); ++v) {
          d_change[v] += static_cast<std::int64_t>(copy.degree(v)) - s.degree(v);
        }
      }
      const auto rq = exact_drift_q(s, h, L);
      EXPECT_EQ(rq.exact, Rational(q_change, q));
      EXPECT_TRUE(rq.within_bound);
      for (greedy::VertexId v = 0; v < h.vertex_count(); ++v) {
        if (s.is_saturated(v)) continue;
        const auto rd = exact_drift_dv(s, h, v, L);
        EXPECT_EQ(rd.exact, Rational(d_change[v], q));
        EXPECT_TRUE(rd.within_bound);
      }
      greedy::greedy_step(s, h);
    }
  }
}

TEST(DriftSuite, SmallRunIsClean) {
  greedy::analysis::DriftSuiteConfig cfg;
  cfg.random_instances = 5;
  cfg.states_per_instance = 5;
  cfg.lemma_trials = 50;
  const auto rep = greedy::analysis::run_drift_suite(cfg);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_FALSE(rep.counterexample.has_value());
  EXPECT_EQ(rep.instances, greedy::analysis::drift_corpus().size() + 5);
  EXPECT_GE(rep.states, rep.instances * 5);
  EXPECT_GT(rep.dv_checks, rep.q_checks);
}

TEST(DriftSuite, InjectedFaultIsReported) {
  greedy::analysis::DriftSuiteConfig cfg;
  cfg.random_instances = 2;
  cfg.states_per_instance = 2;
  cfg.lemma_trials = 10;
  cfg.fault.kill_bias = -1;
  const auto rep = greedy::analysis::run_drift_suite(cfg);
  EXPECT_GT(rep.violations, 0u);
  ASSERT_TRUE(rep.counterexample.has_value());
  EXPECT_TRUE(rep.counterexample->contains("instance"));
}

TEST(DriftSuite, EnumerationCap) {
  greedy::analysis::DriftSuiteConfig cfg;
  cfg.max_edges = 2'000'000;
  EXPECT_THROW(greedy::analysis::run_drift_suite(cfg), greedy::ParameterError);
}

}  // namespace

#include <gtest/gtest.h>

#include <set>

#include "greedy/generators.hpp"
#include "greedy/output.hpp"
#include "greedy/trials.hpp"

namespace {

std::string fingerprint(const greedy::RunSummary& s) {
  return std::to_string(s.trial) + ":" + greedy::summary_json(s, false).dump();
}

greedy::RunOptions envelope_options(const greedy::Hypergraph& h) {
  greedy::RunOptions opt;
  opt.envelope = greedy::ParamSet::from_hypergraph(h);
  return opt;
}

TEST(Trials, ParallelMatchesSerial) {
  const auto h = greedy::build_steiner(greedy::steiner_params(14, 2, 3));
  const auto opt = envelope_options(h);
  const auto serial = greedy::run_trials_serial(h, opt, 2024, 24);
  ASSERT_EQ(serial.runs.size(), 24u);
  for (int jobs : {1, 2, 4, 7}) {
    const auto par = greedy::run_trials(h, opt, 2024, 24, jobs);
    ASSERT_EQ(par.runs.size(), serial.runs.size());
    EXPECT_FALSE(par.truncated);
    for (std::size_t t = 0; t < serial.runs.size(); ++t) {
      EXPECT_EQ(fingerprint(par.runs[t]), fingerprint(serial.runs[t])) << "jobs " << jobs;
    }
  }
}

TEST(Trials, TrialIsSingleRunWithDerivedSeed) {
  const auto h = greedy::build_steiner(greedy::steiner_params(10, 2, 3));
  const auto opt = envelope_options(h);
  const auto batch = greedy::run_trials(h, opt, 7, 5);
  for (std::size_t t = 0; t < 5; ++t) {
    auto single = greedy::run_process(h, greedy::derive_seed(7, t), opt).summary;
    single.trial = t;
    EXPECT_EQ(fingerprint(batch.runs[t]), fingerprint(single));
    EXPECT_EQ(batch.runs[t].seed, greedy::derive_seed(7, t));
  }
}

TEST(Trials, StopBeforeStartTruncates) {
  const auto h = greedy::build_steiner(greedy::steiner_params(6, 2, 3));
  const std::atomic<bool> stop{true};
  const auto par = greedy::run_trials(h, {}, 1, 10, 2, &stop);
  EXPECT_TRUE(par.truncated);
  EXPECT_TRUE(par.runs.empty());
  const auto ser = greedy::run_trials_serial(h, {}, 1, 10, &stop);
  EXPECT_TRUE(ser.truncated);
  EXPECT_TRUE(ser.runs.empty());
}

TEST(Trials, DerivedSeedsDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t master : {0ull, 1ull, 2ull}) {
    for (std::uint64_t t = 0; t < 1000; ++t) EXPECT_TRUE(seen.insert(greedy::derive_seed(master, t)).second);
  }
}

}  // namespace

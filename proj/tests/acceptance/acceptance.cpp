// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "commands.hpp"
#include "json.hpp"

#include "greedy/binomial.hpp"
#include "greedy/bounds.hpp"
#include "greedy/drift_suite.hpp"
#include "greedy/edge_pool.hpp"
#include "greedy/generators.hpp"
#include "greedy/process.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = greedy::cli::run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (code != 0) std::fprintf(stderr, "cli exit %d: %s", code, err.str().c_str());
  return code;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// ------------------------------------------------------------------ 1

Outcome drift_suite() {
  greedy::analysis::DriftSuiteConfig cfg;  // 50 random instances, m <= 200, 20 states
  const auto rep = greedy::analysis::run_drift_suite(cfg);
  const bool enough = rep.instances >= 50 && rep.states >= rep.instances * 20;
  return {enough && rep.violations == 0,
          std::to_string(rep.instances) + " instances, " + std::to_string(rep.states) +
              " states, " + std::to_string(rep.q_checks + rep.dv_checks) +
              " sandwich checks, " + std::to_string(rep.violations) + " violations"};
}

// ------------------------------------------------------------------ 2

// Runs the CLI on H_{2,3}(n) with 100 derived seeds into `dir`.
void forced_outcome_artifacts(const fs::path& dir, std::uint32_t n) {
  const auto h = (dir / ("h23_" + std::to_string(n) + ".txt")).string();
  cli({"gen", "--n", std::to_string(n), "--l", "2", "--k", "3", "-o", h});
  cli({"run", "-i", h, "--seed", "1", "--trials", "100", "--no-timing", "--out",
       (dir / ("forced_" + std::to_string(n))).string()});
}

Outcome forced_outcomes(const fs::path& dir) {
  std::size_t good = 0, total = 0;
  for (auto [n, M, x] : {std::tuple{4u, 1u, "1/2"}, std::tuple{5u, 2u, "2/5"}}) {
    forced_outcome_artifacts(dir, n);
    const auto j =
        nlohmann::json::parse(slurp(dir / ("forced_" + std::to_string(n) + ".summary.json")));
    for (const auto& t : j["trials"]) {
      ++total;
      if (t["M"] == M && t["X_exact"] == x) ++good;
    }
  }
  return {total == 200 && good == total,
          std::to_string(good) + "/" + std::to_string(total) + " runs hit the forced M and X"};
}

// ------------------------------------------------------------------ 3

Outcome sampling_uniformity() {
  greedy::EdgePool pool(100);
  greedy::Rng rng = greedy::make_rng(31337);
  auto chi_square = [&](std::size_t draws) {
    std::vector<double> counts(100, 0.0);
    for (std::size_t i = 0; i < draws; ++i) counts[pool.sample(rng)] += 1.0;
    const double expected = static_cast<double>(draws) / static_cast<double>(pool.size());
    double stat = 0.0;
    for (auto e : pool.live()) stat += (counts[e] - expected) * (counts[e] - expected) / expected;
    const boost::math::chi_squared dist(static_cast<double>(pool.size() - 1));
    return std::pair{stat, boost::math::quantile(boost::math::complement(dist, 1e-3))};
  };
  const auto [s1, c1] = chi_square(100000);
  for (int i = 0; i < 50; ++i) pool.remove(pool.sample(rng));
  const auto [s2, c2] = chi_square(100000);
  return {s1 < c1 && s2 < c2, "chi2 " + fmt("%.1f", s1) + " < " + fmt("%.1f", c1) +
                                  "; after 50 deletions " + fmt("%.1f", s2) + " < " +
                                  fmt("%.1f", c2)};
}

// ------------------------------------------------------------------ 4

Outcome product_lemma() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> centre(-1e3, 1e3), radius(0.0, 50.0), unit(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 200);
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = centre(rng), y = centre(rng), d = radius(rng), e = radius(rng);
    std::vector<double> xs, ys;
    for (int i = len(rng); i > 0; --i) {
      xs.push_back(x + d * unit(rng));
      ys.push_back(y + e * unit(rng));
    }
    if (!greedy::analysis::lemma_product_bound_check(xs, ys, x, y, d, e).holds) ++violations;
  }
  return {violations == 0, "1000 instances, " + std::to_string(violations) + " violations"};
}

// ------------------------------------------------------------------ 5

void containment_artifacts(const fs::path& dir) {
  const auto h = (dir / "h23_100.txt").string();
  cli({"gen", "--n", "100", "--l", "2", "--k", "3", "-o", h});
  cli({"run", "-i", h, "--seed", "5", "--trials", "100", "--p-floor", "0.4", "--no-timing",
       "--out", (dir / "containment").string()});
}

Outcome envelope_containment(const fs::path& dir) {
  containment_artifacts(dir);
  const auto j = nlohmann::json::parse(slurp(dir / "containment.summary.json"));
  const double freq = j["aggregate"]["breach_freq"].get<double>();
  const auto trials = j["aggregate"]["trials"].get<std::size_t>();
  return {trials == 100 && freq <= 0.05,
          "breach before p = 0.4 in " + fmt("%.0f", freq * 100) + "% of " +
              std::to_string(trials) + " trials"};
}

// ------------------------------------------------------------------ 6

void scaling_artifacts(const fs::path& dir) {
  cli({"sweep", "--steiner", "--l", "2", "--k", "3", "--n-list", "32,64,128,256", "--trials",
       "200", "--seed", "2024", "--csv", (dir / "sweep.csv").string(), "--fit",
       (dir / "fit.json").string()});
}

Outcome x_scaling(const fs::path& dir) {
  scaling_artifacts(dir);
  const auto fit = nlohmann::json::parse(slurp(dir / "fit.json"));
  std::vector<double> means;
  for (const auto& p : fit["points"]) means.push_back(p[1].get<double>());
  bool decreasing = means.size() == 4;
  for (std::size_t i = 1; i < means.size(); ++i) decreasing = decreasing && means[i] < means[i - 1];
  const double slope = fit["slope"].get<double>();
  std::string listing;
  for (double m : means) listing += (listing.empty() ? "" : ", ") + fmt("%.4f", m);
  return {decreasing && slope <= -0.3,
          "mean X " + listing + "; slope " + fmt("%.3f", slope) + " (needs <= -0.3)"};
}

// ------------------------------------------------------------------ 7

Outcome determinism(const fs::path& first, const fs::path& second) {
  forced_outcome_artifacts(second, 4);
  forced_outcome_artifacts(second, 5);
  containment_artifacts(second);
  scaling_artifacts(second);
  std::size_t compared = 0, differ = 0;
  for (const auto& entry : fs::directory_iterator(first)) {
    const auto other = second / entry.path().filename();
    ++compared;
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      ++differ;
      std::fprintf(stderr, "differs: %s\n", entry.path().filename().c_str());
    }
  }
  return {compared >= 10 && differ == 0,
          std::to_string(compared) + " artifacts compared, " + std::to_string(differ) +
              " differ"};
}

// ------------------------------------------------------------------ 8

Outcome generator_oracles() {
  std::size_t cases = 0, bad = 0;
  for (std::uint32_t n = 2; n <= 9; ++n) {
    for (std::uint32_t k = 2; k <= std::min(n, 5u); ++k) {
      for (std::uint32_t ell = 1; ell < k; ++ell) {
        const auto h = greedy::build_steiner(greedy::steiner_params(n, ell, k));
        std::vector<std::uint64_t> deg(h.vertex_count(), 0);
        std::map<std::pair<greedy::VertexId, greedy::VertexId>, std::uint64_t> codeg;
        for (greedy::EdgeId e = 0; e < h.edge_count(); ++e) {
          const auto vs = h.edge(e);
          for (std::size_t a = 0; a < vs.size(); ++a) {
            ++deg[vs[a]];
            for (std::size_t b = a + 1; b < vs.size(); ++b) ++codeg[{vs[a], vs[b]}];
          }
        }
        const std::uint64_t D = greedy::binomial(n - ell, k - ell);
        std::uint64_t L = 0;
        for (const auto& [pair, c] : codeg) L = std::max(L, c);
        const std::uint64_t expected_L = ell >= 2 ? greedy::binomial(n - ell - 1, k - ell - 1)
                                                  : greedy::binomial(n - 2, k - 2);
        const bool ok = std::all_of(deg.begin(), deg.end(), [&](auto d) { return d == D; }) &&
                        greedy::is_regular(h) == D && L == expected_L &&
                        greedy::max_codegree(h) == L;
        ++cases;
        if (!ok) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(cases) + " (n, l, k) configurations, " +
                        std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  const fs::path root = fs::temp_directory_path() /
                        ("greedy_acceptance_" + std::to_string(std::random_device{}()));
  const fs::path first = root / "first";
  const fs::path second = root / "second";
  fs::create_directories(first);
  fs::create_directories(second);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"drift oracle suite", drift_suite},
      {"forced outcomes on H23(4), H23(5)", [&] { return forced_outcomes(first); }},
      {"edge sampling uniformity", sampling_uniformity},
      {"product lemma", product_lemma},
      {"envelope containment on H23(100)", [&] { return envelope_containment(first); }},
      {"X scaling over n = 32..256", [&] { return x_scaling(first); }},
      {"determinism of artifacts", [&] { return determinism(first, second); }},
      {"generator oracles n <= 9", generator_oracles},
  };

  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s (%s) [%.2fs]\n", index, o.pass ? "PASS" : "FAIL",
                name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  fs::remove_all(root);
  return all ? 0 : 1;
}

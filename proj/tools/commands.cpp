#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <csignal>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "greedy/bounds.hpp"
#include "greedy/drift_suite.hpp"
#include "greedy/edge_list_io.hpp"
#include "greedy/errors.hpp"
#include "greedy/fit.hpp"
#include "greedy/generators.hpp"
#include "greedy/output.hpp"
#include "greedy/process.hpp"
#include "greedy/sweep.hpp"
#include "greedy/trials.hpp"

namespace greedy::cli {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

class UsageError : public Error {
 public:
  using Error::Error;
};

class EnvelopeError : public Error {
 public:
  using Error::Error;
};

std::optional<std::uint64_t> effective_cap(bool allow_large) {
  if (allow_large) return std::nullopt;
  return instance_cap_from_env();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("write failed for " + path);
}

std::vector<std::uint32_t> parse_n_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("malformed --n-list entry '" + item + "'");
    }
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::uint32_t n = 0, l = 0, k = 0;
  std::string output;
  bool params_only = false;
  bool allow_large = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const SteinerParams p = steiner_params(a.n, a.l, a.k, effective_cap(a.allow_large));
  if (a.params_only) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["l"] = p.ell;
    j["k"] = p.k;
    j["N"] = p.N;
    j["m"] = p.m;
    j["r"] = p.r;
    j["D"] = p.D;
    j["L"] = p.L;
    out << j.dump() << '\n';
    return kOk;
  }
  const Hypergraph h = build_steiner(p);
  if (a.output.empty() || a.output == "-") {
    write_edge_list(h, out);
  } else {
    write_edge_list(h, std::filesystem::path(a.output));
  }
  return kOk;
}

// ---------------------------------------------------------------- run

struct RunArgs {
  std::string input;
  std::uint64_t seed = 0;
  std::size_t stride = 1;
  std::string out_prefix;
  std::size_t trials = 1;
  double p_floor = 0.05;
  bool no_envelope = false;
  bool approx_envelope = false;
  bool no_timing = false;
  int jobs = 0;
};

nlohmann::ordered_json aggregate_json(const std::vector<RunSummary>& runs) {
  double sum_x = 0, sum_m = 0, ss = 0;
  std::size_t breaches = 0;
  for (const auto& s : runs) {
    sum_x += s.X;
    sum_m += static_cast<double>(s.M);
    if (s.T_breach) ++breaches;
  }
  const double k = static_cast<double>(runs.size());
  const double mean_x = sum_x / k;
  for (const auto& s : runs) ss += (s.X - mean_x) * (s.X - mean_x);
  nlohmann::ordered_json j;
  j["trials"] = runs.size();
  j["mean_X"] = mean_x;
  j["std_X"] = runs.size() > 1 ? std::sqrt(ss / (k - 1)) : 0.0;
  j["mean_M"] = sum_m / k;
  j["breach_freq"] = static_cast<double>(breaches) / k;
  return j;
}

int cmd_run(const RunArgs& a, std::ostream& out) {
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (a.stride < 1) throw UsageError("--stride must be at least 1");
  if (a.p_floor < 0.0 || a.p_floor >= 1.0) throw UsageError("--p-floor must lie in [0, 1)");

  const Hypergraph h = read_edge_list(std::filesystem::path(a.input));
  RunOptions opt;
  opt.p_floor = a.p_floor;
  opt.stride = a.stride;
  if (!a.no_envelope && h.edge_count() > 0) {
    if (is_regular(h)) {
      opt.envelope = ParamSet::from_hypergraph(h);
    } else if (a.approx_envelope) {
      opt.envelope = ParamSet::approximate(h);
    } else {
      throw EnvelopeError(
          "instance is not regular; pass --no-envelope for a plain run or "
          "--approx-envelope to use the maximum degree as D");
    }
  }

  if (a.trials == 1) {
    const RunResult res = run_process(h, a.seed, opt);
    write_text(a.out_prefix + ".summary.json",
               summary_json(res.summary, !a.no_timing).dump(2) + "\n");
    std::ofstream traj(a.out_prefix + ".traj.csv", std::ios::binary);
    if (!traj) throw UsageError("cannot write " + a.out_prefix + ".traj.csv");
    write_trajectory_csv(traj, res.trajectory, h.vertex_count());
    out << "M=" << res.summary.M << " X=" << format_real(res.summary.X) << '\n';
    return kOk;
  }

  const TrialBatch batch = run_trials(h, opt, a.seed, a.trials, a.jobs);
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  std::ofstream csv(a.out_prefix + ".trials.csv", std::ios::binary);
  if (!csv) throw UsageError("cannot write " + a.out_prefix + ".trials.csv");
  csv << "trial,seed,M,X,T_breach\n";
  for (const auto& s : batch.runs) {
    auto sj = summary_json(s, !a.no_timing);
    arr.push_back(sj);
    csv << s.trial << ',' << s.seed << ',' << s.M << ',' << format_real(s.X) << ','
        << (s.T_breach ? std::to_string(*s.T_breach) : std::string()) << '\n';
  }
  const auto agg = aggregate_json(batch.runs);
  csv << "aggregate,," << format_real(agg["mean_M"].get<double>()) << ','
      << format_real(agg["mean_X"].get<double>()) << ','
      << format_real(agg["breach_freq"].get<double>()) << '\n';
  j["trials"] = arr;
  j["aggregate"] = agg;
  write_text(a.out_prefix + ".summary.json", j.dump(2) + "\n");
  out << "trials=" << batch.runs.size()
      << " mean_X=" << format_real(agg["mean_X"].get<double>()) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  bool steiner = false;
  std::uint32_t l = 2, k = 3;
  std::string n_list;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::string csv;
  std::string fit;
  double p_floor = 0.05;
  int jobs = 0;
  bool self_test = false;
  bool allow_large = false;
};

int sweep_self_test(const SweepArgs& a, std::ostream& out) {
  std::vector<std::pair<double, double>> pts;
  for (double n : {32.0, 64.0, 128.0, 256.0, 512.0}) pts.emplace_back(n, std::pow(n, -0.5));
  const auto fit = analysis::exponent_fit(pts);
  const auto j = analysis::fit_json(fit, pts);
  if (!a.fit.empty()) write_text(a.fit, j.dump(2) + "\n");
  out << j.dump() << '\n';
  const bool ok = std::abs(fit.slope + 0.5) <= 1e-9 && fit.residual <= 1e-9;
  return ok ? kOk : kVerificationFailed;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (a.self_test) return sweep_self_test(a, out);
  if (!a.steiner) throw UsageError("only --steiner sweeps are available");
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  analysis::SteinerSweepConfig cfg;
  cfg.ell = a.l;
  cfg.k = a.k;
  cfg.n_values = parse_n_list(a.n_list);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.p_floor = a.p_floor;
  cfg.jobs = a.jobs;
  cfg.cap = effective_cap(a.allow_large);
  if (!a.fit.empty() && cfg.n_values.size() < 3) {
    throw UsageError("--fit needs at least 3 values in --n-list");
  }
  // Validate every configuration before spending time on trials.
  for (std::uint32_t n : cfg.n_values) steiner_params(n, cfg.ell, cfg.k, cfg.cap);

  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv, std::ios::binary);
    if (!csv) throw UsageError("cannot write " + a.csv);
    analysis::write_sweep_header(csv);
    csv.flush();
  }

  g_interrupted.store(false);
  auto previous = std::signal(SIGINT, on_sigint);
  const auto result = analysis::run_steiner_sweep(cfg, &g_interrupted, [&](const auto& row) {
    if (csv.is_open()) {
      analysis::write_sweep_row(csv, row);
      csv.flush();
    }
    out << "n=" << row.n << " mean_X=" << format_real(row.mean_X)
        << " std_X=" << format_real(row.std_X) << '\n';
  });
  std::signal(SIGINT, previous);

  if (result.truncated) {
    if (csv.is_open()) {
      analysis::write_truncation_marker(csv);
      csv.flush();
    }
    err << "sweep interrupted; partial results written\n";
    return kInterrupted;
  }
  if (result.fit) {
    const auto pts = analysis::fit_points(result.rows);
    const auto j = analysis::fit_json(*result.fit, pts);
    if (!a.fit.empty()) write_text(a.fit, j.dump(2) + "\n");
    out << "slope=" << format_real(result.fit->slope)
        << " intercept=" << format_real(result.fit->intercept)
        << " residual=" << format_real(result.fit->residual) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- drift-check

struct DriftArgs {
  std::size_t instances = 50;
  std::size_t max_m = 200;
  std::size_t states = 20;
  std::uint64_t seed = 0;
  std::size_t lemma_trials = 1000;
  int inject_fault = 0;
};

int cmd_drift_check(const DriftArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_m > analysis::kMaxEnumerationEdges) {
    throw UsageError("--max-m " + std::to_string(a.max_m) + " exceeds the enumeration cap " +
                     std::to_string(analysis::kMaxEnumerationEdges));
  }
  analysis::DriftSuiteConfig cfg;
  cfg.random_instances = a.instances;
  cfg.max_edges = a.max_m;
  cfg.states_per_instance = a.states;
  cfg.seed = a.seed;
  cfg.lemma_trials = a.lemma_trials;
  cfg.fault.kill_bias = -a.inject_fault;
  const auto rep = analysis::run_drift_suite(cfg);
  out << "instances=" << rep.instances << " states=" << rep.states
      << " q_checks=" << rep.q_checks << " dv_checks=" << rep.dv_checks
      << " lemma_checks=" << rep.lemma_checks << " tail_checks=" << rep.tail_checks
      << " violations=" << rep.violations << '\n';
  if (rep.violations > 0) {
    err << "drift check failed; first counterexample:\n";
    out << rep.counterexample->dump(2) << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random greedy hypergraph matching: generators, runs, sweeps and drift checks",
               "greedy_nibble"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write H_{l,k}(n) as an edge list or print its parameters");
  g->add_option("--n", gen.n, "ground-set size")->required();
  g->add_option("--l", gen.l, "size of the vertex subsets")->required();
  g->add_option("--k", gen.k, "size of the edge subsets")->required();
  g->add_option("-o,--output", gen.output, "edge-list file (stdout if omitted)");
  g->add_flag("--params-only", gen.params_only, "print the parameter JSON only");
  g->add_flag("--allow-large", gen.allow_large, "lift the instance-size cap");

  RunArgs run;
  auto* r = app.add_subcommand("run", "Run the process on an edge-list file");
  r->add_option("-i,--input", run.input, "edge-list file")->required();
  r->add_option("--seed", run.seed, "seed (master seed with --trials)");
  r->add_option("--stride", run.stride, "trajectory recording stride");
  r->add_option("--out", run.out_prefix, "output prefix")->required();
  r->add_option("--trials", run.trials, "independent trials");
  r->add_option("--p-floor", run.p_floor, "evaluate envelopes only while p >= this");
  r->add_option("--jobs", run.jobs, "threads for --trials (0 = default)");
  r->add_flag("--no-envelope", run.no_envelope, "skip envelope evaluation");
  r->add_flag("--approx-envelope", run.approx_envelope,
              "on irregular input, use the maximum degree as D");
  r->add_flag("--no-timing", run.no_timing, "write wall_ms as null");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Monte Carlo sweep of X over n with a log-log fit");
  s->add_flag("--steiner", sweep.steiner, "sweep over H_{l,k}(n)");
  s->add_option("--l", sweep.l, "vertex subset size");
  s->add_option("--k", sweep.k, "edge subset size");
  s->add_option("--n-list", sweep.n_list, "comma-separated ground-set sizes");
  s->add_option("--trials", sweep.trials, "trials per n");
  s->add_option("--seed", sweep.seed, "master seed");
  s->add_option("--csv", sweep.csv, "sweep CSV output");
  s->add_option("--fit", sweep.fit, "fit JSON output (needs >= 3 values of n)");
  s->add_option("--p-floor", sweep.p_floor, "envelope p-floor for breach counting");
  s->add_option("--jobs", sweep.jobs, "threads (0 = default)");
  s->add_flag("--self-test", sweep.self_test, "fit a planted n^-1/2 law and check the slope");
  s->add_flag("--allow-large", sweep.allow_large, "lift the instance-size cap");

  DriftArgs drift;
  auto* d = app.add_subcommand("drift-check", "Exact drift, lemma and tail-bound checks");
  d->add_option("--instances", drift.instances, "random instances besides the fixed corpus");
  d->add_option("--max-m", drift.max_m, "edge bound for random instances");
  d->add_option("--states", drift.states, "reachable states per instance");
  d->add_option("--seed", drift.seed, "seed");
  d->add_option("--lemma-trials", drift.lemma_trials, "random product-lemma inputs");
  d->add_option("--inject-fault", drift.inject_fault, "drop this many from every kill count (harness test)")
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (r->parsed()) return cmd_run(run, out);
    if (s->parsed()) return cmd_sweep(sweep, out, err);
    if (d->parsed()) return cmd_drift_check(drift, out, err);
  } catch (const SizeCapError& e) {
    err << e.what() << "; pass --allow-large or set GREEDY_NIBBLE_CAP to override\n";
    return kSizeCap;
  } catch (const EnvelopeError& e) {
    err << e.what() << '\n';
    return kEnvelopeOnIrregular;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace greedy::cli

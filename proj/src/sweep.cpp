#include "greedy/sweep.hpp"

#include <cmath>
#include <ostream>

#include "greedy/bounds.hpp"
#include "greedy/errors.hpp"
#include "greedy/generators.hpp"
#include "greedy/output.hpp"
#include "greedy/trials.hpp"

namespace greedy::analysis {

SweepRow aggregate_trials(std::string label, std::uint64_t n, const ParamSet& params,
                          std::span<const RunSummary> runs,
                          std::optional<double> conj_exponent) {
  if (runs.empty()) throw ParameterError("cannot aggregate zero trials");
  SweepRow row;
  row.label = std::move(label);
  row.n = n;
  row.N = params.N;
  row.D = params.D;
  row.r = params.r;
  row.L = params.L;
  row.trials = runs.size();
  row.thm_x_bound = theorem_bounds(params).x_bound;
  row.conj_exponent = conj_exponent;

  double sum_x = 0.0, sum_m = 0.0;
  std::size_t breaches = 0;
  for (const auto& s : runs) {
    sum_x += s.X;
    sum_m += static_cast<double>(s.M);
    if (s.T_breach) ++breaches;
  }
  const double k = static_cast<double>(runs.size());
  row.mean_X = sum_x / k;
  row.mean_M = sum_m / k;
  row.breach_freq = static_cast<double>(breaches) / k;
  if (runs.size() > 1) {
    double ss = 0.0;
    for (const auto& s : runs) ss += (s.X - row.mean_X) * (s.X - row.mean_X);
    row.std_X = std::sqrt(ss / (k - 1.0));
  }
  return row;
}

SweepResult run_steiner_sweep(const SteinerSweepConfig& cfg, const std::atomic<bool>* stop,
                              const std::function<void(const SweepRow&)>& on_row) {
  std::optional<double> conj;
  if (cfg.ell > 1 && cfg.ell < cfg.k) {
    conj = boost::rational_cast<double>(conjecture_exponent(cfg.ell, cfg.k));
  }
  const std::string label = "steiner_l" + std::to_string(cfg.ell) + "_k" + std::to_string(cfg.k);

  SweepResult result;
  for (std::uint32_t n : cfg.n_values) {
    if (stop && stop->load()) {
      result.truncated = true;
      break;
    }
    const SteinerParams sp = steiner_params(n, cfg.ell, cfg.k, cfg.cap);
    const Hypergraph h = build_steiner(sp);
    RunOptions options;
    options.envelope = ParamSet::make(sp.N, sp.D, static_cast<std::uint32_t>(sp.r), sp.L);
    options.p_floor = cfg.p_floor;
    TrialBatch batch = run_trials(h, options, cfg.seed, cfg.trials, cfg.jobs, stop);
    if (batch.truncated) {
      result.truncated = true;
      break;
    }
    result.rows.push_back(aggregate_trials(label, n, *options.envelope, batch.runs, conj));
    if (on_row) on_row(result.rows.back());
  }
  if (result.rows.size() >= 3) {
    const auto points = fit_points(result.rows);
    result.fit = exponent_fit(points);
  }
  return result;
}

void write_sweep_header(std::ostream& out) {
  out << "label,n,N,D,r,L,trials,mean_X,std_X,mean_M,breach_freq,thm_x_bound,conj_exponent\n";
}

void write_sweep_row(std::ostream& out, const SweepRow& r) {
  out << r.label << ',' << r.n << ',' << r.N << ',' << r.D << ',' << r.r << ',' << r.L << ','
      << r.trials << ',' << format_real(r.mean_X) << ',' << format_real(r.std_X) << ','
      << format_real(r.mean_M) << ',' << format_real(r.breach_freq) << ','
      << format_real(r.thm_x_bound) << ','
      << (r.conj_exponent ? format_real(*r.conj_exponent) : std::string()) << '\n';
}

void write_truncation_marker(std::ostream& out) { out << "TRUNCATED,,,,,,,,,,,,\n"; }

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  write_sweep_header(out);
  for (const auto& row : result.rows) write_sweep_row(out, row);
  if (result.truncated) write_truncation_marker(out);
}

std::vector<std::pair<double, double>> fit_points(std::span<const SweepRow> rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) pts.emplace_back(static_cast<double>(r.n), r.mean_X);
  return pts;
}

nlohmann::ordered_json fit_json(const PowerLawFit& fit,
                                std::span<const std::pair<double, double>> points) {
  nlohmann::ordered_json j;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["residual"] = fit.residual;
  auto arr = nlohmann::ordered_json::array();
  for (auto [n, x] : points) arr.push_back({n, x});
  j["points"] = arr;
  return j;
}

}  // namespace greedy::analysis

#include "greedy/output.hpp"

#include <cstdio>
#include <ostream>

namespace greedy {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryRow> rows,
                          std::uint64_t vertex_count) {
  out << "step,t,p,Q,q_hat,e_q,q_dev,d_max_dev,d_hat,e_d,q_critical,d_critical,breach\n";
  for (const auto& row : rows) {
    const double t = vertex_count ? static_cast<double>(row.step) / static_cast<double>(vertex_count)
                                  : 0.0;
    out << row.step << ',' << format_real(t) << ',' << format_real(row.p) << ',' << row.q;
    if (row.envelope) {
      const auto& e = *row.envelope;
      const auto& v = row.verdict;
      out << ',' << format_real(e.q_hat) << ',' << format_real(e.e_q) << ','
          << format_real(v.q_dev) << ',' << format_real(v.d_max_dev) << ','
          << format_real(e.d_hat) << ',' << format_real(e.e_d) << ',' << int(v.q_critical)
          << ',' << int(v.d_critical) << ',' << int(v.breach());
    } else {
      out << ",,,,,,,,,";
    }
    out << '\n';
  }
}

nlohmann::ordered_json summary_json(const RunSummary& s, bool include_timing) {
  nlohmann::ordered_json j;
  j["M"] = s.M;
  j["X"] = s.X;
  j["X_exact"] = std::to_string(s.x_numerator) + "/" + std::to_string(s.x_denominator);
  j["T_breach"] = s.T_breach ? nlohmann::ordered_json(*s.T_breach) : nullptr;
  j["seed"] = s.seed;
  j["m"] = s.m;
  j["N"] = s.N;
  j["D"] = s.D ? nlohmann::ordered_json(*s.D) : nullptr;
  j["r"] = s.r;
  j["L"] = s.L ? nlohmann::ordered_json(*s.L) : nullptr;
  j["wall_ms"] = include_timing ? nlohmann::ordered_json(s.wall_ms) : nullptr;
  return j;
}

}  // namespace greedy

#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"

#include "greedy/process.hpp"

namespace greedy {

/// Real numbers in CSV output: 9 significant digits.
std::string format_real(double x);

/// Columns: step, t, p, Q, q_hat, e_q, q_dev, d_max_dev, d_hat, e_d,
/// q_critical, d_critical, breach. Envelope columns are empty where the
/// envelope is undefined.
void write_trajectory_csv(std::ostream& out, std::span<const TrajectoryRow> rows,
                          std::uint64_t vertex_count);

/// Keys: M, X, X_exact, T_breach, seed, m, N, D, r, L, wall_ms. With
/// `include_timing` false, wall_ms is null so that output is reproducible.
nlohmann::ordered_json summary_json(const RunSummary& s, bool include_timing = true);

}  // namespace greedy

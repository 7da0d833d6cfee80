#pragma once

#include <span>
#include <utility>

namespace greedy::analysis {

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // Euclidean norm of the log-space residuals
};

/// Ordinary least squares of log(mean X) against log(n). Requires at least
/// three points, all coordinates positive (ParameterError otherwise).
PowerLawFit exponent_fit(std::span<const std::pair<double, double>> points);

}  // namespace greedy::analysis

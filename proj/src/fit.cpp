#include "greedy/fit.hpp"

#include <cmath>
#include <vector>

#include "greedy/errors.hpp"

namespace greedy::analysis {

PowerLawFit exponent_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw ParameterError("exponent fit needs at least 3 points");
  std::vector<double> lx, ly;
  for (auto [n, x] : points) {
    if (!(n > 0.0) || !(x > 0.0)) throw ParameterError("exponent fit needs positive points");
    lx.push_back(std::log(n));
    ly.push_back(std::log(x));
  }
  const double k = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw ParameterError("exponent fit needs at least two distinct n");

  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss);
  return fit;
}

}  // namespace greedy::analysis

#include "greedy/bounds.hpp"

#include <cmath>
#include <string>

#include "greedy/binomial.hpp"

namespace greedy::analysis {

using Kind = HypothesisError::Kind;

ProductBoundCheck lemma_product_bound_check(std::span<const double> xs,
                                            std::span<const double> ys, double x, double y,
                                            double delta, double epsilon) {
  if (xs.size() != ys.size()) throw HypothesisError(Kind::LengthMismatch, "length mismatch");
  if (xs.empty()) throw HypothesisError(Kind::EmptySequence, "index set is empty");
  const double n = static_cast<double>(xs.size());

  // Evaluated on the centred sequences u_i = x_i - x, v_i = y_i - y; the
  // difference is invariant under this shift and the centred form does not
  // cancel catastrophically.
  double su = 0.0, sv = 0.0, suv = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double u = xs[i] - x;
    const double v = ys[i] - y;
    if (std::abs(u) > delta || std::abs(v) > epsilon) {
      throw HypothesisError(Kind::OutsideRadius,
                            "element " + std::to_string(i) + " lies outside its radius");
    }
    su += u;
    sv += v;
    suv += u * v;
  }
  ProductBoundCheck c;
  c.lhs_gap = std::abs(suv - su * sv / n);
  c.bound = 2.0 * n * delta * epsilon;
  c.holds = c.lhs_gap <= c.bound;
  return c;
}

double supermartingale_tail_bound(double a, double theta, double big_theta, std::uint64_t m) {
  if (!(a > 0.0) || !(theta > 0.0) || m == 0) {
    throw HypothesisError(Kind::NonPositive, "a, theta and m must be positive");
  }
  if (!(theta < big_theta / 10.0)) {
    throw HypothesisError(Kind::StepRatio, "requires theta < Theta / 10");
  }
  const double steps = static_cast<double>(m);
  if (!(a < theta * steps)) {
    throw HypothesisError(Kind::DeviationTooLarge, "requires a < theta * m");
  }
  return std::exp(-a * a / (3.0 * theta * big_theta * steps));
}

TheoremBounds theorem_bounds(const ParamSet& p) {
  const double exponent = 1.0 / (2.0 * (p.r - 1.0));
  TheoremBounds b;
  b.x_bound = std::pow(static_cast<double>(p.L) / static_cast<double>(p.D), exponent);
  b.unmatched_bound =
      static_cast<double>(p.N) * b.x_bound * std::pow(p.log_N, 5.0 * exponent);
  return b;
}

boost::rational<std::int64_t> conjecture_exponent(std::uint32_t ell, std::uint32_t k) {
  if (ell <= 1 || ell >= k) throw ParameterError("requires 1 < l < k");
  const auto r = static_cast<std::int64_t>(binomial(k, ell));
  return {static_cast<std::int64_t>(k - ell), r - 1};
}

}  // namespace greedy::analysis

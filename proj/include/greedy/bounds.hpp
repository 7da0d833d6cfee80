#pragma once

#include <cstdint>
#include <span>

#include <boost/rational.hpp>

#include "greedy/envelope.hpp"
#include "greedy/errors.hpp"

namespace greedy::analysis {

/// A hypothesis of one of the bound calculators does not hold.
class HypothesisError : public ParameterError {
 public:
  enum class Kind {
    LengthMismatch,
    EmptySequence,
    OutsideRadius,     // some |x_i - x| > delta or |y_i - y| > epsilon
    NonPositive,       // a, theta or m not positive
    StepRatio,         // theta >= Theta / 10
    DeviationTooLarge, // a >= theta * m
  };
  HypothesisError(Kind kind, const std::string& what) : ParameterError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct ProductBoundCheck {
  double lhs_gap = 0.0;  // |sum x_i y_i - (sum x_i)(sum y_i)/|I||
  double bound = 0.0;    // 2 |I| delta epsilon
  bool holds = false;
};

/// For sequences within delta of x and within epsilon of y, the product sum
/// and the product of sums differ by at most 2|I| delta epsilon.
ProductBoundCheck lemma_product_bound_check(std::span<const double> xs,
                                            std::span<const double> ys, double x, double y,
                                            double delta, double epsilon);

/// exp(-a^2 / (3 theta Theta m)): tail bound for a supermartingale over m
/// steps whose increments lie in [-Theta, theta], theta < Theta/10, a < theta m.
double supermartingale_tail_bound(double a, double theta, double big_theta, std::uint64_t m);

struct TheoremBounds {
  double x_bound = 0.0;          // (L/D)^(1/(2(r-1)))
  double unmatched_bound = 0.0;  // N x_bound (log N)^(5/(2(r-1)))
};

/// Both with implied constants and o(1) terms set to 1 and 0.
TheoremBounds theorem_bounds(const ParamSet& params);

/// (k - l) / (C(k, l) - 1), the conjectured decay exponent of X(H_{l,k}) in n.
/// Requires 1 < l < k.
boost::rational<std::int64_t> conjecture_exponent(std::uint32_t ell, std::uint32_t k);

}  // namespace greedy::analysis

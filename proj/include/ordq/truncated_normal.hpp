#ifndef ORDQ_TRUNCATED_NORMAL_HPP
#define ORDQ_TRUNCATED_NORMAL_HPP

#include <cmath>
#include <limits>

#include "ordq/errors.hpp"
#include "ordq/rng.hpp"
#include "ordq/stats.hpp"

namespace ordq {

namespace detail {

// Switch to the tail scheme once the whole interval sits past 5 sigma;
// beyond that the cdf values collide in double precision.
inline constexpr double kTruncTailCut = 5.0;

// Draw from N(0,1) restricted to (lo, hi) with lo >= kTruncTailCut.
// Writing x = lo + t, the target density is prop. to exp(-lo*t - t^2/2),
// so propose t from Exp(lo) truncated to (0, hi-lo) and thin with
// exp(-t^2/2). Acceptance tends to 1 as lo grows; works for intervals of
// arbitrarily small mass.
inline double truncnorm_upper_tail(double lo, double hi, RngStream& rng) {
  const double width = hi - lo;  // may be +inf
  const double pmax = std::isinf(width) ? 1.0 : -std::expm1(-lo * width);
  for (;;) {
    const double t = -std::log1p(-rng.uniform() * pmax) / lo;
    if (std::log(rng.uniform()) <= -0.5 * t * t) return lo + t;
  }
}

}  // namespace detail

// Draw from N(mean, variance) conditioned on the open interval
// (lower, upper); bounds may be infinite. The result is strictly inside.
inline double sample_truncated_normal(double mean, double variance, double lower,
                                      double upper, RngStream& rng) {
  if (!(variance > 0.0) || !std::isfinite(variance))
    throw DomainError("sample_truncated_normal: variance must be finite and > 0");
  if (std::isnan(lower) || std::isnan(upper) || !(lower < upper))
    throw DomainError("sample_truncated_normal: requires lower < upper");
  if (!std::isfinite(mean))
    throw DomainError("sample_truncated_normal: non-finite mean");

  const double sd = std::sqrt(variance);
  const double lo = (lower - mean) / sd;  // -inf ok
  const double hi = (upper - mean) / sd;

  double x;
  if (lo >= detail::kTruncTailCut) {
    x = detail::truncnorm_upper_tail(lo, hi, rng);
  } else if (hi <= -detail::kTruncTailCut) {
    x = -detail::truncnorm_upper_tail(-hi, -lo, rng);
  } else {
    const double a = std::isinf(lo) ? 0.0 : normal_cdf(lo);
    const double b = std::isinf(hi) ? 1.0 : normal_cdf(hi);
    if (b - a > 1e-15) {
      x = normal_quantile(a + (b - a) * rng.uniform());
    } else {
      // cdf values collided; fall back to the heavier tail side
      x = (lo > 0.0) ? detail::truncnorm_upper_tail(lo, hi, rng)
                     : -detail::truncnorm_upper_tail(-hi, -lo, rng);
    }
  }

  double r = mean + sd * x;
  // keep the draw strictly interior after the affine map rounds
  if (r <= lower) r = std::nextafter(lower, std::numeric_limits<double>::infinity());
  if (r >= upper) r = std::nextafter(upper, -std::numeric_limits<double>::infinity());
  return r;
}

}  // namespace ordq

#endif  // ORDQ_TRUNCATED_NORMAL_HPP

#ifndef ORDQ_GIG_HPP
#define ORDQ_GIG_HPP

#include <cmath>

#include "ordq/errors.hpp"
#include "ordq/rng.hpp"

namespace ordq {

// Inverse Gaussian IG(mu, lambda) by the Michael-Schucany-Haas transform.
// The smaller root is computed in a cancellation-free form.
inline double sample_inverse_gaussian(double mu, double lambda, RngStream& rng) {
  const double nu = rng.normal();
  const double y = nu * nu;
  const double s = mu * y / (2.0 * lambda);
  const double x = mu / (1.0 + s + std::sqrt(s * (s + 2.0)));
  const double u = rng.uniform();
  return (u * (mu + x) <= mu) ? x : mu * mu / x;
}

// GIG with index nu = 1/2 and density prop. to w^{-1/2} exp{-(a/w + b w)/2}
// on w > 0. Uses the reciprocal identity: if Y ~ IG(sqrt(b/a), b) then
// 1/Y ~ GIG(1/2, a, b). The a = 0 boundary is exactly Gamma(1/2, rate b/2).
inline double sample_gig_half(double a, double b, RngStream& rng) {
  if (!(a >= 0.0) || !std::isfinite(a))
    throw DomainError("sample_gig_half: chi parameter must be finite and >= 0");
  if (!(b > 0.0) || !std::isfinite(b))
    throw DomainError("sample_gig_half: psi parameter must be finite and > 0");
  // below ~1e-280 the a/w penalty is invisible at double precision
  if (a < 1e-280) return rng.gamma(0.5, 0.5 * b);
  const double y = sample_inverse_gaussian(std::sqrt(b / a), b, rng);
  return 1.0 / y;
}

// E[W] for W ~ GIG(1/2, a, b); Bessel ratio collapses to a closed form.
inline double gig_half_mean(double a, double b) {
  if (a <= 0.0) return 1.0 / b;  // Gamma(1/2, b/2) mean
  const double q = std::sqrt(a / b);
  return q * (1.0 + 1.0 / std::sqrt(a * b));
}

}  // namespace ordq

#endif  // ORDQ_GIG_HPP

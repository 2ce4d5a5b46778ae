#ifndef ORDQ_STATS_HPP
#define ORDQ_STATS_HPP

#include <cmath>
#include <limits>

#include "ordq/errors.hpp"

// Scalar distribution functions shared by both samplers: standard normal
// cdf/pdf/quantile and the asymmetric Laplace family AL(0,1,p) used by the
// quantile model. The AL convention here fixes unit scale, so F(0) = p.

namespace ordq {

inline constexpr double kCdfFloor = 1e-300;   // clamp for log-likelihoods
inline constexpr double kCdfCeil = 1.0 - 1e-16;

inline double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double normal_cdf(double x) {
  if (!std::isfinite(x)) throw DomainError("normal_cdf: non-finite input");
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

// Derivative of the normal pdf, used in the cut-point Hessian.
inline double normal_pdf_deriv(double x) { return -x * normal_pdf(x); }

// Wichura's AS 241 (PPND16). Relative error below 1e-15 on (0,1).
inline double normal_quantile(double u) {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("normal_quantile: argument must lie in (0,1)");
  const double q = u - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r + 1.0);
  }
  r = (q < 0.0) ? u : 1.0 - u;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
              3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
            4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
            2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
            5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -val : val;
}

namespace detail {
inline void check_quantile_p(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0))
    throw DomainError(std::string(who) + ": quantile p must lie in (0,1)");
}
}  // namespace detail

// AL(0,1,p): F(x) = p e^{(1-p)x} for x <= 0, 1 - (1-p) e^{-p x} for x > 0.
inline double al_cdf(double x, double p) {
  detail::check_quantile_p(p, "al_cdf");
  if (!std::isfinite(x)) throw DomainError("al_cdf: non-finite input");
  if (x <= 0.0) return p * std::exp((1.0 - p) * x);
  return 1.0 - (1.0 - p) * std::exp(-p * x);
}

inline double al_pdf(double x, double p) {
  detail::check_quantile_p(p, "al_pdf");
  const double c = p * (1.0 - p);
  return (x <= 0.0) ? c * std::exp((1.0 - p) * x) : c * std::exp(-p * x);
}

// One-sided derivative; the kink at 0 is measure-zero for our integrals.
inline double al_pdf_deriv(double x, double p) {
  return (x <= 0.0) ? (1.0 - p) * al_pdf(x, p) : -p * al_pdf(x, p);
}

inline double al_quantile(double u, double p) {
  detail::check_quantile_p(p, "al_quantile");
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("al_quantile: argument must lie in (0,1)");
  if (u <= p) return std::log(u / p) / (1.0 - p);
  return -std::log((1.0 - u) / (1.0 - p)) / p;
}

// Normal-exponential mixture constants for AL(0,1,p).
struct AlMixture {
  double theta;  // (1-2p)/(p(1-p))
  double tau2;   // 2/(p(1-p))
  explicit AlMixture(double p) {
    detail::check_quantile_p(p, "AlMixture");
    const double c = p * (1.0 - p);
    theta = (1.0 - 2.0 * p) / c;
    tau2 = 2.0 / c;
  }
};

// Link evaluation for ordinal bin probabilities: tolerates +-inf cut-points
// and clamps so downstream logs never see 0 or 1.
enum class Link { Probit, AsymmetricLaplace };

inline double link_cdf(double x, Link link, double p) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return link == Link::Probit ? normal_cdf(x) : al_cdf(x, p);
}

inline double link_pdf(double x, Link link, double p) {
  if (std::isinf(x)) return 0.0;
  return link == Link::Probit ? normal_pdf(x) : al_pdf(x, p);
}

inline double link_pdf_deriv(double x, Link link, double p) {
  if (std::isinf(x)) return 0.0;
  return link == Link::Probit ? normal_pdf_deriv(x) : al_pdf_deriv(x, p);
}

inline double clamp_cdf(double u) {
  if (u < kCdfFloor) return kCdfFloor;
  if (u > kCdfCeil) return kCdfCeil;
  return u;
}

}  // namespace ordq

#endif  // ORDQ_STATS_HPP

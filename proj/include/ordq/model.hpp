#ifndef ORDQ_MODEL_HPP
#define ORDQ_MODEL_HPP

#include <algorithm>
#include <cmath>

#include "ordq/cutpoints.hpp"
#include "ordq/dataset.hpp"
#include "ordq/stats.hpp"

namespace ordq {

// Which latent error law the ordinal model uses. The quantile kind carries
// its fixed quantile level p.
struct ModelKind {
  Link link = Link::Probit;
  double p = 0.5;

  static ModelKind probit() { return ModelKind{Link::Probit, 0.5}; }
  static ModelKind quantile(double p) {
    detail::check_quantile_p(p, "ModelKind::quantile");
    return ModelKind{Link::AsymmetricLaplace, p};
  }
  bool is_probit() const { return link == Link::Probit; }
};

// P(y = j | x) for j = 1..J: consecutive cdf differences F(gamma_j - x'b).
// The differences telescope, so the vector sums to F(inf) - F(-inf) = 1 up
// to rounding; stray negative round-off is clipped at 0.
inline Vector outcome_probabilities(const Vector& x, const Vector& beta,
                                    const CutpointMap& cuts, ModelKind kind) {
  if (x.size() != beta.size())
    throw ValidationError("outcome_probabilities: x and beta dimension mismatch");
  const double xb = x.dot(beta);
  const int J = cuts.num_categories();
  Vector probs(J);
  double prev = 0.0;  // F(gamma_0 - xb) = F(-inf)
  for (int j = 1; j < J; ++j) {
    const double cur = link_cdf(cuts.gamma[j - 1] - xb, kind.link, kind.p);
    probs[j - 1] = std::max(0.0, cur - prev);
    prev = cur;
  }
  probs[J - 1] = std::max(0.0, 1.0 - prev);
  return probs;
}

// Same quantity for a single observed category, clamped away from zero so
// the log stays finite when a cut-point drifts far from x'b.
inline double observed_category_probability(double xb, int y_cat,
                                            const CutpointMap& cuts,
                                            ModelKind kind) {
  const double hi = cuts.upper_bound(y_cat);
  const double lo = cuts.lower_bound(y_cat);
  const double p =
      link_cdf(hi - xb, kind.link, kind.p) - link_cdf(lo - xb, kind.link, kind.p);
  return std::max(p, kCdfFloor);
}

// Observed-data log-likelihood in the (beta, delta) parameterization.
inline double log_likelihood(const OrdinalDataset& data, const Vector& beta,
                             const Vector& delta, ModelKind kind) {
  if (beta.size() != data.k())
    throw ValidationError("log_likelihood: beta dimension mismatch");
  if (delta.size() != data.num_categories - 2)
    throw ValidationError("log_likelihood: delta dimension mismatch");
  const CutpointMap cuts = CutpointMap::from_delta(delta);
  const Vector xb = data.X * beta;
  double ll = 0.0;
  for (long i = 0; i < data.n(); ++i)
    ll += std::log(observed_category_probability(xb[i], data.y[i], cuts, kind));
  return ll;
}

}  // namespace ordq

#endif  // ORDQ_MODEL_HPP

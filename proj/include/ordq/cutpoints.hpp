#ifndef ORDQ_CUTPOINTS_HPP
#define ORDQ_CUTPOINTS_HPP

#include <cmath>
#include <limits>
#include <string>

#include "ordq/errors.hpp"
#include "ordq/linalg.hpp"

namespace ordq {

// Cut-point vector gamma = (gamma_1,...,gamma_{J-1}) with gamma_1 = 0 and
// log-gap vector delta of length J-2:
//   gamma_j = gamma_{j-1} + exp(delta_{j-1}),  j = 2..J-1.
// The implicit outer bounds are gamma_0 = -inf, gamma_J = +inf.

inline Vector gamma_from_delta(const Vector& delta) {
  for (int i = 0; i < delta.size(); ++i)
    if (!std::isfinite(delta[i]))
      throw DomainError("gamma_from_delta: non-finite log-gap at index " +
                        std::to_string(i));
  Vector gamma(delta.size() + 1);
  gamma[0] = 0.0;
  for (int i = 0; i < delta.size(); ++i) {
    const double gap = std::exp(delta[i]);
    gamma[i + 1] = gamma[i] + gap;
    if (!std::isfinite(gamma[i + 1]))
      throw RangeError("gamma_from_delta: exp overflow at log-gap index " +
                       std::to_string(i));
  }
  return gamma;
}

inline Vector delta_from_gamma(const Vector& gamma) {
  if (gamma.size() < 1 || gamma[0] != 0.0)
    throw ValidationError("delta_from_gamma: gamma must start at 0");
  Vector delta(gamma.size() - 1);
  for (int i = 0; i + 1 < gamma.size(); ++i) {
    const double gap = gamma[i + 1] - gamma[i];
    if (!(gap > 0.0))
      throw ValidationError("delta_from_gamma: gamma not strictly increasing at index " +
                            std::to_string(i + 1));
    delta[i] = std::log(gap);
  }
  return delta;
}

struct CutpointMap {
  Vector delta;
  Vector gamma;

  static CutpointMap from_delta(const Vector& delta) {
    return CutpointMap{delta, gamma_from_delta(delta)};
  }
  static CutpointMap from_gamma(const Vector& gamma) {
    return CutpointMap{delta_from_gamma(gamma), gamma};
  }

  // Category count implied by the stored cuts.
  int num_categories() const { return static_cast<int>(gamma.size()) + 1; }

  // Bin bounds for a 1-based category, with the infinite outer bounds.
  double upper_bound(int category) const {
    return category >= num_categories()
               ? std::numeric_limits<double>::infinity()
               : gamma[category - 1];
  }
  double lower_bound(int category) const {
    return category <= 1 ? -std::numeric_limits<double>::infinity()
                         : gamma[category - 2];
  }
};

}  // namespace ordq

#endif  // ORDQ_CUTPOINTS_HPP

#ifndef ORDQ_DATASET_HPP
#define ORDQ_DATASET_HPP

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "ordq/errors.hpp"
#include "ordq/linalg.hpp"

namespace ordq {

// Ordinal response 1..J plus design matrix whose first column is the
// intercept. Immutable after construction; construction validates the
// identification requirements (every category observed, n >= k, finite X).
struct OrdinalDataset {
  std::vector<int> y;
  Matrix X;
  std::vector<std::string> covariate_names;
  int num_categories = 0;  // J

  long n() const { return static_cast<long>(y.size()); }
  int k() const { return static_cast<int>(X.cols()); }

  static OrdinalDataset create(std::vector<int> y, Matrix X,
                               std::vector<std::string> names,
                               int num_categories = 0) {
    OrdinalDataset d;
    d.y = std::move(y);
    d.X = std::move(X);
    d.covariate_names = std::move(names);

    const long n = d.n();
    if (n == 0) throw ValidationError("OrdinalDataset: empty response");
    if (d.X.rows() != n)
      throw ValidationError("OrdinalDataset: X rows do not match response length");
    if (!d.X.allFinite())
      throw ValidationError("OrdinalDataset: non-finite entries in design matrix");
    if (n < d.k())
      throw ValidationError("OrdinalDataset: fewer observations than columns");
    for (long i = 0; i < n; ++i)
      if (d.X(i, 0) != 1.0)
        throw ValidationError("OrdinalDataset: first design column must be the intercept");
    if (!d.covariate_names.empty() &&
        d.covariate_names.size() != static_cast<size_t>(d.k()))
      throw ValidationError("OrdinalDataset: covariate name count mismatch");
    if (d.covariate_names.empty()) {
      d.covariate_names.emplace_back("intercept");
      for (int j = 1; j < d.k(); ++j)
        d.covariate_names.push_back("x" + std::to_string(j));
    }

    int max_cat = 0;
    for (int v : d.y) {
      if (v < 1) throw ValidationError("OrdinalDataset: response codes must start at 1");
      if (v > max_cat) max_cat = v;
    }
    d.num_categories = num_categories > 0 ? num_categories : max_cat;
    if (d.num_categories < 2)
      throw ValidationError("OrdinalDataset: need at least two outcome categories");
    if (max_cat > d.num_categories)
      throw ValidationError("OrdinalDataset: response exceeds declared category count");

    std::vector<long> counts(static_cast<size_t>(d.num_categories), 0);
    for (int v : d.y) ++counts[static_cast<size_t>(v - 1)];
    for (int j = 0; j < d.num_categories; ++j)
      if (counts[static_cast<size_t>(j)] == 0)
        throw ValidationError("OrdinalDataset: category " + std::to_string(j + 1) +
                              " unobserved; cut-points would be unidentified");
    return d;
  }

  std::vector<long> category_counts() const {
    std::vector<long> counts(static_cast<size_t>(num_categories), 0);
    for (int v : y) ++counts[static_cast<size_t>(v - 1)];
    return counts;
  }

  // FNV-1a over the canonical byte image; used to refuse cross-dataset
  // Bayes factors and to stamp run manifests.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto eat = [&h](const void* p, size_t len) {
      const unsigned char* b = static_cast<const unsigned char*>(p);
      for (size_t i = 0; i < len; ++i) {
        h ^= b[i];
        h *= 1099511628211ULL;
      }
    };
    const long nn = n();
    const int kk = k();
    eat(&nn, sizeof nn);
    eat(&kk, sizeof kk);
    eat(&num_categories, sizeof num_categories);
    eat(y.data(), y.size() * sizeof(int));
    for (long i = 0; i < X.rows(); ++i)
      for (int j = 0; j < X.cols(); ++j) {
        const double v = X(i, j);
        eat(&v, sizeof v);
      }
    for (const auto& s : covariate_names) eat(s.data(), s.size());
    return h;
  }
};

}  // namespace ordq

#endif  // ORDQ_DATASET_HPP

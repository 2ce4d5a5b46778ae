#ifndef ORDQ_LINALG_HPP
#define ORDQ_LINALG_HPP

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <string>
#include <utility>

#include "ordq/errors.hpp"
#include "ordq/rng.hpp"

namespace ordq {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Dense symmetric positive definite matrix with provenance. `origin` names
// the module that built it so factorization failures are attributable.
class SpdMatrix {
 public:
  SpdMatrix() = default;

  explicit SpdMatrix(Matrix m, std::string origin = "unspecified")
      : m_(std::move(m)), origin_(std::move(origin)) {
    if (m_.rows() != m_.cols())
      throw ValidationError("SpdMatrix: not square [" + origin_ + "]");
    if (!m_.allFinite())
      throw ValidationError("SpdMatrix: non-finite entries [" + origin_ + "]");
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
      throw ValidationError("SpdMatrix: asymmetry beyond 1e-12 relative [" + origin_ + "]");
  }

  static SpdMatrix identity(int k, std::string origin = "unspecified") {
    return SpdMatrix(Matrix::Identity(k, k), std::move(origin));
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  const std::string& origin() const { return origin_; }

  Eigen::LLT<Matrix> llt() const {
    Eigen::LLT<Matrix> f(m_);
    if (dim() > 0 && f.info() != Eigen::Success)
      throw SingularityError(origin_, "Cholesky factorization failed");
    return f;
  }

 private:
  Matrix m_;
  std::string origin_ = "unspecified";
};

// Solve A x = rhs for SPD A.
inline Vector chol_solve_spd(const SpdMatrix& A, const Vector& rhs) {
  if (rhs.size() != A.dim())
    throw ValidationError("chol_solve_spd: dimension mismatch [" + A.origin() + "]");
  if (A.dim() == 0) return Vector(0);
  return A.llt().solve(rhs);
}

inline Vector sample_std_normal_vec(int k, RngStream& rng) {
  Vector z(k);
  for (int i = 0; i < k; ++i) z[i] = rng.normal();
  return z;
}

// Draw from N(mean, cov).
inline Vector sample_mvn(const Vector& mean, const SpdMatrix& cov, RngStream& rng) {
  if (mean.size() != cov.dim())
    throw ValidationError("sample_mvn: dimension mismatch [" + cov.origin() + "]");
  if (mean.size() == 0) return Vector(0);
  return mean + cov.llt().matrixL() * sample_std_normal_vec(cov.dim(), rng);
}

// Draw from N(mean, P^{-1}) given the Cholesky factor of the precision P:
// solve L^T u = z so that cov(u) = (L L^T)^{-1}.
inline Vector sample_mvn_from_precision_llt(const Vector& mean,
                                            const Eigen::LLT<Matrix>& prec_llt,
                                            RngStream& rng) {
  const int k = static_cast<int>(mean.size());
  if (k == 0) return Vector(0);
  const Vector z = sample_std_normal_vec(k, rng);
  return mean + prec_llt.matrixU().solve(z);
}

inline double log_det_from_llt(const Eigen::LLT<Matrix>& llt) {
  return 2.0 * Matrix(llt.matrixL()).diagonal().array().log().sum();
}

// log N(x; mean, Sigma) with Sigma given as an SpdMatrix.
inline double log_mvn_pdf(const Vector& x, const Vector& mean, const SpdMatrix& cov) {
  const int k = cov.dim();
  if (k == 0) return 0.0;
  const auto f = cov.llt();
  const Vector d = x - mean;
  const Vector half = Matrix(f.matrixL()).triangularView<Eigen::Lower>().solve(d);
  return -0.5 * (k * std::log(2.0 * M_PI) + log_det_from_llt(f) + half.squaredNorm());
}

// log N(x; mean, P^{-1}) straight from the precision factor.
inline double log_mvn_pdf_from_precision_llt(const Vector& x, const Vector& mean,
                                             const Eigen::LLT<Matrix>& prec_llt) {
  const int k = static_cast<int>(x.size());
  if (k == 0) return 0.0;
  const Vector d = x - mean;
  const double quad = (Matrix(prec_llt.matrixL()).transpose() * d).squaredNorm();
  return -0.5 * (k * std::log(2.0 * M_PI) - log_det_from_llt(prec_llt) + quad);
}

}  // namespace ordq

#endif  // ORDQ_LINALG_HPP

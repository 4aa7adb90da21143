#pragma once

#include <Eigen/Dense>
#include <vector>

#include "camsel/errors.hpp"

namespace camsel {

/// A validated correlation matrix: symmetric, unit diagonal, positive
/// definite. Immutable after construction.
class CorrelationMatrix {
 public:
  // Validates and takes ownership. Near-symmetric input (skew <= 1e-9) is
  // symmetrized as (A + A^T)/2; anything worse is rejected.
  static CorrelationMatrix validate(Eigen::MatrixXd raw);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  explicit CorrelationMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

/// The correlation approximation matrix Delta = Sigma_X * Sigma_M^{-1}.
/// Not symmetric in general, but similar to an SPD matrix, so its
/// eigenvalues are real and positive. Keeps the factor pair around so the
/// spectrum can be computed through the symmetric similar form.
class CamMatrix {
 public:
  CamMatrix(const CorrelationMatrix& sigma, const CorrelationMatrix& model);

  int dim() const { return static_cast<int>(delta_.rows()); }
  const Eigen::MatrixXd& delta() const { return delta_; }
  const Eigen::MatrixXd& sigma() const { return sigma_; }
  const Eigen::MatrixXd& model() const { return model_; }

 private:
  Eigen::MatrixXd delta_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd model_;
};

/// Eigenvalues of the CAM plus derived quantities. This is the sufficient
/// statistic for every divergence, AUC and bound downstream.
struct CamSpectrum {
  std::vector<double> lambdas;  // descending, all > 0
  std::vector<double> alphas;   // alpha_i = lambda_i + 1/lambda_i - 2
  double logdet = 0.0;          // sum log lambda_i
  double trace = 0.0;           // sum lambda_i

  int dim() const { return static_cast<int>(lambdas.size()); }

  // Builds a spectrum directly from eigenvalues (must be positive).
  static CamSpectrum from_lambdas(std::vector<double> lambdas);
};

/// Alias for the validation entry point, matching the operation name used
/// throughout the docs.
inline CorrelationMatrix validate_correlation(Eigen::MatrixXd raw) {
  return CorrelationMatrix::validate(std::move(raw));
}

/// Delta = Sigma_X * Sigma_M^{-1}, via Cholesky solve (no explicit inverse).
CamMatrix cam(const CorrelationMatrix& sigma, const CorrelationMatrix& model);

/// Spectrum of Delta through the SPD-congruent symmetric matrix
/// Sigma_X^{1/2} Sigma_M^{-1} Sigma_X^{1/2}.
CamSpectrum cam_spectrum(const CamMatrix& delta);

/// Symmetric square root S with S*S = m.
Eigen::MatrixXd spd_sqrt(const CorrelationMatrix& m);

}  // namespace camsel

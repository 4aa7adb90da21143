#include "camsel/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace camsel {

namespace {
constexpr double kSymTol = 1e-9;
constexpr double kDiagTol = 1e-12;
constexpr double kPdRelTol = 1e-10;
}  // namespace

CorrelationMatrix CorrelationMatrix::validate(Eigen::MatrixXd raw) {
  if (raw.rows() != raw.cols() || raw.rows() < 1) {
    throw NotSquare("matrix is " + std::to_string(raw.rows()) + "x" +
                    std::to_string(raw.cols()));
  }
  const double skew = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  if (skew > kSymTol) {
    std::ostringstream os;
    os << "max |A - A^T| = " << skew << " exceeds " << kSymTol;
    throw NotSymmetric(os.str());
  }
  Eigen::MatrixXd m = 0.5 * (raw + raw.transpose());

  for (int i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, i) - 1.0) > kDiagTol) {
      std::ostringstream os;
      os << "diagonal entry (" << i << "," << i << ") = " << m(i, i);
      throw BadDiagonal(os.str());
    }
    for (int j = 0; j < m.cols(); ++j) {
      if (!std::isfinite(m(i, j)) || (i != j && std::abs(m(i, j)) > 1.0)) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") = " << m(i, j)
           << " outside [-1, 1]";
        throw NotPositiveDefinite(os.str());
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EigenFailure("eigensolver failed");
  const double emin = es.eigenvalues().minCoeff();
  const double emax = es.eigenvalues().maxCoeff();
  if (emin <= kPdRelTol * emax) {
    std::ostringstream os;
    os << "smallest eigenvalue " << emin << " vs largest " << emax;
    throw NotPositiveDefinite(os.str());
  }
  return CorrelationMatrix(std::move(m));
}

CamMatrix::CamMatrix(const CorrelationMatrix& sigma,
                     const CorrelationMatrix& model)
    : sigma_(sigma.mat()), model_(model.mat()) {
  if (sigma.dim() != model.dim()) {
    throw DimensionMismatch("sigma is " + std::to_string(sigma.dim()) +
                            ", model is " + std::to_string(model.dim()));
  }
  Eigen::LLT<Eigen::MatrixXd> llt(model_);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("model covariance is not positive definite");
  }
  // Sigma_X * Sigma_M^{-1} = (Sigma_M^{-1} * Sigma_X)^T by symmetry.
  delta_ = llt.solve(sigma_).transpose();
}

CamSpectrum CamSpectrum::from_lambdas(std::vector<double> lambdas) {
  std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
  CamSpectrum s;
  s.lambdas = std::move(lambdas);
  s.alphas.reserve(s.lambdas.size());
  for (double l : s.lambdas) {
    if (!(l > 0.0)) {
      throw NonPositiveEigenvalue("lambda = " + std::to_string(l));
    }
    s.alphas.push_back(std::max(0.0, l + 1.0 / l - 2.0));
    s.logdet += std::log(l);
    s.trace += l;
  }
  return s;
}

CamSpectrum cam_spectrum(const CamMatrix& delta) {
  const int n = delta.dim();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_sig(delta.sigma());
  if (es_sig.info() != Eigen::Success) throw EigenFailure("sqrt(Sigma_X)");
  Eigen::MatrixXd root = es_sig.operatorSqrt();

  Eigen::LLT<Eigen::MatrixXd> llt(delta.model());
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("model covariance is not positive definite");
  }
  // Sigma_X^{1/2} Sigma_M^{-1} Sigma_X^{1/2}, similar to Delta and SPD.
  Eigen::MatrixXd sym = root * llt.solve(root);
  sym = 0.5 * (sym + sym.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) throw EigenFailure("spectrum solve");

  std::vector<double> lambdas(es.eigenvalues().data(),
                              es.eigenvalues().data() + n);
  return CamSpectrum::from_lambdas(std::move(lambdas));
}

CamMatrix cam(const CorrelationMatrix& sigma, const CorrelationMatrix& model) {
  return CamMatrix(sigma, model);
}

Eigen::MatrixXd spd_sqrt(const CorrelationMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
  if (es.info() != Eigen::Success) throw EigenFailure("spd_sqrt");
  return es.operatorSqrt();
}

}  // namespace camsel

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "camsel/matrix_core.hpp"
#include "camsel/quadrature.hpp"

namespace camsel {

/// LLRT scores drawn under both hypotheses. Deterministic given the seed.
struct LlrtSamples {
  std::vector<double> h0_scores;  // x ~ N(0, Sigma_X)
  std::vector<double> h1_scores;  // x ~ N(0, Sigma_M)
  std::uint64_t seed = 0;
};

/// Empirical ROC curve plus the Mann-Whitney AUC estimate.
struct RocEstimate {
  // (false_alarm, detection) pairs, from (0,0) to (1,1), sampled at
  // uniform false-alarm quantiles of the H0 scores.
  std::vector<std::pair<double, double>> points;
  double auc_mw = 0.0;
  double se = 0.0;
};

/// Draws n_samples LLRT scores l(x) = -c + x^T K x under each hypothesis,
/// with K = (Sigma_X^{-1} - Sigma_M^{-1})/2 and c = -log|Delta|/2.
LlrtSamples sample_llrt(const CorrelationMatrix& sigma,
                        const CorrelationMatrix& model,
                        std::int64_t n_samples, std::uint64_t seed);

/// Mann-Whitney AUC with half-weight ties, O(N log N), plus the ROC curve
/// evaluated at `curve_points` uniform false-alarm levels.
RocEstimate empirical_roc(const LlrtSamples& samples, int curve_points = 2048);

/// ROC-derived KL estimates by finite differences on the binned curve:
///   first  = D(f_L1 || f_L0) = -int log h'(z) dz
///   second = D(f_L0 || f_L1) = -int h'(z) log h'(z) dz
/// Coarse estimators; expect ~15% relative error at 1e6 samples/100 bins.
std::pair<double, double> roc_kl_estimate(const RocEstimate& roc, int bins);

/// Bootstrap standard errors for the two roc_kl_estimate values.
std::pair<double, double> roc_kl_bootstrap_se(const LlrtSamples& samples,
                                              int bins, int replicates,
                                              std::uint64_t seed);

/// Modified Bessel function K0 by the classical two-regime polynomial
/// approximation (relative error below ~1e-7).
double bessel_k0(double x);

/// GAL density of one difference-LLRT component with dissimilarity alpha:
///   f(l) = e^{l/2} / (pi sqrt(alpha)) K0(sqrt(1/alpha + 1/4) |l|), l != 0.
/// The density has a log singularity at l = 0 (OutOfDomain there).
double gal_pdf(double alpha, double l);

/// CDF of the GAL density by numeric integration.
double gal_cdf(double alpha, double x, const QuadratureConfig& cfg = {});

/// Goodness-of-fit check: samples ((lambda-1)/2) W^2 - ((1-1/lambda)/2) Z^2
/// from chi-squared draws and compares against the integrated gal_pdf.
struct GalCheckReport {
  double alpha = 0.0;
  double ks_distance = 0.0;
  double ks_threshold_1pct = 0.0;  // 1.63 / sqrt(N)
  double empirical_mean = 0.0;
  double mean_se = 0.0;
};
GalCheckReport gal_component_check(double lambda, std::int64_t n_samples,
                                   std::uint64_t seed);

}  // namespace camsel

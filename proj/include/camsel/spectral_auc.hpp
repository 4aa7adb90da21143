#pragma once

#include <complex>
#include <span>

#include "camsel/matrix_core.hpp"
#include "camsel/quadrature.hpp"

namespace camsel {

/// Exact AUC for the difference-LLRT detection problem:
///   AUC = 1 - (1/2pi) int_R [1/(j nu + 1)] prod_i (1 + a_i nu^2 - j a_i nu)^{-1/2} d nu
/// evaluated as 2 Re over [0, nu_max] with an analytic tail bound below
/// cfg.truncation_floor. Degenerate spectra (all alpha ~ 0) return exactly 1/2.
double auc_exact(const CamSpectrum& s, const QuadratureConfig& cfg = {});

/// CDF of the difference LLRT statistic L_Delta at l, via the
/// characteristic-function inversion integral with shift parameter beta.
/// beta must keep I + (beta/2)(Lambda - I) positive definite; beta = 2 is
/// always valid. Extreme |l| is resolved through the Chernoff tail when
/// the tail probability is below 1e-10; otherwise |l| is restricted to
/// keep e^{l beta / 2} representable without cancellation.
double cdf_ldelta(const CamSpectrum& s, double l, double beta = 2.0,
                  const QuadratureConfig& cfg = {});

/// prod_i (1 + a_i nu^2 - j a_i nu)^{-1/2} with per-factor principal
/// square roots. Each factor has real part >= 1, so no branch crossing.
std::complex<double> principal_sqrt_product(double nu,
                                            std::span<const double> alphas);

/// log of the difference-LLRT MGF, log prod_i (1 - a_i t - a_i t^2)^{-1/2}.
/// Domain: 1 - a_i t - a_i t^2 > 0 for every i (always contains (-1, 0)).
double log_mgf(const CamSpectrum& s, double t);

/// Chernoff bound on Pr(L_Delta > l) (upper = true) or Pr(L_Delta < l)
/// (upper = false), optimized over the MGF domain.
double chernoff_tail(const CamSpectrum& s, double l, bool upper);

}  // namespace camsel

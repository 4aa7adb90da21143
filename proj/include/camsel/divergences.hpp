#pragma once

#include "camsel/matrix_core.hpp"

namespace camsel {

/// KL, reverse KL and Jeffreys divergence for a (Sigma_X, Sigma_M) pair,
/// in nats. jeffreys == kl + reverse_kl.
struct DivergenceSet {
  double kl = 0.0;          // D(f_X || f_M)
  double reverse_kl = 0.0;  // D(f_M || f_X)
  double jeffreys = 0.0;
};

/// All three divergences from the CAM spectrum:
///   kl         = 1/2 (tr - n - logdet)
///   reverse_kl = 1/2 (sum 1/lambda_i - n + logdet)
///   jeffreys   = 1/2 sum alpha_i
DivergenceSet divergences_from_spectrum(const CamSpectrum& s);

/// Closed forms for the equicorrelated Toeplitz matrix approximated by a
/// star or chain tree. Domain: n >= 2, rho > -1/(n-1), |rho| < 1.
struct ClosedFormDivergence {
  double kl;
  double jeffreys;
};
ClosedFormDivergence star_closed_form(int n, double rho);
ClosedFormDivergence chain_closed_form(int n, double rho);

}  // namespace camsel

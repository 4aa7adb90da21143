#pragma once

#include "camsel/divergences.hpp"
#include "camsel/matrix_core.hpp"

namespace camsel {

/// Analytical AUC bounds for one spectrum.
struct BoundReport {
  double lower = 0.5;             // max(1/2, Chernoff, clamped asymptotic)
  double upper = 1.0;             // min(parametric, asymptotic)
  double lower_asymptotic = 0.5;  // clamped to [1/2, 1]
  double upper_asymptotic = 1.0;  // 1 - e^{-d_star - 1}
  double d_star = 0.0;            // min(KL, reverse KL), nats
  double a_param = 0.0;           // feasible-region parameter at d_star
};

/// One point of the (AUC, KL) feasible-region boundary.
struct FeasiblePoint {
  double auc;
  double d;
};

/// Chernoff lower bound: max{1/2, 1 - prod_i 2 / sqrt(4 + alpha_i)}.
double chernoff_lower(const CamSpectrum& s);

/// Parametric boundary of the feasible region:
///   AUC(a) = 1/(1 - e^{-a}) - 1/a
///   D(a)   = log a + a/(e^a - 1) - 1 - log(1 - e^{-a})
/// Series limits AUC -> 1/2 + a/12, D -> a^2/24 are used below a = 1e-4.
FeasiblePoint feasible_region_curve(double a);

/// Inverts D(a) = d_star by bisection (D is strictly increasing) and
/// returns the boundary AUC: the KL-based upper bound.
struct UpperBound {
  double upper_auc;
  double a_param;
};
UpperBound kl_upper_bound(double d_star);

/// Asymptotic form of the Chernoff bound,
/// 1 - exp(-n (1 - (1/n) sum (1 + alpha_i/8)^{-1})); never exceeds
/// chernoff_lower. Returned unclamped (can be below 1/2).
double asymptotic_lower(const CamSpectrum& s);

BoundReport bound_report(const CamSpectrum& s, const DivergenceSet& d);

}  // namespace camsel

#include "camsel/auc_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace camsel {

namespace {
constexpr double kSeriesCutoff = 1e-4;
constexpr double kRootTol = 1e-10;
}  // namespace

double chernoff_lower(const CamSpectrum& s) {
  double log_prod = 0.0;  // log prod 2/sqrt(4 + alpha) = -1/2 sum log(1 + alpha/4)
  for (double a : s.alphas) log_prod -= 0.5 * std::log1p(0.25 * a);
  return std::max(0.5, -std::expm1(log_prod));
}

FeasiblePoint feasible_region_curve(double a) {
  if (!(a > 0.0)) throw OutOfDomain("feasible-region parameter must be > 0");
  if (a < kSeriesCutoff) {
    // Leading series terms; the closed forms cancel catastrophically here.
    return {0.5 + a / 12.0, a * a / 24.0};
  }
  const double em = -std::expm1(-a);  // 1 - e^{-a}
  FeasiblePoint p;
  p.auc = 1.0 / em - 1.0 / a;
  p.d = std::log(a) + a / std::expm1(a) - 1.0 - std::log(em);
  return p;
}

UpperBound kl_upper_bound(double d_star) {
  if (d_star < 0.0) throw OutOfDomain("d_star must be non-negative");
  if (d_star == 0.0) return {0.5, 0.0};

  // D(a) is strictly increasing; bracket then bisect.
  double lo = 1e-12, hi = 1.0;
  while (feasible_region_curve(hi).d < d_star) {
    hi *= 2.0;
    if (hi > 1e6) throw RootNotBracketed("d_star too large to bracket");
  }
  double a = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    a = 0.5 * (lo + hi);
    const double d = feasible_region_curve(a).d;
    if (std::abs(d - d_star) <= kRootTol) break;
    if (d < d_star) {
      lo = a;
    } else {
      hi = a;
    }
  }
  return {feasible_region_curve(a).auc, a};
}

double asymptotic_lower(const CamSpectrum& s) {
  const int n = s.dim();
  double mean_inv = 0.0;
  for (double a : s.alphas) mean_inv += 1.0 / (1.0 + a / 8.0);
  mean_inv /= n;
  return -std::expm1(-n * (1.0 - mean_inv));
}

BoundReport bound_report(const CamSpectrum& s, const DivergenceSet& d) {
  BoundReport r;
  r.d_star = std::min(d.kl, d.reverse_kl);
  r.upper_asymptotic = -std::expm1(-r.d_star - 1.0);
  try {
    const UpperBound ub = kl_upper_bound(r.d_star);
    r.a_param = ub.a_param;
    r.upper = std::min(ub.upper_auc, r.upper_asymptotic);
  } catch (const RootNotBracketed&) {
    // Beyond the bracket cap (d_star > D(1e6) ~ 12.8) the parametric and
    // asymptotic bounds differ by < 1/a^2 ~ 1e-12.
    r.a_param = std::exp(r.d_star + 1.0);
    r.upper = r.upper_asymptotic;
  }
  r.lower_asymptotic = std::max(0.5, asymptotic_lower(s));
  r.lower = std::max(chernoff_lower(s), r.lower_asymptotic);
  return r;
}

}  // namespace camsel

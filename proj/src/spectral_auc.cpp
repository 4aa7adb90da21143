#include "camsel/spectral_auc.hpp"

#include "camsel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace camsel {

namespace {

using std::complex;

// Eigenvalues within this distance of 1 contribute alpha ~ eps^2 and are
// treated as exact unity for truncation purposes.
constexpr double kAlphaCutoff = 1e-18;

// Smallest V such that the analytic bound on the discarded tail
// (1/pi) int_V^inf |integrand| is below `floor`. `inv_coeffs` holds, for
// each decaying factor, the constant c with |factor|^{-1/2} <= c / omega
// per unit of the decay exponent; `per_factor_pow` is that exponent.
// Factors below the cutoff are bounded by 1. Decay of the kernel
// 1/|j omega + beta| contributes one extra power.
double truncation_point(std::vector<double> log_inv_coeffs,
                        double per_factor_pow, double extra_log_scale,
                        double floor_val) {
  // Sort strongest (most negative log coefficient) first.
  std::sort(log_inv_coeffs.begin(), log_inv_coeffs.end());
  const double log_floor = std::log(floor_val) + std::log(M_PI) -
                           extra_log_scale;

  double best = std::numeric_limits<double>::infinity();
  double cum = 0.0;
  for (size_t k = 1; k <= log_inv_coeffs.size(); ++k) {
    cum += log_inv_coeffs[k - 1];
    // With k active factors the integrand is bounded by
    // e^{cum} omega^{-(1 + p)}, p = k * per_factor_pow, so the tail from V
    // is (1/pi) e^{cum} V^{-p} / p. Activity requires
    // V >= e^{log_inv_coeffs[k-1] / per_factor_pow}.
    const double p = k * per_factor_pow;
    double v = std::exp((cum - log_floor - std::log(p)) / p);
    v = std::max({v, std::exp(log_inv_coeffs[k - 1] / per_factor_pow), 1.0});
    best = std::min(best, v);
  }
  return best;
}

}  // namespace

std::complex<double> principal_sqrt_product(double nu,
                                            std::span<const double> alphas) {
  complex<double> prod(1.0, 0.0);
  for (double a : alphas) {
    const complex<double> base(1.0 + a * nu * nu, -a * nu);
    prod *= 1.0 / std::sqrt(base);
  }
  return prod;
}

double log_mgf(const CamSpectrum& s, double t) {
  double acc = 0.0;
  for (double a : s.alphas) {
    const double q = 1.0 - a * t - a * t * t;
    if (q <= 0.0) throw OutOfDomain("t outside MGF domain");
    acc -= 0.5 * std::log(q);
  }
  return acc;
}

double chernoff_tail(const CamSpectrum& s, double l, bool upper) {
  // MGF domain (t_lo, t_hi) over all factors.
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  for (double a : s.alphas) {
    if (a <= kAlphaCutoff) continue;
    const double r = std::sqrt(1.0 + 4.0 / a);
    t_lo = std::max(t_lo, 0.5 * (-1.0 - r));
    t_hi = std::min(t_hi, 0.5 * (-1.0 + r));
  }
  if (!std::isfinite(t_hi)) {
    // Degenerate L_Delta == 0.
    return (upper ? (l < 0.0) : (l > 0.0)) ? 1.0 : 0.0;
  }

  double lo = upper ? 0.0 : t_lo;
  double hi = upper ? t_hi : 0.0;
  // Stay strictly inside the domain.
  const double margin = 1e-9 * (hi - lo);
  lo += margin;
  hi -= margin;

  auto phi = [&](double t) { return -t * l + log_mgf(s, t); };
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (phi(m1) < phi(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double log_bound = phi(0.5 * (lo + hi));
  return std::min(1.0, std::exp(log_bound));
}

double auc_exact(const CamSpectrum& s, const QuadratureConfig& cfg) {
  const std::vector<double>& alphas = s.alphas;

  std::vector<double> log_inv;  // -1/2 log(alpha) per active factor
  for (double a : alphas) {
    if (a > kAlphaCutoff) log_inv.push_back(-0.5 * std::log(a));
  }
  if (log_inv.empty()) return 0.5;  // Lambda == I up to rounding

  const double vmax =
      truncation_point(std::move(log_inv), 1.0, 0.0, cfg.truncation_floor);

  // Map nu = t/(1-t); integrate 2 Re(integrand) over [0, vmax] in t-space.
  auto g = [&](double t) {
    const double nu = t / (1.0 - t);
    const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
    const complex<double> kern = 1.0 / complex<double>(1.0, nu);
    return (kern * principal_sqrt_product(nu, alphas)).real() * jac;
  };
  const double t_end = vmax / (1.0 + vmax);
  const double integral = adaptive_gk(g, 0.0, t_end, cfg) / M_PI;
  return 1.0 - integral;
}

double cdf_ldelta(const CamSpectrum& s, double l, double beta,
                  const QuadratureConfig& cfg) {
  if (!(beta > 0.0)) throw InvalidBeta("beta must be positive");

  // Coefficients b_k of the 2n sub-factors 1 + (b_k/2)(beta + j omega).
  std::vector<double> coeffs;
  coeffs.reserve(2 * s.lambdas.size());
  for (double lam : s.lambdas) {
    coeffs.push_back(lam - 1.0);
    coeffs.push_back(1.0 / lam - 1.0);
  }
  for (double b : coeffs) {
    if (1.0 + 0.5 * b * beta <= 0.0) {
      throw InvalidBeta("I + (beta/2)(Lambda - I) is not positive definite");
    }
  }

  double alpha_sum = 0.0;
  bool degenerate = true;
  for (double a : s.alphas) {
    alpha_sum += a;
    if (a > kAlphaCutoff) degenerate = false;
  }
  if (degenerate) {
    // L_Delta == 0: step CDF, with the convention F(0) = 1/2 from the
    // Cauchy kernel integral.
    return l < 0.0 ? 0.0 : (l > 0.0 ? 1.0 : 0.5);
  }

  // Extreme |l|: resolve through Chernoff tails before the oscillatory
  // integral becomes intractable.
  if (l > 0.0) {
    const double tail = chernoff_tail(s, l, /*upper=*/true);
    if (tail < 1e-10) return 1.0 - tail;
  } else if (l < 0.0) {
    const double tail = chernoff_tail(s, l, /*upper=*/false);
    if (tail < 1e-10) return tail;
  }
  if (std::abs(l) > 50.0 * (1.0 + alpha_sum)) {
    throw OutOfDomain("|l| too large for stable inversion");
  }

  std::vector<double> log_inv;  // -1/2 log(|b|/2) per active sub-factor
  for (double b : coeffs) {
    if (std::abs(b) > 1e-9) log_inv.push_back(-0.5 * std::log(0.5 * std::abs(b)));
  }
  const double scale = 0.5 * l * beta;  // log of the e^{l beta / 2} factor
  const double wmax = truncation_point(std::move(log_inv), 0.5, scale,
                                       cfg.truncation_floor);

  auto g = [&](double t) {
    const double w = t / (1.0 - t);
    const double jac = 1.0 / ((1.0 - t) * (1.0 - t));
    const complex<double> sarg(beta, w);
    complex<double> prod(1.0, 0.0);
    for (double b : coeffs) {
      prod *= 1.0 / std::sqrt(1.0 + 0.5 * b * sarg);
    }
    const complex<double> val = std::exp(0.5 * l * sarg) / sarg * prod;
    return val.real() * jac;
  };
  const double t_end = wmax / (1.0 + wmax);
  const double val = adaptive_gk(g, 0.0, t_end, cfg) / M_PI;
  return std::clamp(val, 0.0, 1.0);
}

}  // namespace camsel

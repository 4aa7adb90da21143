#include "camsel/divergences.hpp"

#include <cmath>

namespace camsel {

namespace {

void check_toeplitz_domain(int n, double rho) {
  if (n < 2) throw OutOfDomain("n must be >= 2");
  if (!(rho > -1.0 / (n - 1)) || !(std::abs(rho) < 1.0)) {
    throw OutOfDomain("rho = " + std::to_string(rho) +
                      " outside (-1/(n-1), 1)");
  }
}

}  // namespace

DivergenceSet divergences_from_spectrum(const CamSpectrum& s) {
  const int n = s.dim();
  double inv_trace = 0.0;
  double half_alpha_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    inv_trace += 1.0 / s.lambdas[i];
    half_alpha_sum += 0.5 * s.alphas[i];
  }
  DivergenceSet d;
  d.kl = std::max(0.0, 0.5 * (s.trace - n - s.logdet));
  d.reverse_kl = std::max(0.0, 0.5 * (inv_trace - n + s.logdet));
  d.jeffreys = half_alpha_sum;
  return d;
}

ClosedFormDivergence star_closed_form(int n, double rho) {
  check_toeplitz_domain(n, rho);
  ClosedFormDivergence r;
  r.kl = 0.5 * (n - 1) * std::log1p(rho) - 0.5 * std::log1p((n - 1) * rho);
  r.jeffreys =
      (n - 1.0) * (n - 2.0) * rho * rho / (2.0 * (1.0 + (n - 1.0) * rho));
  return r;
}

ClosedFormDivergence chain_closed_form(int n, double rho) {
  check_toeplitz_domain(n, rho);
  ClosedFormDivergence r;
  // Same determinant as the star, hence the same KL.
  r.kl = star_closed_form(n, rho).kl;
  const double q = 1.0 - rho;
  const double rn = std::pow(rho, n);
  r.jeffreys = rho * rho / ((1.0 + (n - 1.0) * rho) * q) *
               (0.5 * n * (n - 1.0) - n * (1.0 - rn) / q +
                (1.0 - (n + 1.0) * rn + n * rn * rho) / (q * q));
  return r;
}

}  // namespace camsel

#pragma once

#include <functional>

#include "camsel/errors.hpp"

namespace camsel {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_halvings = 60;
  double truncation_floor = 1e-14;
};

/// Globally adaptive Gauss-Kronrod 7-15 on [a, b]: repeatedly bisects the
/// panel with the largest error estimate until the summed estimate meets
/// max(abs_tol, rel_tol * |I|). Converges for integrable endpoint
/// singularities. Throws QuadratureNonConvergence when the refinement
/// budget is exhausted.
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   const QuadratureConfig& cfg = {});

}  // namespace camsel

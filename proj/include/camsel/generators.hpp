#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "camsel/graph_model.hpp"
#include "camsel/matrix_core.hpp"

namespace camsel {

/// 2D sensor placement for the Gaussian-kernel correlation family.
struct SensorLayout {
  std::vector<std::pair<double, double>> coords;
  double sigma_kernel = 1.0;

  int size() const { return static_cast<int>(coords.size()); }
};

/// Equicorrelated Toeplitz matrix: ones on the diagonal, rho elsewhere.
/// PD iff rho > -1/(n-1) and |rho| < 1.
CorrelationMatrix toeplitz_equicorrelation(int n, double rho);

/// Closed-form covariance selection of the equicorrelated matrix onto the
/// star rooted at vertex 0: hub entries rho, leaf-leaf entries rho^2.
ModelCovariance star_model(int n, double rho);

/// Closed-form selection onto the path 0-1-...-(n-1): entries rho^{|i-j|}.
ModelCovariance chain_model(int n, double rho);

/// Gaussian-kernel Gram matrix Sigma(i,j) = exp(-d(i,j)^2 / (2 sigma^2)).
/// Strictly PD for distinct sensors; coincident sensors are rejected.
CorrelationMatrix kernel_network(const SensorLayout& layout);

/// Seeded layout with standard-normal coordinates per axis.
SensorLayout random_layout(int n, double sigma_kernel, std::uint64_t seed);

/// Reads an n x n comma-separated matrix ('#' comments and blank lines
/// ignored) and validates it. With normalize set, a covariance input is
/// first rescaled to correlation form D^{-1/2} Sigma D^{-1/2}.
CorrelationMatrix load_matrix_csv(const std::string& path,
                                  bool normalize = false);
CorrelationMatrix parse_matrix_csv(const std::string& text,
                                   bool normalize = false);

/// Writes the matrix with 17 significant digits (bit-exact round trip).
void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m);
std::string matrix_to_csv(const Eigen::MatrixXd& m);

}  // namespace camsel

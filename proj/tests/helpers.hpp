#pragma once

#include <random>
#include <vector>

#include "camsel/generators.hpp"
#include "camsel/graph_model.hpp"
#include "camsel/matrix_core.hpp"
#include "camsel/tree_sampler.hpp"

namespace testutil {

// The running 4-node example: a dense correlation matrix whose Chow-Liu
// tree is {(0,1),(0,2),(2,3)}.
inline Eigen::MatrixXd example4_raw() {
  Eigen::MatrixXd m(4, 4);
  m << 1.0, 0.9, 0.9, 0.6,  //
      0.9, 1.0, 0.8, 0.3,   //
      0.9, 0.8, 1.0, 0.7,   //
      0.6, 0.3, 0.7, 1.0;
  return m;
}

inline camsel::CorrelationMatrix example4() {
  return camsel::validate_correlation(example4_raw());
}

inline camsel::TreeStructure example4_tree() {
  return camsel::TreeStructure(4, {{0, 1}, {0, 2}, {2, 3}});
}

// The covariance selection of example4 onto example4_tree, closed form.
inline Eigen::MatrixXd example4_selected() {
  Eigen::MatrixXd m(4, 4);
  m << 1.0, 0.9, 0.9, 0.63,   //
      0.9, 1.0, 0.81, 0.567,  //
      0.9, 0.81, 1.0, 0.7,    //
      0.63, 0.567, 0.7, 1.0;
  return m;
}

// Random correlation matrix via normalized Wishart-style A A^T + ridge.
inline camsel::CorrelationMatrix random_correlation(int n,
                                                    std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(n, n + 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n + 2; ++j) a(i, j) = normal(rng);
  }
  Eigen::MatrixXd w = a * a.transpose();
  w += 0.05 * static_cast<double>(n) * Eigen::MatrixXd::Identity(n, n);
  Eigen::ArrayXd s = w.diagonal().array().sqrt().inverse();
  Eigen::MatrixXd c = s.matrix().asDiagonal() * w * s.matrix().asDiagonal();
  c.diagonal().setOnes();
  c = 0.5 * (c + c.transpose()).eval();
  return camsel::validate_correlation(std::move(c));
}

inline camsel::TreeStructure random_tree(int n, std::mt19937_64& rng) {
  return camsel::uniform_spanning_tree(n, rng);
}

}  // namespace testutil

#pragma once

#include "camsel/graph_model.hpp"
#include "camsel/matrix_core.hpp"

namespace camsel {

struct WeightedEdge {
  int u;
  int v;
  double weight;  // pairwise Gaussian mutual information, nats
};

/// Gaussian pairwise mutual information -1/2 log(1 - rho^2).
double mutual_info_weight(double rho);

/// Maximum-likelihood tree: maximum spanning tree of the complete graph
/// weighted by pairwise mutual information (Kruskal + union-find).
/// Ties break deterministically by lexicographic edge order, so the
/// equicorrelated case yields the star at vertex 0.
TreeStructure chow_liu_tree(const CorrelationMatrix& sigma);

}  // namespace camsel

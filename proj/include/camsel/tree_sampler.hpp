#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "camsel/graph_model.hpp"
#include "camsel/matrix_core.hpp"

namespace camsel {

/// Per-tree quality metrics over a tree collection.
struct TreeMetrics {
  double kl = 0.0;
  double auc = 0.0;
  double log10_one_minus_auc = 0.0;
};

struct TreeEnsemble {
  std::vector<TreeStructure> trees;
  std::vector<TreeMetrics> metrics;  // parallel to trees
  int skipped = 0;                   // trees dropped for numerical failures
  std::vector<std::string> skip_reasons;
};

/// Exactly uniform spanning tree of the complete graph on n vertices,
/// by loop-erased random walk.
TreeStructure uniform_spanning_tree(int n, std::uint64_t seed);
TreeStructure uniform_spanning_tree(int n, std::mt19937_64& rng);

/// All n^{n-2} labeled spanning trees, each exactly once, by decoding
/// every Prufer sequence. Throws TooLarge for n > 8.
std::vector<TreeStructure> enumerate_spanning_trees(int n);

/// Edge-swap Metropolis chain with uniform target: remove a random tree
/// edge, reconnect the two components with a random crossing edge.
/// Burn-in 10*n steps, thinning n. Provided for comparison with the
/// exact sampler.
std::vector<TreeStructure> mcmc_spanning_trees(int n, int count,
                                               std::uint64_t seed);

/// Runs covariance selection, spectrum, KL and exact AUC per tree.
/// Trees whose pipeline fails are skipped and counted.
TreeEnsemble ensemble_metrics(const CorrelationMatrix& sigma,
                              const std::vector<TreeStructure>& trees);

/// CSV with header "tree_id,edges,kl,auc,log10_one_minus_auc";
/// edges encoded as "u-v;u-v;...".
std::string ensemble_to_csv(const TreeEnsemble& ensemble);

}  // namespace camsel

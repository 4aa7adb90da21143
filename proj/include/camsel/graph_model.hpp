#pragma once

#include <string>
#include <utility>
#include <vector>

#include "camsel/matrix_core.hpp"

namespace camsel {

using Edge = std::pair<int, int>;  // stored with first < second

/// Undirected edge set over n vertices. No self-loops, no duplicates.
class EdgeSet {
 public:
  EdgeSet(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(int u, int v) const;
  bool is_spanning_tree() const;

 protected:
  int n_;
  std::vector<Edge> edges_;
};

/// An EdgeSet that is verified to be a spanning tree (n-1 edges, connected).
class TreeStructure : public EdgeSet {
 public:
  TreeStructure(int n, std::vector<Edge> edges);
  explicit TreeStructure(const EdgeSet& es);
};

/// Result of Dempster covariance selection: the unique model covariance
/// matching Sigma_X on the diagonal and on in-structure entries, with
/// zero precision entries elsewhere. The selection rules are only
/// guaranteed when the structure is a tree; for cyclic structures the
/// recursion output is returned as-is and verify_selection_rules reports
/// the violations.
struct ModelCovariance {
  Eigen::MatrixXd mat;
  EdgeSet structure;
  // log|Sigma_{X_r}| after each edge addition (index 0 = diagonal start).
  // Monotone nonincreasing.
  std::vector<double> step_logdets;

  // Validates the matrix as a correlation matrix. Always succeeds for
  // tree structures.
  CorrelationMatrix correlation() const;
};

/// Per-rule maximum violations, for assertions.
struct SelectionRuleReport {
  double max_diagonal = 0.0;      // |Sigma_M(i,i) - Sigma_X(i,i)|
  double max_in_structure = 0.0;  // |Sigma_M(i,j) - Sigma_X(i,j)|, (i,j) in E
  double max_inverse_zero = 0.0;  // |Sigma_M^{-1}(i,j)|, (i,j) not in E
};

/// Builds the model covariance by the edge-by-edge precision update,
/// starting from diag(Sigma_X). For trees the result is independent of the
/// edge order.
ModelCovariance covariance_select(const CorrelationMatrix& sigma,
                                  const EdgeSet& structure);

/// Closed-form tree construction: each entry is the product of edge
/// correlations along the unique path. Independent oracle for
/// covariance_select on trees.
ModelCovariance tree_path_product(const CorrelationMatrix& sigma,
                                  const TreeStructure& tree);

SelectionRuleReport verify_selection_rules(const CorrelationMatrix& sigma,
                                           const ModelCovariance& model);

/// Parses the edge-list text format: one "u,v" pair per line, 0-based,
/// '#' comments and blank lines ignored.
EdgeSet parse_edge_list(const std::string& text, int n);
EdgeSet load_edge_list(const std::string& path, int n);

}  // namespace camsel

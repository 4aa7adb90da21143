#include "camsel/graph_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace camsel {

namespace {

// Minimal union-find for connectivity checks.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

EdgeSet::EdgeSet(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw InvalidStructure("vertex count must be positive");
  std::set<Edge> seen;
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw InvalidStructure("self-loop at vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidStructure("edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw InvalidStructure("duplicate edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
    }
  }
  edges_ = std::move(edges);
}

bool EdgeSet::contains(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges_.begin(), edges_.end(), Edge{u, v}) != edges_.end();
}

bool EdgeSet::is_spanning_tree() const {
  if (static_cast<int>(edges_.size()) != n_ - 1) return false;
  UnionFind uf(n_);
  for (const auto& [u, v] : edges_) {
    if (!uf.unite(u, v)) return false;
  }
  return true;
}

TreeStructure::TreeStructure(int n, std::vector<Edge> edges)
    : EdgeSet(n, std::move(edges)) {
  if (!is_spanning_tree()) {
    throw InvalidStructure("edge set is not a spanning tree on " +
                           std::to_string(n) + " vertices");
  }
}

TreeStructure::TreeStructure(const EdgeSet& es)
    : TreeStructure(es.vertex_count(), es.edges()) {}

ModelCovariance covariance_select(const CorrelationMatrix& sigma,
                                  const EdgeSet& structure) {
  const int n = sigma.dim();
  if (structure.vertex_count() != n) {
    throw DimensionMismatch("structure is over " +
                            std::to_string(structure.vertex_count()) +
                            " vertices, matrix is " + std::to_string(n));
  }
  const Eigen::MatrixXd& S = sigma.mat();

  // Precision-domain recursion starting from diag(Sigma_X)^{-1} = I.
  Eigen::MatrixXd J = Eigen::MatrixXd::Identity(n, n);
  std::vector<double> step_logdets;
  step_logdets.reserve(structure.edges().size() + 1);
  step_logdets.push_back(0.0);  // log|diag| = 0 for a correlation matrix

  for (const auto& [i, j] : structure.edges()) {
    const double rho = S(i, j);
    const double det2 = 1.0 - rho * rho;
    if (det2 <= 0.0) {
      throw SingularSubmatrix("|rho| >= 1 on edge (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
    }
    // J += [e_i e_j] Sigma_{ij}^{-1} [e_i e_j]^T - e_i e_i^T - e_j e_j^T
    J(i, i) += 1.0 / det2 - 1.0;
    J(j, j) += 1.0 / det2 - 1.0;
    J(i, j) -= rho / det2;
    J(j, i) -= rho / det2;

    // log|Sigma_{X_r}| = -log|J_r|; each edge contributes log(1 - rho^2)
    step_logdets.push_back(step_logdets.back() + std::log(det2));
  }

  Eigen::LLT<Eigen::MatrixXd> llt(J);
  if (llt.info() != Eigen::Success) {
    throw SingularSubmatrix("model precision matrix is not positive definite");
  }
  Eigen::MatrixXd M = llt.solve(Eigen::MatrixXd::Identity(n, n));
  M = 0.5 * (M + M.transpose()).eval();
  // Clamp rounding noise on the diagonal; genuine deviations (possible for
  // cyclic structures) are kept so verify_selection_rules can see them.
  for (int i = 0; i < n; ++i) {
    if (std::abs(M(i, i) - 1.0) <= 1e-11) M(i, i) = 1.0;
  }

  return ModelCovariance{std::move(M), structure, std::move(step_logdets)};
}

CorrelationMatrix ModelCovariance::correlation() const {
  return CorrelationMatrix::validate(mat);
}

ModelCovariance tree_path_product(const CorrelationMatrix& sigma,
                                  const TreeStructure& tree) {
  const int n = sigma.dim();
  if (tree.vertex_count() != n) {
    throw DimensionMismatch("tree size does not match matrix dimension");
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : tree.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
  // BFS from each root; the product accumulates along the unique path.
  for (int root = 0; root < n; ++root) {
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    visited[root] = 1;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = 1;
        M(root, v) = M(root, u) * sigma(u, v);
        q.push(v);
      }
    }
  }
  M = (0.5 * (M + M.transpose())).eval();
  std::vector<double> logdets{0.0};
  for (const auto& [u, v] : tree.edges()) {
    logdets.push_back(logdets.back() +
                      std::log(1.0 - sigma(u, v) * sigma(u, v)));
  }
  return ModelCovariance{std::move(M), tree, std::move(logdets)};
}

SelectionRuleReport verify_selection_rules(const CorrelationMatrix& sigma,
                                           const ModelCovariance& model) {
  const int n = sigma.dim();
  if (model.mat.rows() != n) {
    throw DimensionMismatch("model dimension does not match sigma");
  }
  const Eigen::MatrixXd& S = sigma.mat();
  const Eigen::MatrixXd& M = model.mat;
  Eigen::MatrixXd P = M.llt().solve(Eigen::MatrixXd::Identity(n, n));

  SelectionRuleReport r;
  for (int i = 0; i < n; ++i) {
    r.max_diagonal = std::max(r.max_diagonal, std::abs(M(i, i) - S(i, i)));
    for (int j = i + 1; j < n; ++j) {
      if (model.structure.contains(i, j)) {
        r.max_in_structure =
            std::max(r.max_in_structure, std::abs(M(i, j) - S(i, j)));
      } else {
        r.max_inverse_zero = std::max(r.max_inverse_zero, std::abs(P(i, j)));
      }
    }
  }
  return r;
}

EdgeSet parse_edge_list(const std::string& text, int n) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    int u = 0, v = 0;
    char comma = 0;
    std::istringstream ls(line);
    if (!(ls >> u >> comma >> v) || comma != ',') {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"u,v\", got \"" + line + "\"");
    }
    std::string rest;
    if (ls >> rest) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": trailing content \"" + rest + "\"");
    }
    edges.emplace_back(u, v);
  }
  return EdgeSet(n, std::move(edges));
}

EdgeSet load_edge_list(const std::string& path, int n) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_edge_list(ss.str(), n);
}

}  // namespace camsel

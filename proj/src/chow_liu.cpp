#include "camsel/chow_liu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace camsel {

double mutual_info_weight(double rho) {
  if (std::abs(rho) >= 1.0) {
    throw DegenerateCorrelation("|rho| = " + std::to_string(std::abs(rho)));
  }
  return -0.5 * std::log1p(-rho * rho);
}

TreeStructure chow_liu_tree(const CorrelationMatrix& sigma) {
  const int n = sigma.dim();
  if (n < 2) throw InvalidStructure("need at least 2 vertices");

  std::vector<WeightedEdge> all;
  all.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      all.push_back({u, v, mutual_info_weight(sigma(u, v))});
    }
  }
  // Weight descending; ties broken by lexicographic edge order so the
  // result is deterministic.
  std::stable_sort(all.begin(), all.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) {
                     if (a.weight != b.weight) return a.weight > b.weight;
                     return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                   });

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<Edge> picked;
  picked.reserve(n - 1);
  for (const auto& e : all) {
    int ru = find(e.u), rv = find(e.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    picked.emplace_back(e.u, e.v);
    if (static_cast<int>(picked.size()) == n - 1) break;
  }
  return TreeStructure(n, std::move(picked));
}

}  // namespace camsel

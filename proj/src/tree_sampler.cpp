#include "camsel/tree_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "camsel/divergences.hpp"
#include "camsel/spectral_auc.hpp"

namespace camsel {

namespace {

std::vector<Edge> lerw_tree(int n, std::mt19937_64& rng) {
  // Wilson's algorithm on the complete graph: start from vertex 0, then
  // run a loop-erased random walk from each unvisited vertex.
  std::vector<bool> in_tree(n, false);
  std::vector<int> next(n, -1);
  in_tree[0] = true;
  std::uniform_int_distribution<int> pick(0, n - 1);

  for (int start = 1; start < n; ++start) {
    if (in_tree[start]) continue;
    int u = start;
    while (!in_tree[u]) {
      int v = pick(rng);
      while (v == u) v = pick(rng);
      next[u] = v;
      u = v;
    }
    for (int w = start; !in_tree[w]; w = next[w]) in_tree[w] = true;
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(std::min(v, next[v]), std::max(v, next[v]));
  }
  return edges;
}

std::vector<Edge> prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Smallest-leaf pointer scan: O(n) per tree.
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      while (deg[++ptr] != 1) {}
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

TreeStructure uniform_spanning_tree(int n, std::mt19937_64& rng) {
  if (n < 2) throw OutOfDomain("n must be at least 2");
  return TreeStructure(n, lerw_tree(n, rng));
}

TreeStructure uniform_spanning_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return uniform_spanning_tree(n, rng);
}

std::vector<TreeStructure> enumerate_spanning_trees(int n) {
  if (n < 2) throw OutOfDomain("n must be at least 2");
  if (n > 8) throw TooLarge("enumeration limited to n <= 8");
  if (n == 2) return {TreeStructure(2, {{0, 1}})};

  std::vector<TreeStructure> trees;
  std::vector<int> seq(n - 2, 0);
  const std::int64_t total =
      static_cast<std::int64_t>(std::llround(std::pow(n, n - 2)));
  trees.reserve(total);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (int i = 0; i < n - 2; ++i) {
      seq[i] = static_cast<int>(c % n);
      c /= n;
    }
    trees.emplace_back(n, prufer_decode(n, seq));
  }
  return trees;
}

std::vector<TreeStructure> mcmc_spanning_trees(int n, int count,
                                               std::uint64_t seed) {
  if (n < 2) throw OutOfDomain("n must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<Edge> current = lerw_tree(n, rng);
  std::uniform_int_distribution<int> pick_edge(0, n - 2);
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);

  auto step = [&] {
    // Remove a random tree edge, splitting into components A and B, then
    // reconnect with a uniformly random crossing edge. Uniform target:
    // every tree has the same number of (removal, reinsertion) moves.
    const int drop = pick_edge(rng);
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < n - 1; ++e) {
      if (e == drop) continue;
      adj[current[e].first].push_back(current[e].second);
      adj[current[e].second].push_back(current[e].first);
    }
    std::vector<char> in_a(n, 0);
    std::vector<int> stack{current[drop].first};
    in_a[current[drop].first] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!in_a[v]) {
          in_a[v] = 1;
          stack.push_back(v);
        }
      }
    }
    int u, v;
    do {
      u = pick_vertex(rng);
      v = pick_vertex(rng);
    } while (u == v || in_a[u] == in_a[v]);
    current[drop] = {std::min(u, v), std::max(u, v)};
  };

  for (int i = 0; i < 10 * n; ++i) step();
  std::vector<TreeStructure> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    for (int i = 0; i < n; ++i) step();
    out.emplace_back(n, current);
  }
  return out;
}

TreeEnsemble ensemble_metrics(const CorrelationMatrix& sigma,
                              const std::vector<TreeStructure>& trees) {
  TreeEnsemble out;
  out.trees.reserve(trees.size());
  out.metrics.reserve(trees.size());
  for (const TreeStructure& tree : trees) {
    try {
      const ModelCovariance mc = covariance_select(sigma, tree);
      const CamSpectrum s = cam_spectrum(cam(sigma, mc.correlation()));
      TreeMetrics m;
      m.kl = divergences_from_spectrum(s).kl;
      m.auc = auc_exact(s);
      m.log10_one_minus_auc =
          m.auc < 1.0 ? std::log10(1.0 - m.auc)
                      : -std::numeric_limits<double>::infinity();
      out.trees.push_back(tree);
      out.metrics.push_back(m);
    } catch (const Error& e) {
      ++out.skipped;
      out.skip_reasons.emplace_back(e.what());
    }
  }
  return out;
}

std::string ensemble_to_csv(const TreeEnsemble& ensemble) {
  std::string out = "tree_id,edges,kl,auc,log10_one_minus_auc\n";
  char buf[128];
  for (std::size_t i = 0; i < ensemble.trees.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    const auto& edges = ensemble.trees[i].edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (e) out += ';';
      out += std::to_string(edges[e].first);
      out += '-';
      out += std::to_string(edges[e].second);
    }
    const TreeMetrics& m = ensemble.metrics[i];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g\n", m.kl, m.auc,
                  m.log10_one_minus_auc);
    out += buf;
  }
  return out;
}

}  // namespace camsel

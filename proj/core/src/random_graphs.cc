#include "tiling_disc/random_graphs.h"

#include <algorithm>

namespace tiling_disc {

Graph random_subgraph(const Graph& host, double p, Rng& rng) {
  std::vector<Edge> kept;
  for (const Edge& e : host.edges()) {
    if (rng.bernoulli(p)) kept.push_back(e);
  }
  return Graph(host.order(), kept);
}

EdgeLabeling random_labeling(const Graph& g, Rng& rng) {
  return EdgeLabeling(g, [&rng](Vertex, Vertex) { return rng.below(2) ? 1 : -1; });
}

std::optional<Graph> min_degree_subgraph(const Graph& host, int target, Rng& rng,
                                         int patience) {
  if (min_degree(host) < target) return std::nullopt;
  if (target <= 0) return random_subgraph(host, 0.5, rng);
  int max_degree = 0;
  for (Vertex v = 0; v < host.order(); ++v) max_degree = std::max(max_degree, host.degree(v));
  double p = 0.5 * (1.0 + static_cast<double>(target) / max_degree);
  for (int rejected = 0;; ++rejected) {
    if (rejected > 0 && rejected % patience == 0) p = 0.5 * (1.0 + p);
    // After ~60 halvings p rounds to 1 and the host itself is returned.
    Graph g = random_subgraph(host, p, rng);
    if (min_degree(g) >= target) return g;
  }
}

}  // namespace tiling_disc

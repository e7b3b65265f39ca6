#ifndef TILING_DISC_RANDOM_GRAPHS_H_
#define TILING_DISC_RANDOM_GRAPHS_H_

#include <optional>

#include "tiling_disc/graph.h"
#include "tiling_disc/labeling.h"
#include "tiling_disc/rng.h"

namespace tiling_disc {

// Keeps each edge of host independently with probability p.
Graph random_subgraph(const Graph& host, double p, Rng& rng);

inline Graph erdos_renyi(int n, double p, Rng& rng) {
  return random_subgraph(Graph::complete(n), p, rng);
}

// Independent uniform +-1 labels.
EdgeLabeling random_labeling(const Graph& g, Rng& rng);

// Rejection sampling of random_subgraph(host, p) conditioned on
// min_degree >= target. Starts at p = (1 + target / maxdeg) / 2 and, after
// every `patience` rejections, halves the distance from p to 1. Returns
// nullopt only if the host itself misses the target.
std::optional<Graph> min_degree_subgraph(const Graph& host, int target, Rng& rng,
                                         int patience = 50);

}  // namespace tiling_disc

#endif  // TILING_DISC_RANDOM_GRAPHS_H_

#include "tiling_disc/graph.h"

#include <algorithm>
#include <limits>
#include <string>

#include "tiling_disc/errors.h"

namespace tiling_disc {

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), rows_(n, VertexSet(n)), degrees_(n, 0) {
  if (n < 0) throw ParameterError("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw ParameterError("edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v) + " outside [0, " +
                           std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    }
    if (rows_[e.u].contains(e.v)) continue;
    rows_[e.u].insert(e.v);
    rows_[e.v].insert(e.u);
    ++degrees_[e.u];
    ++degrees_[e.v];
    ++m_;
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

Graph Graph::complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 0) throw ParameterError("negative part size");
    part_of.insert(part_of.end(), part_sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = rows_[a].next(a + 1); b >= 0; b = rows_[a].next(b + 1)) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Clique::Clique(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw ParameterError("clique with a repeated vertex");
  }
}

bool Clique::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Edge> Clique::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

void extend(const Graph& g, const VertexSet& candidates, int need,
            std::vector<Vertex>& chosen, std::span<const Vertex> base,
            std::vector<Clique>& out) {
  if (need == 0) {
    std::vector<Vertex> all(base.begin(), base.end());
    all.insert(all.end(), chosen.begin(), chosen.end());
    out.emplace_back(std::move(all));
    return;
  }
  if (candidates.count() < need) return;
  for (Vertex u = candidates.first(); u >= 0; u = candidates.next(u + 1)) {
    VertexSet next = candidates;
    next &= g.neighbors(u);
    next.clear_through(u);
    chosen.push_back(u);
    extend(g, next, need - 1, chosen, base, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Clique> cliques_of_size(const Graph& g, int r,
                                    std::span<const Vertex> containing) {
  if (r < 1 || r > g.order()) {
    throw ParameterError("clique size " + std::to_string(r) +
                         " outside [1, " + std::to_string(g.order()) + "]");
  }
  std::vector<Vertex> base(containing.begin(), containing.end());
  std::sort(base.begin(), base.end());
  if (std::adjacent_find(base.begin(), base.end()) != base.end()) return {};
  if (static_cast<int>(base.size()) > r || !is_clique(g, base)) return {};

  VertexSet candidates = VertexSet::full(g.order());
  for (Vertex v : base) {
    candidates &= g.neighbors(v);
  }
  std::vector<Clique> out;
  std::vector<Vertex> chosen;
  extend(g, candidates, r - static_cast<int>(base.size()), chosen, base, out);
  std::sort(out.begin(), out.end());
  return out;
}

Tiling::Tiling(std::vector<Clique> tiles) : tiles_(std::move(tiles)) {
  std::sort(tiles_.begin(), tiles_.end());
}

bool is_perfect_tiling(const Graph& g, const Tiling& t, int r) {
  std::vector<char> covered(g.order(), 0);
  int total = 0;
  for (const Clique& c : t) {
    if (c.size() != r || !is_clique(g, c)) return false;
    for (Vertex v : c) {
      if (covered[v]) return false;
      covered[v] = 1;
      ++total;
    }
  }
  return total == g.order();
}

}  // namespace tiling_disc

#ifndef TILING_DISC_GRAPH_H_
#define TILING_DISC_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tiling_disc/vertex_set.h"

namespace tiling_disc {

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the dense vertex range [0, n). Immutable once
// built; adjacency rows are bitsets so neighbourhood intersections are
// word-parallel.
class Graph {
 public:
  Graph() = default;
  // Throws ParameterError on self-loops or endpoints outside [0, n).
  // Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }
  static Graph complete(int n);
  // Complete multipartite graph; class i occupies a consecutive index range.
  static Graph complete_multipartite(std::span<const int> part_sizes);

  int order() const { return n_; }
  std::int64_t size() const { return m_; }

  bool adjacent(Vertex a, Vertex b) const { return rows_[a].contains(b); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return degrees_[v]; }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const {
    return m_ == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
};

// 0 for the empty graph.
int min_degree(const Graph& g);

// A clique stored in canonical (ascending) vertex order. Construction only
// canonicalises; membership in a particular host is checked by is_clique().
class Clique {
 public:
  Clique() = default;
  // Throws ParameterError on repeated vertices.
  explicit Clique(std::vector<Vertex> vertices);
  Clique(std::initializer_list<Vertex> vertices)
      : Clique(std::vector<Vertex>(vertices)) {}

  int size() const { return static_cast<int>(vertices_.size()); }
  std::span<const Vertex> vertices() const { return vertices_; }
  Vertex operator[](int i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  bool contains(Vertex v) const;

  // Internal edges, lexicographic.
  std::vector<Edge> edges() const;

  friend auto operator<=>(const Clique&, const Clique&) = default;

 private:
  std::vector<Vertex> vertices_;
};

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
inline bool is_clique(const Graph& g, const Clique& c) {
  return is_clique(g, c.vertices());
}

// All r-cliques of g that contain every vertex of `containing`, in strictly
// increasing lexicographic order. Returns an empty list when `containing` is
// not itself a clique. Throws ParameterError unless 1 <= r <= order().
std::vector<Clique> cliques_of_size(const Graph& g, int r,
                                    std::span<const Vertex> containing = {});

// A set of pairwise vertex-disjoint cliques, kept sorted by canonical form.
class Tiling {
 public:
  Tiling() = default;
  explicit Tiling(std::vector<Clique> tiles);

  std::span<const Clique> tiles() const { return tiles_; }
  int size() const { return static_cast<int>(tiles_.size()); }
  auto begin() const { return tiles_.begin(); }
  auto end() const { return tiles_.end(); }

  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  std::vector<Clique> tiles_;
};

// True iff every tile is an r-clique of g, tiles are disjoint, and together
// they cover V(g).
bool is_perfect_tiling(const Graph& g, const Tiling& t, int r);

}  // namespace tiling_disc

#endif  // TILING_DISC_GRAPH_H_

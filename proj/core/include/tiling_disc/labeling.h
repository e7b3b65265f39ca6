#ifndef TILING_DISC_LABELING_H_
#define TILING_DISC_LABELING_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tiling_disc/graph.h"

namespace tiling_disc {

// A +-1 label on every edge of a fixed graph, and nowhere else.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  // Calls label_of(u, v) once per edge with u < v. Throws ParameterError if it
  // returns anything other than +1 or -1.
  EdgeLabeling(const Graph& g, const std::function<int(Vertex, Vertex)>& label_of);
  // Every edge labelled `value`.
  static EdgeLabeling constant(const Graph& g, int value);

  int order() const { return n_; }
  bool has_edge(Vertex a, Vertex b) const;
  // Throws DomainError when ab is not an edge.
  int label(Vertex a, Vertex b) const;
  // Unchecked lookup; 0 for non-edges.
  int raw(Vertex a, Vertex b) const { return signs_[a * n_ + b]; }

  // The graph whose edges form the domain.
  Graph support() const;

  std::vector<Vertex> plus_neighbors(Vertex v) const;
  std::vector<Vertex> minus_neighbors(Vertex v) const;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> signs_;  // n*n, symmetric
};

// Sum of labels over the given edges. Throws DomainError for an edge outside
// the labeling's domain.
std::int64_t discrepancy(const EdgeLabeling& f, std::span<const Edge> edges);
// Sum over the clique's internal edges.
std::int64_t discrepancy(const EdgeLabeling& f, const Clique& c);
// Sum over the internal edges of every tile.
std::int64_t discrepancy(const EdgeLabeling& f, const Tiling& t);

struct CliqueKind {
  enum class Tag { kAllPlus, kAllMinus, kPlusStar, kMinusStar, kOther };

  Tag tag = Tag::kOther;
  Vertex head = -1;  // set for the two star kinds

  friend bool operator==(const CliqueKind&, const CliqueKind&) = default;
};

std::string to_string(const CliqueKind& kind);

// Classifies a labelled clique as all-plus, all-minus, a +/- star (reporting
// its head) or other. Throws ParameterError for cliques on fewer than three
// vertices, where the star kinds coincide.
CliqueKind classify_clique(const EdgeLabeling& f, const Clique& c);

// Checks f(ab) + f(cd) == f(ac) + f(bd) for every four distinct vertices of a
// complete host. Throws StructureError if the host is not complete and
// ParameterError if it has fewer than four vertices.
bool swap_identity_holds(const EdgeLabeling& f);

}  // namespace tiling_disc

#endif  // TILING_DISC_LABELING_H_

#include "tiling_disc/labeling.h"

#include <string>

#include "tiling_disc/errors.h"

namespace tiling_disc {

EdgeLabeling::EdgeLabeling(const Graph& g,
                           const std::function<int(Vertex, Vertex)>& label_of)
    : n_(g.order()), signs_(static_cast<std::size_t>(n_) * n_, 0) {
  for (const Edge& e : g.edges()) {
    const int s = label_of(e.u, e.v);
    if (s != 1 && s != -1) {
      throw ParameterError("label " + std::to_string(s) + " on edge " +
                           std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " is not +1 or -1");
    }
    signs_[e.u * n_ + e.v] = static_cast<std::int8_t>(s);
    signs_[e.v * n_ + e.u] = static_cast<std::int8_t>(s);
  }
}

EdgeLabeling EdgeLabeling::constant(const Graph& g, int value) {
  return EdgeLabeling(g, [value](Vertex, Vertex) { return value; });
}

bool EdgeLabeling::has_edge(Vertex a, Vertex b) const {
  return a >= 0 && b >= 0 && a < n_ && b < n_ && signs_[a * n_ + b] != 0;
}

int EdgeLabeling::label(Vertex a, Vertex b) const {
  if (!has_edge(a, b)) {
    throw DomainError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " is not in the labeling's domain");
  }
  return signs_[a * n_ + b];
}

Graph EdgeLabeling::support() const {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      if (signs_[a * n_ + b] != 0) edges.emplace_back(a, b);
    }
  }
  return Graph(n_, edges);
}

std::vector<Vertex> EdgeLabeling::plus_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w) {
    if (signs_[v * n_ + w] == 1) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> EdgeLabeling::minus_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w) {
    if (signs_[v * n_ + w] == -1) out.push_back(w);
  }
  return out;
}

std::int64_t discrepancy(const EdgeLabeling& f, std::span<const Edge> edges) {
  std::int64_t sum = 0;
  for (const Edge& e : edges) sum += f.label(e.u, e.v);
  return sum;
}

std::int64_t discrepancy(const EdgeLabeling& f, const Clique& c) {
  std::int64_t sum = 0;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) sum += f.label(c[i], c[j]);
  }
  return sum;
}

std::int64_t discrepancy(const EdgeLabeling& f, const Tiling& t) {
  std::int64_t sum = 0;
  for (const Clique& c : t) sum += discrepancy(f, c);
  return sum;
}

std::string to_string(const CliqueKind& kind) {
  switch (kind.tag) {
    case CliqueKind::Tag::kAllPlus:
      return "AllPlus";
    case CliqueKind::Tag::kAllMinus:
      return "AllMinus";
    case CliqueKind::Tag::kPlusStar:
      return "PlusStar(" + std::to_string(kind.head) + ")";
    case CliqueKind::Tag::kMinusStar:
      return "MinusStar(" + std::to_string(kind.head) + ")";
    case CliqueKind::Tag::kOther:
      break;
  }
  return "Other";
}

CliqueKind classify_clique(const EdgeLabeling& f, const Clique& c) {
  const int k = c.size();
  if (k < 3) {
    throw ParameterError("clique kinds need at least 3 vertices, got " +
                         std::to_string(k));
  }
  // plus_degree[i]: +1 edges at c[i] inside the clique.
  std::vector<int> plus_degree(k, 0);
  int plus_edges = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (f.label(c[i], c[j]) == 1) {
        ++plus_degree[i];
        ++plus_degree[j];
        ++plus_edges;
      }
    }
  }
  const int all_edges = k * (k - 1) / 2;
  if (plus_edges == all_edges) return {CliqueKind::Tag::kAllPlus, -1};
  if (plus_edges == 0) return {CliqueKind::Tag::kAllMinus, -1};
  // A star's k-1 edges all meet the head, so a vertex of full signed degree
  // carrying every edge of that sign is the head.
  if (plus_edges == k - 1) {
    for (int i = 0; i < k; ++i) {
      if (plus_degree[i] == k - 1) return {CliqueKind::Tag::kPlusStar, c[i]};
    }
  }
  if (all_edges - plus_edges == k - 1) {
    for (int i = 0; i < k; ++i) {
      if (plus_degree[i] == 0) return {CliqueKind::Tag::kMinusStar, c[i]};
    }
  }
  return {CliqueKind::Tag::kOther, -1};
}

bool swap_identity_holds(const EdgeLabeling& f) {
  const int k = f.order();
  if (k < 4) {
    throw ParameterError("swap identity needs at least 4 vertices, got " +
                         std::to_string(k));
  }
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      if (!f.has_edge(a, b)) {
        throw StructureError("swap identity needs a complete host; missing " +
                             std::to_string(a) + "-" + std::to_string(b));
      }
    }
  }
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      for (Vertex c = b + 1; c < k; ++c) {
        for (Vertex d = c + 1; d < k; ++d) {
          const int ab_cd = f.raw(a, b) + f.raw(c, d);
          const int ac_bd = f.raw(a, c) + f.raw(b, d);
          const int ad_bc = f.raw(a, d) + f.raw(b, c);
          if (ab_cd != ac_bd || ac_bd != ad_bc) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tiling_disc

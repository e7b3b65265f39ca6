// Brute-force reference implementations used to cross-check the library.
// Nothing here calls the clique or tiling search code.
#ifndef TILING_DISC_TESTS_ORACLE_H_
#define TILING_DISC_TESTS_ORACLE_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "tiling_disc/graph.h"
#include "tiling_disc/labeling.h"

namespace tiling_disc::oracle {

using Block = std::vector<int>;
using Partition = std::vector<Block>;

// Every partition of {0..n-1} into blocks of size r, blocks sorted by first
// vertex.
inline void for_each_partition(int n, int r, const std::function<void(const Partition&)>& fn) {
  std::vector<bool> used(n, false);
  Partition current;
  std::function<void()> rec = [&]() {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      fn(current);
      return;
    }
    std::vector<int> rest;
    for (int v = first + 1; v < n; ++v) {
      if (!used[v]) rest.push_back(v);
    }
    const int need = r - 1;
    if (static_cast<int>(rest.size()) < need) return;
    std::vector<bool> pick(rest.size(), false);
    std::fill(pick.begin(), pick.begin() + need, true);
    do {
      Block b{first};
      for (size_t i = 0; i < rest.size(); ++i) {
        if (pick[i]) b.push_back(rest[i]);
      }
      for (int v : b) used[v] = true;
      current.push_back(b);
      rec();
      current.pop_back();
      for (int v : b) used[v] = false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  };
  if (n % r == 0) rec();
}

inline bool block_is_clique(const std::vector<std::vector<bool>>& adj, const Block& b) {
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) {
      if (!adj[b[i]][b[j]]) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

// Partition-filter oracle: all r-partitions whose blocks are cliques.
inline std::set<Partition> perfect_tilings(const Graph& g, int r) {
  const auto adj = adjacency(g);
  std::set<Partition> out;
  for_each_partition(g.order(), r, [&](const Partition& p) {
    for (const Block& b : p) {
      if (!block_is_clique(adj, b)) return;
    }
    out.insert(p);
  });
  return out;
}

inline std::int64_t block_sum(const std::vector<std::vector<int>>& labels, const Block& b) {
  std::int64_t s = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) s += labels[b[i]][b[j]];
  }
  return s;
}

inline Partition to_partition(const Tiling& t) {
  Partition p;
  for (const Clique& c : t) p.emplace_back(c.begin(), c.end());
  std::sort(p.begin(), p.end());
  return p;
}

// Direct check of f(ab)+f(cd) = f(ac)+f(bd) over ordered quadruples of
// distinct vertices.
inline bool swap_identity(const std::vector<std::vector<int>>& f) {
  const int k = static_cast<int>(f.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (f[a][b] + f[c][d] != f[a][c] + f[b][d]) return false;
        }
  return true;
}

// Label matrix of the complete graph K_k from the bits of `mask`, one bit per
// pair in lexicographic order; a set bit means +1.
inline std::vector<std::vector<int>> labels_from_mask(int k, std::uint64_t mask) {
  std::vector<std::vector<int>> f(k, std::vector<int>(k, 0));
  int bit = 0;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b, ++bit) {
      f[a][b] = f[b][a] = ((mask >> bit) & 1) ? 1 : -1;
    }
  }
  return f;
}

inline EdgeLabeling to_labeling(const std::vector<std::vector<int>>& f) {
  const int k = static_cast<int>(f.size());
  return EdgeLabeling(Graph::complete(k), [&](Vertex a, Vertex b) { return f[a][b]; });
}

}  // namespace tiling_disc::oracle

#endif  // TILING_DISC_TESTS_ORACLE_H_

#ifndef TILING_DISC_SOLVER_H_
#define TILING_DISC_SOLVER_H_

#include <cstdint>
#include <functional>
#include <optional>

#include "tiling_disc/graph.h"
#include "tiling_disc/labeling.h"

namespace tiling_disc {

// A tiling under construction, viewed without copying: tiles in placement
// order (the tile covering the lowest uncovered vertex first), each tile's
// vertices ascending.
class TilingView {
 public:
  TilingView(std::span<const Vertex> flat, int r) : flat_(flat), r_(r) {}

  int size() const { return static_cast<int>(flat_.size()) / r_; }
  std::span<const Vertex> tile(int i) const { return flat_.subspan(i * r_, r_); }
  Tiling to_tiling() const;

 private:
  std::span<const Vertex> flat_;
  int r_;
};

using TilingVisitor = std::function<void(const TilingView&)>;

// Calls visit once per perfect K_r-tiling of g, branching on the lowest
// uncovered vertex and trying its r-cliques in lexicographic order. Returns
// the number of tilings. Throws ParameterError unless r >= 1 and r | n.
std::uint64_t enumerate_perfect_tilings(const Graph& g, int r,
                                        const TilingVisitor& visit);

std::uint64_t count_perfect_tilings(const Graph& g, int r);

enum class SearchMode { kExhaustive, kBranchAndBound };

struct SolverOptions {
  // Worker threads for splitting the first branching level; 0 picks
  // default_thread_count().
  int threads = 1;
  // Abort with BudgetExceeded after this many search nodes; 0 is unlimited.
  std::uint64_t node_limit = 0;
};

// std::thread::hardware_concurrency(), capped by TILING_DISC_THREADS.
int default_thread_count();

struct DiscrepancyExtremes {
  std::int64_t min_disc = 0;
  std::int64_t max_disc = 0;
  Tiling witness_min;
  Tiling witness_max;
  // Number of perfect tilings; only known in exhaustive mode.
  std::optional<std::uint64_t> tilings_seen;

  std::int64_t max_abs() const {
    return std::max(min_disc < 0 ? -min_disc : min_disc,
                    max_disc < 0 ? -max_disc : max_disc);
  }
};

// Exact minimum and maximum discrepancy over all perfect K_r-tilings. Both
// modes return the first witness in enumeration order achieving each value,
// independent of the thread count. Throws ParameterError when r does not
// divide n and InfeasibleError when no perfect tiling exists.
DiscrepancyExtremes discrepancy_extremes(const Graph& g, const EdgeLabeling& f,
                                         int r, SearchMode mode,
                                         const SolverOptions& options = {});

// Short-circuiting existence check; false when r does not divide n.
bool exists_perfect_tiling(const Graph& g, int r);

// Randomized greedy: repeatedly take the lowest uncovered vertex and grow a
// clique around it from uniformly random extendable candidates among the
// uncovered vertices, restarting from scratch on a dead end. Deterministic for
// a fixed seed. nullopt once `restart_budget` restarts are spent (default
// 10n); that is not a proof of non-existence. Throws ParameterError unless
// r | n.
std::optional<Tiling> sample_tiling(const Graph& g, int r, std::uint64_t seed,
                                    std::optional<int> restart_budget = std::nullopt);

}  // namespace tiling_disc

#endif  // TILING_DISC_SOLVER_H_

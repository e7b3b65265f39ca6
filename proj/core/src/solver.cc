#include "tiling_disc/solver.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "tiling_disc/errors.h"
#include "tiling_disc/rng.h"

namespace tiling_disc {

Tiling TilingView::to_tiling() const {
  std::vector<Clique> tiles;
  tiles.reserve(size());
  for (int i = 0; i < size(); ++i) {
    auto t = tile(i);
    tiles.emplace_back(std::vector<Vertex>(t.begin(), t.end()));
  }
  return Tiling(std::move(tiles));
}

namespace {

void check_divisibility(const Graph& g, int r) {
  if (r < 1) throw ParameterError("tile size must be positive, got " + std::to_string(r));
  if (g.order() % r != 0) {
    throw ParameterError("tile size " + std::to_string(r) + " does not divide n=" +
                         std::to_string(g.order()));
  }
}

// Shared node budget across workers. Counts are flushed in batches so the
// atomic is not contended on every node.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes) {
    if (limit_ == 0) return;
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_) {
      throw BudgetExceeded("search exceeded the node budget of " +
                           std::to_string(limit_));
    }
  }
  bool unlimited() const { return limit_ == 0; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// Depth-first search over perfect tilings. Each level covers the lowest
// uncovered vertex v with an r-clique grown from N(v) in ascending order, so
// every tiling is produced exactly once and in a fixed order. A Policy decides
// what to do at leaves and whether to cut a subtree:
//
//   bool stop() const;                       abandon the whole search
//   bool prune(int64 disc, int tiles_left);  skip this subtree
//   void leaf(const TilingView&, int64 disc);
class TileSearch {
 public:
  TileSearch(const Graph& g, int r, const EdgeLabeling* f, NodeBudget* budget)
      : g_(g),
        r_(r),
        f_(f),
        budget_(budget),
        uncovered_(VertexSet::full(g.order())),
        cand_(g.order() + 2, VertexSet(g.order())) {
    flat_.reserve(g.order());
  }

  // Fixes a first tile; it must be a clique of uncovered vertices.
  void place(std::span<const Vertex> tile) {
    for (std::size_t i = 0; i < tile.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) disc_ += label(tile[i], tile[j]);
      flat_.push_back(tile[i]);
      uncovered_.erase(tile[i]);
    }
  }

  template <typename Policy>
  void run(Policy& policy) {
    tile_level(policy);
    flush();
  }

 private:
  int label(Vertex a, Vertex b) const { return f_ ? f_->raw(a, b) : 0; }

  void count_node() {
    if (++pending_ >= 4096) flush();
  }
  void flush() {
    if (budget_ && !budget_->unlimited() && pending_ > 0) budget_->charge(pending_);
    pending_ = 0;
  }

  template <typename Policy>
  void tile_level(Policy& policy) {
    count_node();
    const Vertex v = uncovered_.first();
    if (v < 0) {
      policy.leaf(TilingView(flat_, r_), disc_);
      return;
    }
    const int tiles_left = (uncovered_.count()) / r_;
    if (policy.prune(disc_, tiles_left)) return;

    flat_.push_back(v);
    if (r_ == 1) {
      uncovered_.erase(v);
      tile_level(policy);
      uncovered_.insert(v);
    } else {
      const int slot = static_cast<int>(flat_.size());
      cand_[slot].assign_and(uncovered_, g_.neighbors(v));
      grow(policy, slot, r_ - 1);
    }
    flat_.pop_back();
  }

  // cand_[slot] holds uncovered common neighbours of the partial tile that are
  // larger than its last vertex.
  template <typename Policy>
  void grow(Policy& policy, int slot, int need) {
    const VertexSet& cand = cand_[slot];
    int available = cand.count();
    const std::size_t tile_start = flat_.size() - (r_ - need);
    for (Vertex u = cand.first(); u >= 0 && available >= need;
         u = cand.next(u + 1), --available) {
      if (policy.stop()) return;
      std::int64_t gain = 0;
      if (f_) {
        for (std::size_t k = tile_start; k < flat_.size(); ++k) gain += f_->raw(u, flat_[k]);
      }
      flat_.push_back(u);
      disc_ += gain;
      if (need == 1) {
        for (std::size_t k = tile_start; k < flat_.size(); ++k) uncovered_.erase(flat_[k]);
        tile_level(policy);
        for (std::size_t k = tile_start; k < flat_.size(); ++k) uncovered_.insert(flat_[k]);
      } else {
        cand_[slot + 1].assign_and(cand, g_.neighbors(u));
        cand_[slot + 1].clear_through(u);
        grow(policy, slot + 1, need - 1);
      }
      disc_ -= gain;
      flat_.pop_back();
    }
  }

  const Graph& g_;
  int r_;
  const EdgeLabeling* f_;
  NodeBudget* budget_;
  VertexSet uncovered_;
  std::vector<VertexSet> cand_;
  std::vector<Vertex> flat_;
  std::int64_t disc_ = 0;
  std::uint64_t pending_ = 0;
};

struct VisitPolicy {
  const TilingVisitor* visit;
  std::uint64_t count = 0;

  bool stop() const { return false; }
  bool prune(std::int64_t, int) const { return false; }
  void leaf(const TilingView& view, std::int64_t) {
    ++count;
    if (*visit) (*visit)(view);
  }
};

struct ExistsPolicy {
  bool found = false;

  bool stop() const { return found; }
  bool prune(std::int64_t, int) const { return found; }
  void leaf(const TilingView&, std::int64_t) { found = true; }
};

// Tracks the first tiling (in search order) achieving each extreme.
struct ExtremesPolicy {
  std::uint64_t count = 0;
  std::int64_t min_disc = 0;
  std::int64_t max_disc = 0;
  std::vector<Vertex> witness_min;
  std::vector<Vertex> witness_max;

  bool stop() const { return false; }
  bool prune(std::int64_t, int) const { return false; }
  void leaf(const TilingView& view, std::int64_t disc) {
    if (count == 0 || disc < min_disc) {
      min_disc = disc;
      witness_min = flatten(view);
    }
    if (count == 0 || disc > max_disc) {
      max_disc = disc;
      witness_max = flatten(view);
    }
    ++count;
  }

  static std::vector<Vertex> flatten(const TilingView& view) {
    std::vector<Vertex> out;
    for (int i = 0; i < view.size(); ++i) {
      auto t = view.tile(i);
      out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }
};

// One oriented optimisation (sign = +1 maximises, -1 minimises). A subtree is
// cut when even an all-agreeing completion cannot strictly beat the incumbent,
// which keeps the reported witness equal to the first optimum in search order.
struct BoundPolicy {
  int sign = 1;
  std::int64_t per_tile = 0;  // C(r,2)
  bool have = false;
  std::int64_t best = 0;      // in oriented units
  std::vector<Vertex> witness;

  bool stop() const { return false; }
  bool prune(std::int64_t disc, int tiles_left) const {
    return have && sign * disc + tiles_left * per_tile <= best;
  }
  void leaf(const TilingView& view, std::int64_t disc) {
    if (!have || sign * disc > best) {
      have = true;
      best = sign * disc;
      witness = ExtremesPolicy::flatten(view);
    }
  }
};

Tiling tiling_from_flat(const std::vector<Vertex>& flat, int r) {
  return TilingView(flat, r).to_tiling();
}

// Runs task(i) for i in [0, count) on up to `threads` workers. The first
// exception (by index) is rethrown after all workers finish.
template <typename Task>
void run_branches(int count, int threads, Task task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int default_thread_count() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  if (const char* cap = std::getenv("TILING_DISC_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) threads = std::min(threads, limit);
  }
  return threads;
}

std::uint64_t enumerate_perfect_tilings(const Graph& g, int r,
                                        const TilingVisitor& visit) {
  check_divisibility(g, r);
  TileSearch search(g, r, nullptr, nullptr);
  VisitPolicy policy{&visit};
  search.run(policy);
  return policy.count;
}

std::uint64_t count_perfect_tilings(const Graph& g, int r) {
  return enumerate_perfect_tilings(g, r, TilingVisitor());
}

DiscrepancyExtremes discrepancy_extremes(const Graph& g, const EdgeLabeling& f,
                                         int r, SearchMode mode,
                                         const SolverOptions& options) {
  check_divisibility(g, r);
  if (f.order() != g.order()) {
    throw ParameterError("labeling and graph have different vertex counts");
  }
  for (const Edge& e : g.edges()) {
    if (!f.has_edge(e.u, e.v)) {
      throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " has no label");
    }
  }
  const int threads =
      options.threads > 0 ? options.threads : default_thread_count();
  NodeBudget budget(options.node_limit);

  // The first level of the search: every r-clique through vertex 0.
  std::vector<Clique> branches;
  if (g.order() > 0) {
    const Vertex zero[] = {0};
    branches = cliques_of_size(g, r, zero);
  }

  DiscrepancyExtremes out;
  bool found = false;

  if (g.order() == 0) {
    out.tilings_seen = mode == SearchMode::kExhaustive
                           ? std::optional<std::uint64_t>(1)
                           : std::nullopt;
    return out;
  }

  if (mode == SearchMode::kExhaustive) {
    std::vector<ExtremesPolicy> results(branches.size());
    run_branches(static_cast<int>(branches.size()), threads, [&](int i) {
      TileSearch search(g, r, &f, &budget);
      search.place(branches[i].vertices());
      search.run(results[i]);
    });
    std::uint64_t total = 0;
    for (auto& res : results) {
      if (res.count == 0) continue;
      total += res.count;
      if (!found || res.min_disc < out.min_disc) {
        out.min_disc = res.min_disc;
        out.witness_min = tiling_from_flat(res.witness_min, r);
      }
      if (!found || res.max_disc > out.max_disc) {
        out.max_disc = res.max_disc;
        out.witness_max = tiling_from_flat(res.witness_max, r);
      }
      found = true;
    }
    out.tilings_seen = total;
  } else {
    const std::int64_t per_tile = static_cast<std::int64_t>(r) * (r - 1) / 2;
    const int count = static_cast<int>(branches.size());
    std::vector<BoundPolicy> results(2 * count);
    run_branches(2 * count, threads, [&](int job) {
      const int i = job / 2;
      BoundPolicy& policy = results[job];
      policy.sign = job % 2 == 0 ? 1 : -1;
      policy.per_tile = per_tile;
      TileSearch search(g, r, &f, &budget);
      search.place(branches[i].vertices());
      search.run(policy);
    });
    bool have_max = false, have_min = false;
    for (int i = 0; i < count; ++i) {
      const BoundPolicy& hi = results[2 * i];
      const BoundPolicy& lo = results[2 * i + 1];
      if (hi.have && (!have_max || hi.best > out.max_disc)) {
        out.max_disc = hi.best;
        out.witness_max = tiling_from_flat(hi.witness, r);
        have_max = true;
      }
      if (lo.have && (!have_min || -lo.best < out.min_disc)) {
        out.min_disc = -lo.best;
        out.witness_min = tiling_from_flat(lo.witness, r);
        have_min = true;
      }
    }
    found = have_max && have_min;
  }
  if (!found) throw InfeasibleError("graph has no perfect K_" + std::to_string(r) + "-tiling");
  return out;
}

bool exists_perfect_tiling(const Graph& g, int r) {
  if (r < 1 || g.order() % r != 0) return false;
  TileSearch search(g, r, nullptr, nullptr);
  ExistsPolicy policy;
  search.run(policy);
  return policy.found;
}

namespace {

// Depth-first search for an r-clique extending `tile` inside `cand`, trying
// candidates in random order. Returns false when no extension exists.
bool random_clique(const Graph& g, const VertexSet& cand, int need,
                   std::vector<Vertex>& tile, Rng& rng) {
  if (need == 0) return true;
  std::vector<Vertex> order = cand.to_vector();
  if (static_cast<int>(order.size()) < need) return false;
  rng.shuffle(std::span<Vertex>(order));
  for (Vertex u : order) {
    VertexSet next = cand;
    next &= g.neighbors(u);
    next.erase(u);
    tile.push_back(u);
    if (random_clique(g, next, need - 1, tile, rng)) return true;
    tile.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Tiling> sample_tiling(const Graph& g, int r, std::uint64_t seed,
                                    std::optional<int> restart_budget) {
  check_divisibility(g, r);
  const int attempts = restart_budget.value_or(10 * g.order());
  Rng rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    VertexSet uncovered = VertexSet::full(g.order());
    std::vector<Clique> tiles;
    bool dead_end = false;
    for (Vertex v = uncovered.first(); v >= 0; v = uncovered.first()) {
      VertexSet cand = uncovered;
      cand &= g.neighbors(v);
      std::vector<Vertex> tile{v};
      if (!random_clique(g, cand, r - 1, tile, rng)) {
        dead_end = true;
        break;
      }
      for (Vertex u : tile) uncovered.erase(u);
      tiles.emplace_back(std::move(tile));
    }
    if (!dead_end) return Tiling(std::move(tiles));
  }
  return std::nullopt;
}

}  // namespace tiling_disc

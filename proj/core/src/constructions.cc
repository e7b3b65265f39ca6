#include "tiling_disc/constructions.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tiling_disc/errors.h"
#include "tiling_disc/rng.h"

namespace tiling_disc {
namespace {

// Lexicographically first `plus_count` pairs of K_k are +1, the rest -1.
std::vector<std::vector<int>> lex_pattern(int k, int plus_count) {
  std::vector<std::vector<int>> labels(k, std::vector<int>(k, 0));
  int assigned = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      labels[i][j] = labels[j][i] = assigned < plus_count ? 1 : -1;
      ++assigned;
    }
  }
  return labels;
}

ConstructionMeta balanced_meta(Family family, int r, int n, int classes) {
  ConstructionMeta meta;
  meta.family = family;
  meta.r = r;
  meta.n = n;
  const int size = n / classes;
  meta.parts.resize(classes);
  for (int c = 0; c < classes; ++c) {
    meta.parts[c].resize(size);
    std::iota(meta.parts[c].begin(), meta.parts[c].end(), c * size);
  }
  return meta;
}

void split_last_class(ConstructionMeta& meta, int x_size) {
  const auto& last = meta.parts.back();
  std::vector<Vertex> x(last.begin(), last.begin() + x_size);
  std::vector<Vertex> y(last.begin() + x_size, last.end());
  meta.special_split = std::make_pair(std::move(x), std::move(y));
}

Construction realize(ConstructionMeta meta) {
  std::vector<int> sizes(meta.num_classes(), meta.class_size());
  Graph g = Graph::complete_multipartite(sizes);
  const int last = meta.num_classes() - 1;
  EdgeLabeling f(g, [&meta, last](Vertex a, Vertex b) {
    const int ca = meta.class_of(a);
    const int cb = meta.class_of(b);
    if (meta.special_split && (ca == last || cb == last)) {
      const Vertex special = ca == last ? a : b;
      return meta.in_x(special) ? 1 : -1;
    }
    return meta.class_labels[ca][cb];
  });
  return Construction{std::move(g), std::move(f), std::move(meta)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::kMod03:
      return "mod03";
    case Family::kMod1:
      return "mod1";
    case Family::kMod2:
      return "mod2";
    case Family::kMatching:
      return "matching";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "mod03") return Family::kMod03;
  if (name == "mod1") return Family::kMod1;
  if (name == "mod2") return Family::kMod2;
  if (name == "matching") return Family::kMatching;
  throw ParameterError("unknown family '" + name + "'");
}

int ConstructionMeta::x_size() const {
  return special_split ? static_cast<int>(special_split->first.size()) : 0;
}
int ConstructionMeta::y_size() const {
  return special_split ? static_cast<int>(special_split->second.size()) : 0;
}

bool ConstructionMeta::in_x(Vertex v) const {
  if (!special_split || class_of(v) != num_classes() - 1) return false;
  return v - parts.back().front() < x_size();
}

bool ConstructionMeta::in_y(Vertex v) const {
  if (!special_split || class_of(v) != num_classes() - 1) return false;
  return v - parts.back().front() >= x_size();
}

std::string meta_line(const ConstructionMeta& meta) {
  std::ostringstream ss;
  ss << "family=" << to_string(meta.family) << " r=" << meta.r << " n=" << meta.n
     << " parts=";
  for (int c = 0; c < meta.num_classes(); ++c) {
    ss << (c ? "," : "") << meta.parts[c].size();
  }
  ss << " X=" << meta.x_size() << " Y=" << meta.y_size();
  return ss.str();
}

Construction extremal_mod03(int r, int n) {
  require(r >= 3 && (r % 4 == 0 || r % 4 == 3),
          "mod03 family needs r >= 3 with r = 0 or 3 (mod 4), got r=" +
              std::to_string(r));
  require(n > 0 && n % (r * (r + 1)) == 0,
          "mod03 family needs n divisible by r(r+1)=" + std::to_string(r * (r + 1)));
  ConstructionMeta meta = balanced_meta(Family::kMod03, r, n, r + 1);
  const int pairs = (r + 1) * r / 2;
  meta.class_labels = lex_pattern(r + 1, pairs / 2);
  return realize(std::move(meta));
}

Construction extremal_mod1(int m, int n) {
  require(m >= 1, "mod1 family needs m >= 1");
  const int r = 4 * m + 1;
  require(n > 0 && n % (2 * r * (r + 1)) == 0,
          "mod1 family needs n divisible by 2r(r+1)=" +
              std::to_string(2 * r * (r + 1)));
  ConstructionMeta meta = balanced_meta(Family::kMod1, r, n, r + 1);
  // Circulant on Z_r: cyclic distance 1..m is -1, m+1..2m is +1.
  meta.class_labels.assign(r + 1, std::vector<int>(r + 1, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int d = std::min(j - i, r - (j - i));
      meta.class_labels[i][j] = meta.class_labels[j][i] = d <= m ? -1 : 1;
    }
  }
  split_last_class(meta, n / (2 * (r + 1)));
  return realize(std::move(meta));
}

Construction extremal_mod2(int m, int n) {
  require(m >= 1, "mod2 family needs m >= 1");
  const int r = 4 * m + 2;
  require(n > 0 && n % (2 * r * (r + 1)) == 0,
          "mod2 family needs n divisible by 2r(r+1)=" +
              std::to_string(2 * r * (r + 1)));
  ConstructionMeta meta = balanced_meta(Family::kMod2, r, n, r + 1);
  const int pairs = r * (r - 1) / 2;
  auto pattern = lex_pattern(r, (pairs + 1) / 2);
  meta.class_labels.assign(r + 1, std::vector<int>(r + 1, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) meta.class_labels[i][j] = pattern[i][j];
  }
  split_last_class(meta, (r - 1) * n / (2 * r * (r + 1)));
  return realize(std::move(meta));
}

Construction matching_extremal(int n) {
  require(n >= 4 && n % 4 == 0, "matching family needs n >= 4 divisible by 4");
  ConstructionMeta meta = balanced_meta(Family::kMatching, 2, n, 4);
  meta.class_labels.assign(4, std::vector<int>(4, 0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) meta.class_labels[i][j] = 1;
    }
  }
  split_last_class(meta, 0);
  return realize(std::move(meta));
}

Construction make_construction(Family family, int param, int n) {
  switch (family) {
    case Family::kMod03:
      return extremal_mod03(param, n);
    case Family::kMod1:
      return extremal_mod1(param, n);
    case Family::kMod2:
      return extremal_mod2(param, n);
    case Family::kMatching:
      return matching_extremal(n);
  }
  throw ParameterError("unknown family");
}

Tiling canonical_tiling(const ConstructionMeta& meta, const Graph& g,
                        std::optional<std::uint64_t> shuffle_seed) {
  const int r = meta.r;
  const int classes = meta.num_classes();
  if (g.order() != meta.n || meta.n % r != 0 || r > classes) {
    throw StructureError("construction metadata does not match the graph");
  }
  std::vector<std::vector<Vertex>> pools = meta.parts;
  if (shuffle_seed) {
    Rng rng(*shuffle_seed);
    for (auto& pool : pools) rng.shuffle(std::span<Vertex>(pool));
  }
  // Consecutive windows of the cyclic class sequence use every class the same
  // number of times.
  std::vector<std::size_t> next(classes, 0);
  std::vector<Clique> tiles;
  const int tile_count = meta.n / r;
  tiles.reserve(tile_count);
  for (int t = 0; t < tile_count; ++t) {
    std::vector<Vertex> members;
    for (int k = 0; k < r; ++k) {
      const int c = (t * r + k) % classes;
      members.push_back(pools[c][next[c]++]);
    }
    tiles.emplace_back(std::move(members));
  }
  Tiling tiling(std::move(tiles));
  if (!is_perfect_tiling(g, tiling, r)) {
    throw StructureError("canonical tiling is not perfect; metadata is inconsistent");
  }
  return tiling;
}

TypeCensus type_census(const ConstructionMeta& meta, const Tiling& t) {
  TypeCensus census;
  const int last = meta.num_classes() - 1;
  std::vector<int> seen(meta.num_classes(), -1);
  int tile_index = 0;
  for (const Clique& c : t) {
    Vertex special = -1;
    for (Vertex v : c) {
      const int cls = meta.class_of(v);
      if (seen[cls] == tile_index) {
        throw StructureError("tile has two vertices in class " + std::to_string(cls));
      }
      seen[cls] = tile_index;
      if (cls == last) special = v;
    }
    if (special < 0) {
      ++census.t1;
    } else if (meta.in_y(special)) {
      ++census.t3;
    } else {
      ++census.t2;
    }
    ++tile_index;
  }
  return census;
}

std::int64_t census_discrepancy(const ConstructionMeta& meta, const Tiling& t) {
  const int k = meta.num_classes();
  std::vector<std::vector<std::int64_t>> pair_use(k, std::vector<std::int64_t>(k, 0));
  std::vector<int> classes;
  for (const Clique& c : t) {
    classes.clear();
    for (Vertex v : c) classes.push_back(meta.class_of(v));
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        ++pair_use[classes[a]][classes[b]];
      }
    }
  }
  std::int64_t sum = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) sum += meta.class_labels[i][j] * pair_use[i][j];
    }
  }
  if (meta.special_split) {
    const TypeCensus census = type_census(meta, t);
    sum += static_cast<std::int64_t>(meta.r - 1) * (census.t2 - census.t3);
  }
  return sum;
}

std::int64_t mod2_closed_form(const ConstructionMeta& meta) {
  if (meta.family != Family::kMod2) {
    throw ParameterError("closed form only defined for the mod2 family");
  }
  const std::int64_t r = meta.r;
  const std::int64_t n = meta.n;
  std::int64_t pattern = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) pattern += meta.class_labels[i][j];
  }
  const std::int64_t type1 = n / (r * (r + 1));
  const std::int64_t pair_share = (r - 2) * n / (r * (r + 1));
  return type1 * pattern + pair_share * pattern +
         (r - 1) * (meta.x_size() - meta.y_size());
}

}  // namespace tiling_disc

#ifndef TILING_DISC_CONSTRUCTIONS_H_
#define TILING_DISC_CONSTRUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiling_disc/graph.h"
#include "tiling_disc/labeling.h"

namespace tiling_disc {

// Labelled complete balanced multipartite graphs on which every perfect
// K_r-tiling has discrepancy exactly zero.
//
//   kMod03    r = 0, 3 (mod 4): blow-up of a half/half labelled K_{r+1}.
//   kMod1     r = 4m+1: K_r pattern with 2m-regular -1 part; the last class is
//             split into X (all +1) and Y (all -1), |X| = |Y|.
//   kMod2     r = 4m+2: K_r pattern with one more +1 pair than -1 pair;
//             |X| = (r-1)n / (2r(r+1)), |Y| = n / (2r).
//   kMatching r = 2 on the 4-partite Turan graph: edges at the last class -1.
enum class Family { kMod03, kMod1, kMod2, kMatching };

std::string to_string(Family f);
// Accepts "mod03", "mod1", "mod2", "matching". Throws ParameterError.
Family family_from_string(const std::string& name);

// Vertex layout: class c occupies a consecutive index range, classes in
// order; inside the last class X precedes Y.
struct ConstructionMeta {
  Family family = Family::kMod03;
  int r = 0;
  int n = 0;
  std::vector<std::vector<Vertex>> parts;
  // (X, Y) partition of the last class. For kMatching, X is empty and Y is the
  // whole last class.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> special_split;
  // Label between classes i != j; 0 where the label is decided by X/Y.
  std::vector<std::vector<int>> class_labels;

  int num_classes() const { return static_cast<int>(parts.size()); }
  int class_size() const { return parts.empty() ? 0 : static_cast<int>(parts[0].size()); }
  int class_of(Vertex v) const { return v / class_size(); }
  int x_size() const;
  int y_size() const;
  bool in_x(Vertex v) const;
  bool in_y(Vertex v) const;
};

// `meta family=<f> r=<r> n=<n> parts=<s1,s2,...> X=<|X|> Y=<|Y|>` without the
// leading "meta " token.
std::string meta_line(const ConstructionMeta& meta);

struct Construction {
  Graph graph;
  EdgeLabeling labeling;
  ConstructionMeta meta;
};

// Throw ParameterError when the divisibility preconditions fail.
Construction extremal_mod03(int r, int n);
Construction extremal_mod1(int m, int n);
Construction extremal_mod2(int m, int n);
Construction matching_extremal(int n);

// Dispatch by family; `param` is r for kMod03, m for kMod1/kMod2 and ignored
// for kMatching.
Construction make_construction(Family family, int param, int n);

// Perfect tiling that walks the classes cyclically, so tile t uses classes
// t*r, t*r+1, ..., t*r+r-1 (mod #classes). With r+1 classes this makes each
// class avoided by exactly n/(r(r+1)) tiles. The seed, when given, permutes
// vertices within each class.
Tiling canonical_tiling(const ConstructionMeta& meta, const Graph& g,
                        std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Type 1 tiles avoid the last class; type 2 tiles meet X and type 3 tiles
// meet Y. Without an X/Y split every tile meeting the last class counts as
// type 2.
struct TypeCensus {
  int t1 = 0;
  int t2 = 0;
  int t3 = 0;

  friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

// Throws StructureError if a tile has two vertices in one class.
TypeCensus type_census(const ConstructionMeta& meta, const Tiling& t);

// Discrepancy evaluated from the class-pair usage counts of the tiling and
// the census, never touching individual edge labels:
//   sum_{i<j} class_label(i,j) * #tiles meeting both classes
//   + (r-1) * (t2 - t3)
std::int64_t census_discrepancy(const ConstructionMeta& meta, const Tiling& t);

// The closed form of the mod-2 argument:
//   n/(r(r+1)) * disc(pattern) + (r-2)/r * n/(r+1) * disc(pattern)
//   + (r-1)(|X| - |Y|)
// which is 0 for the generated sizes. Only defined for kMod2.
std::int64_t mod2_closed_form(const ConstructionMeta& meta);

}  // namespace tiling_disc

#endif  // TILING_DISC_CONSTRUCTIONS_H_

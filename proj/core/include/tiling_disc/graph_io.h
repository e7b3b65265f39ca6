#ifndef TILING_DISC_GRAPH_IO_H_
#define TILING_DISC_GRAPH_IO_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "tiling_disc/graph.h"
#include "tiling_disc/labeling.h"

namespace tiling_disc {

// Contents of a text graph file:
//
//   g <n> <m> <r>
//   e <u> <v> <+1|-1>      (m lines, 0 <= u < v < n)
//   meta <key=value ...>   (optional construction sidecar)
//
// Lines starting with '#' and blank lines are ignored.
struct LabeledGraph {
  Graph graph;
  EdgeLabeling labeling;
  int r = 0;
  // Body of the sidecar line, without the leading "meta ".
  std::optional<std::string> meta;
};

// Throws FormatError on malformed input.
LabeledGraph read_graph(std::istream& in);
LabeledGraph read_graph_file(const std::string& path);

// Canonical form: header, then edges in lexicographic order, then the meta
// line if present. read_graph(write_graph(x)) reproduces x, and writing the
// result again is byte-identical.
void write_graph(std::ostream& out, const LabeledGraph& g);
std::string to_text(const LabeledGraph& g);

}  // namespace tiling_disc

#endif  // TILING_DISC_GRAPH_IO_H_

#include "tiling_disc/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "tiling_disc/errors.h"

namespace tiling_disc {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line_no) {
  long long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw FormatError(line_no, "expected an integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

LabeledGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0, r = 0;
  std::vector<Edge> edges;
  std::map<Edge, int> labels;
  std::optional<std::string> meta;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (toks[0] == "g") {
      if (have_header) throw FormatError(line_no, "second header line");
      if (toks.size() != 4) throw FormatError(line_no, "header needs g <n> <m> <r>");
      n = parse_int(toks[1], line_no);
      m = parse_int(toks[2], line_no);
      r = parse_int(toks[3], line_no);
      if (n < 0 || m < 0 || r < 0) {
        throw FormatError(line_no, "negative header field");
      }
      if (m > n * (n - 1) / 2) throw FormatError(line_no, "too many edges");
      have_header = true;
    } else if (toks[0] == "e") {
      if (!have_header) throw FormatError(line_no, "edge before header");
      if (meta) throw FormatError(line_no, "edge after meta line");
      if (toks.size() != 4) throw FormatError(line_no, "edge needs e <u> <v> <s>");
      const long long u = parse_int(toks[1], line_no);
      const long long v = parse_int(toks[2], line_no);
      if (!(0 <= u && u < v && v < n)) {
        throw FormatError(line_no, "edge endpoints must satisfy 0 <= u < v < n");
      }
      if (toks[3] != "+1" && toks[3] != "-1") {
        throw FormatError(line_no, "label must be +1 or -1, got '" + toks[3] + "'");
      }
      const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (labels.count(e)) throw FormatError(line_no, "duplicate edge");
      labels[e] = toks[3] == "+1" ? 1 : -1;
      edges.push_back(e);
    } else if (toks[0] == "meta") {
      if (!have_header) throw FormatError(line_no, "meta before header");
      if (meta) throw FormatError(line_no, "second meta line");
      const auto body = line.find_first_not_of(" \t", line.find("meta") + 4);
      meta = body == std::string::npos ? std::string() : line.substr(body);
    } else {
      throw FormatError(line_no, "unknown record '" + toks[0] + "'");
    }
  }
  if (!have_header) throw FormatError(std::max(line_no, 1), "missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError(line_no, "header announces " + std::to_string(m) +
                                   " edges, found " + std::to_string(edges.size()));
  }

  LabeledGraph out;
  out.graph = Graph(static_cast<int>(n), edges);
  out.labeling = EdgeLabeling(out.graph, [&labels](Vertex a, Vertex b) {
    return labels.at(Edge(a, b));
  });
  out.r = static_cast<int>(r);
  out.meta = std::move(meta);
  return out;
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << "g " << g.graph.order() << ' ' << g.graph.size() << ' ' << g.r << '\n';
  for (const Edge& e : g.graph.edges()) {
    out << "e " << e.u << ' ' << e.v << ' '
        << (g.labeling.label(e.u, e.v) == 1 ? "+1" : "-1") << '\n';
  }
  if (g.meta) out << "meta " << *g.meta << '\n';
}

std::string to_text(const LabeledGraph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

}  // namespace tiling_disc

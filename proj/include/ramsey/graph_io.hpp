#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

// Text format: a header line "n m", then m lines "u v" with u < v. Lines starting with
// '#' are comments. The writer emits edges in ascending lexicographic order so that
// equal graphs produce equal bytes.
inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_text(const Graph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      ++lineno;
      auto first = dst.find_first_not_of(" \t\r");
      if (first == std::string::npos || dst[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("graph text line " + std::to_string(lineno) + ": " + what);
  };

  if (!next_line(line)) fail("missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) fail("header must be 'n m'");
  }
  if (n < 0 || m < 0) fail("negative header value");
  if (static_cast<std::size_t>(n) > kMaxVertices) throw UnsupportedSize("graph text: n exceeds vertex cap");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) fail("edge line must be 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("edge endpoint out of range");
    if (u == v) fail("loop edge");
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) fail("duplicate edge");
    edges.push_back(e);
  }
  if (next_line(line)) fail("trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

inline Graph graph_from_text(const std::string& text) {
  std::istringstream s(text);
  return read_graph(s);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return read_graph(in);
}

inline void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
  write_graph(out, g);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ramsey

#pragma once

#include <random>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey::testing {

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Random graph with exactly `m` edges (m <= C(n,2)).
inline Graph random_graph_with_edges(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return Graph::from_edges(n, all);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges())
    edges.emplace_back(static_cast<Vertex>(e.u + a.n()), static_cast<Vertex>(e.v + a.n()));
  return Graph::from_edges(a.n() + b.n(), edges);
}

inline Graph remove_edge(const Graph& g, Edge drop) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e != drop) edges.push_back(e);
  return Graph::from_edges(g.n(), edges);
}

}  // namespace ramsey::testing

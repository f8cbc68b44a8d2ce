#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/error.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

// Largest vertex count any operation accepts.
inline constexpr std::size_t kMaxVertices = 4096;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 0..n-1 with one bit row per vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(check_size(n)), wpr_(words_for(n)), bits_(n * wpr_, 0) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      detail::require(e.u != e.v, "Graph: loops are not allowed");
      detail::require(e.v < n, "Graph: edge endpoint out of range");
      if (!g.adjacent(e.u, e.v)) {
        g.set(e.u, e.v);
        ++g.m_;
      }
    }
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.set(u, v);
    g.m_ = n * (n - (n > 0 ? 1 : 0)) / 2;
    return g;
  }

  // Builds from full rows; rows must already be symmetric with a clear diagonal.
  static Graph from_rows(std::size_t n, std::vector<Word> rows) {
    Graph g(n);
    detail::require(rows.size() == g.bits_.size(), "Graph::from_rows: row storage size mismatch");
    g.bits_ = std::move(rows);
    std::size_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      detail::require(!g.adjacent(v, v), "Graph::from_rows: loop present");
      total += popcount(g.row(v));
    }
    g.m_ = total / 2;
    return g;
  }

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::size_t words_per_row() const { return wpr_; }

  bool adjacent(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && ((bits_[u * wpr_ + v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  std::span<const Word> row(Vertex v) const { return {bits_.data() + v * wpr_, wpr_}; }
  VertexSet neighbours(Vertex v) const { return VertexSet::from_words(n_, row(v)); }
  std::size_t degree(Vertex v) const { return popcount(row(v)); }
  std::span<const Word> storage() const { return bits_; }

  // Edges in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for_each_bit(row(u), [&](Vertex v) {
        if (v > u) out.emplace_back(u, v);
      });
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n > kMaxVertices) throw UnsupportedSize("Graph: vertex count exceeds " + std::to_string(kMaxVertices));
    return n;
  }
  void set(Vertex u, Vertex v) {
    bits_[u * wpr_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    bits_[v * wpr_ + u / kWordBits] |= Word{1} << (u % kWordBits);
  }

  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> bits_;
};

inline Graph graph_union(const Graph& a, const Graph& b) {
  detail::require(a.n() == b.n(), "union: graphs have different vertex counts");
  std::vector<Word> rows(a.storage().begin(), a.storage().end());
  auto other = b.storage();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] |= other[i];
  return Graph::from_rows(a.n(), std::move(rows));
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] = vertex of the parent graph relabelled to i
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  detail::require(s.universe() == g.n(), "induced: vertex set universe differs from graph");
  InducedSubgraph out;
  out.original = s.to_vector();
  const std::size_t k = out.original.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(out.original[i], out.original[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = Graph::from_edges(k, edges);
  return out;
}

// Vertices outside s adjacent to every member of s.
inline VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  detail::require(s.universe() == g.n(), "common_neighborhood: universe mismatch");
  detail::require(!s.empty(), "common_neighborhood: empty vertex set");
  VertexSet out = VertexSet::full(g.n());
  s.for_each([&](Vertex v) { out.intersect_row(g.row(v)); });
  out -= s;
  return out;
}

// Edges with both endpoints in s (no relabelling).
inline std::size_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  s.for_each([&](Vertex v) {
    auto row = g.row(v);
    auto mask = s.words();
    for (std::size_t w = 0; w < row.size(); ++w) twice += static_cast<std::size_t>(std::popcount(row[w] & mask[w]));
  });
  return twice / 2;
}

// m >= gamma * n^2, compared exactly.
inline bool is_gamma_dense(const Graph& g, const Rational& gamma) {
  detail::require(gamma >= 0, "is_gamma_dense: gamma must be non-negative");
  const Rational n = static_cast<long long>(g.n());
  return Rational(static_cast<long long>(g.edge_count())) >= gamma * n * n;
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges(g.n(), edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite_graph(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v) edges.emplace_back(u, static_cast<Vertex>(left + v));
  return Graph::from_edges(left + right, edges);
}

}  // namespace ramsey

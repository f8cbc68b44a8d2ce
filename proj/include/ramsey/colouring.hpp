#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/cliques.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { Red = 0, Blue = 1 };

constexpr Colour opposite(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
constexpr int colour_code(Colour c) { return static_cast<int>(c); }
inline const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

// Colours indexed by position in a lexicographically sorted host edge list.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  EdgeColouring(std::vector<Edge> edges, std::vector<Colour> colours)
      : edges_(std::move(edges)), colours_(std::move(colours)) {
    detail::require(edges_.size() == colours_.size(), "EdgeColouring: edge and colour counts differ");
    detail::require(std::adjacent_find(edges_.begin(), edges_.end(), std::greater_equal<>()) == edges_.end(),
                    "EdgeColouring: host edges must be strictly increasing");
  }

  static EdgeColouring uniform(const Graph& g, Colour c) {
    auto edges = g.edges();
    std::vector<Colour> colours(edges.size(), c);
    return {std::move(edges), std::move(colours)};
  }

  // Independent fair coin per edge, lexicographic order, stream (seed, Colouring).
  static EdgeColouring random(const Graph& g, RngSeed seed) {
    RngStream rng(seed, Stream::Colouring);
    auto edges = g.edges();
    std::vector<Colour> colours(edges.size());
    for (auto& c : colours) c = (rng.next_u64() >> 63) ? Colour::Blue : Colour::Red;
    return {std::move(edges), std::move(colours)};
  }

  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Colour>& colours() const { return colours_; }
  Colour colour(std::size_t index) const { return colours_.at(index); }

  std::optional<std::size_t> index_of(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }
  Colour colour_of(Vertex a, Vertex b) const {
    auto i = index_of(Edge(a, b));
    detail::require(i.has_value(), "EdgeColouring: edge not in host");
    return colours_[*i];
  }

  bool colours_exactly(const Graph& g) const { return g.edge_count() == edges_.size() && g.edges() == edges_; }

  std::size_t count(Colour c) const {
    return static_cast<std::size_t>(std::count(colours_.begin(), colours_.end(), c));
  }

  // Spanning subgraph on n vertices formed by the edges of colour c.
  Graph colour_class(std::size_t n, Colour c) const {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (colours_[i] == c) chosen.push_back(edges_[i]);
    return Graph::from_edges(n, chosen);
  }

  EdgeColouring swapped() const {
    std::vector<Colour> flipped(colours_.size());
    std::transform(colours_.begin(), colours_.end(), flipped.begin(), opposite);
    return {edges_, std::move(flipped)};
  }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<Colour> colours_;
};

class VertexColouring {
 public:
  VertexColouring() = default;
  explicit VertexColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  std::size_t size() const { return colours_.size(); }
  Colour colour(Vertex v) const { return colours_.at(v); }
  const std::vector<Colour>& colours() const { return colours_; }

  VertexSet colour_class(Colour c) const {
    VertexSet s(colours_.size());
    for (Vertex v = 0; v < colours_.size(); ++v)
      if (colours_[v] == c) s.insert(v);
    return s;
  }

  friend bool operator==(const VertexColouring&, const VertexColouring&) = default;

 private:
  std::vector<Colour> colours_;
};

struct MonoClique {
  Colour colour;
  std::vector<Vertex> vertices;
};

// A red K_s if there is one (lexicographically first), otherwise a blue K_t, otherwise none.
inline std::optional<MonoClique> find_mono_clique(const Graph& g, const EdgeColouring& c, std::size_t s,
                                                  std::size_t t) {
  detail::require(c.colours_exactly(g), "find_mono_clique: colouring does not cover exactly the graph's edges");
  if (auto red = find_clique(c.colour_class(g.n(), Colour::Red), s)) return MonoClique{Colour::Red, std::move(*red)};
  if (auto blue = find_clique(c.colour_class(g.n(), Colour::Blue), t))
    return MonoClique{Colour::Blue, std::move(*blue)};
  return std::nullopt;
}

// A colour class of the vertex colouring that contains an r-clique of g.
inline std::optional<MonoClique> find_mono_vertex_clique(const Graph& g, const VertexColouring& c, std::size_t r) {
  detail::require(c.size() == g.n(), "find_mono_vertex_clique: colouring length differs from vertex count");
  for (Colour col : {Colour::Red, Colour::Blue}) {
    VertexSet cls = c.colour_class(col);
    if (auto k = find_clique(g, r, &cls)) return MonoClique{col, std::move(*k)};
  }
  return std::nullopt;
}

}  // namespace ramsey

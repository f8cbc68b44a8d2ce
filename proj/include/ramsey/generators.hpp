#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

inline constexpr std::uint64_t kThresholdOne = std::uint64_t{1} << 53;

// An edge probability reduced to a 53-bit threshold: a potential edge is kept iff its
// uniform 53-bit draw is strictly below `threshold`. p = 1 maps to 2^53 (always kept).
class Probability {
 public:
  Probability() = default;

  static Probability from_rational(const Rational& q) {
    detail::require(q >= 0 && q <= 1, "probability outside [0, 1]: " + to_string(q));
    Probability p;
    p.threshold_ = floor_of(q * Rational(BigInt(kThresholdOne))).convert_to<std::uint64_t>();
    p.value_ = to_double(q);
    p.exact_ = q;
    return p;
  }

  static Probability from_double(double v) {
    detail::require(std::isfinite(v) && v >= 0.0 && v <= 1.0, "probability outside [0, 1]");
    Probability p;
    // scaling by a power of two is exact, so floor() sees the true product
    p.threshold_ = static_cast<std::uint64_t>(std::floor(std::ldexp(v, 53)));
    p.value_ = v;
    return p;
  }

  // Decimal ("0.05", "1e-2") or fraction ("1/20"); parsed exactly before reduction.
  static Probability parse(const std::string& text) { return from_rational(parse_rational(text)); }

  std::uint64_t threshold() const { return threshold_; }
  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool keeps(std::uint64_t draw53) const { return draw53 < threshold_; }

 private:
  std::uint64_t threshold_ = 0;
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

// G(n, p): one 53-bit draw per potential edge, taken in lexicographic edge order from
// stream (seed, Edges). Graphs for p1 <= p2 under one seed are nested.
inline Graph gnp(std::size_t n, const Probability& p, RngSeed seed) {
  RngStream rng(seed, Stream::Edges);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (p.keeps(rng.next_u53())) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

struct Bipartition {
  VertexSet first;   // V1 = {0, ..., ceil(n/2) - 1}
  VertexSet second;  // V2 = the rest
};

struct BipartiteSeed {
  Graph graph;
  Bipartition partition;
};

// K_{ceil(n/2), floor(n/2)}.
inline BipartiteSeed complete_bipartite(std::size_t n) {
  detail::require(n >= 2, "complete_bipartite: n must be at least 2");
  const std::size_t left = (n + 1) / 2;
  BipartiteSeed out{complete_bipartite_graph(left, n - left), {VertexSet(n), VertexSet(n)}};
  for (Vertex v = 0; v < n; ++v) (v < left ? out.partition.first : out.partition.second).insert(v);
  return out;
}

enum class SeedKind { CompleteBipartite, File };

inline const char* seed_kind_name(SeedKind k) { return k == SeedKind::CompleteBipartite ? "complete-bipartite" : "file"; }

// Seed graph united with an independent G(n, p). An edge present in both parts is kept
// in both label lists.
struct PerturbedGraph {
  Graph graph;
  std::vector<Edge> seed_edges;
  std::vector<Edge> random_edges;
  std::optional<Bipartition> partition;
  Rational gamma;  // seed edge count / n^2, the largest gamma for which the seed is gamma-dense
  Probability p;
  RngSeed rng_seed = 0;
  SeedKind seed_kind = SeedKind::CompleteBipartite;
};

namespace detail {

inline PerturbedGraph assemble_perturbed(const Graph& seed_graph, std::optional<Bipartition> partition,
                                         const Probability& p, RngSeed seed, SeedKind kind) {
  const std::size_t n = seed_graph.n();
  Graph random_part = gnp(n, p, seed);
  PerturbedGraph out;
  out.graph = graph_union(seed_graph, random_part);
  out.seed_edges = seed_graph.edges();
  out.random_edges = random_part.edges();
  out.partition = std::move(partition);
  out.gamma = n == 0 ? Rational(0)
                     : make_rational(static_cast<long long>(seed_graph.edge_count()),
                                     static_cast<long long>(n * n));
  out.p = p;
  out.rng_seed = seed;
  out.seed_kind = kind;
  return out;
}

}  // namespace detail

inline PerturbedGraph perturbed_bipartite(std::size_t n, const Probability& p, RngSeed seed) {
  BipartiteSeed s = complete_bipartite(n);
  return detail::assemble_perturbed(s.graph, std::move(s.partition), p, seed, SeedKind::CompleteBipartite);
}

// Seed read from a file; `n` is what the caller expects the file to contain.
inline PerturbedGraph perturbed_from_seed(const Graph& seed_graph, std::size_t n, const Probability& p, RngSeed seed) {
  detail::require(seed_graph.n() == n, "perturbed: seed graph has " + std::to_string(seed_graph.n()) +
                                           " vertices, expected " + std::to_string(n));
  return detail::assemble_perturbed(seed_graph, std::nullopt, p, seed, SeedKind::File);
}

// Graph whose edges are exactly those with both endpoints in one class of the partition.
inline Graph within_classes(const Graph& g, const Bipartition& part) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (part.first.contains(e.u) == part.first.contains(e.v)) edges.push_back(e);
  return Graph::from_edges(g.n(), edges);
}

// C(n, r) p^{C(r,2)}, the expected number of r-cliques in G(n, p).
inline Rational expected_clique_count(long long n, const Rational& p, long long r) {
  detail::require(r >= 2, "expected_clique_count: r must be at least 2");
  detail::require(p >= 0 && p <= 1, "expected_clique_count: p outside [0, 1]");
  return Rational(binomial(n, r)) * rational_pow(p, static_cast<unsigned>(binomial(r, 2).convert_to<long long>()));
}

inline double expected_clique_count(long long n, double p, long long r) {
  detail::require(r >= 2, "expected_clique_count: r must be at least 2");
  detail::require(p >= 0 && p <= 1, "expected_clique_count: p outside [0, 1]");
  return binomial(n, r).convert_to<double>() * std::pow(p, static_cast<double>(r * (r - 1) / 2));
}

}  // namespace ramsey

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

// Exact density parameters. Everything here is a Rational; nothing rounds.

namespace ramsey {

// Largest graph the subset-enumerating maximizers accept (2^16 vertex subsets).
inline constexpr std::size_t kBruteForceVertexLimit = 16;

inline Rational rho(const Graph& h) {
  detail::require(h.n() >= 1, "rho: graph has no vertices");
  return make_rational(static_cast<long long>(h.edge_count()), static_cast<long long>(h.n()));
}

// d2 for a graph with `vertices` vertices and `edges` edges.
inline Rational d2_counts(std::size_t vertices, std::size_t edges) {
  if (edges == 0) return 0;
  if (vertices >= 3) return make_rational(static_cast<long long>(edges) - 1, static_cast<long long>(vertices) - 2);
  if (vertices == 2 && edges == 1) return make_rational(1, 2);
  throw InternalError("d2: impossible simple graph with " + std::to_string(vertices) + " vertices and " +
                      std::to_string(edges) + " edges");
}

inline Rational d2(const Graph& h) { return d2_counts(h.n(), h.edge_count()); }

namespace detail {

// max_edges[k] = largest edge count over induced subgraphs on k vertices. For a fixed
// vertex count both d2 and the asymmetric d2 grow with the edge count, so these maxima
// are all the maximizers need.
inline std::vector<std::size_t> max_edges_by_order(const Graph& h, const char* who) {
  if (h.n() > kBruteForceVertexLimit)
    throw UnsupportedSize(std::string(who) + ": brute force supports at most " +
                          std::to_string(kBruteForceVertexLimit) + " vertices");
  const std::size_t n = h.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for_each_bit(h.row(v), [&](Vertex w) { adj[v] |= std::uint32_t{1} << w; });

  std::vector<std::size_t> best(n + 1, 0);
  const std::uint32_t subsets = std::uint32_t{1} << n;
  // edges(S) = edges(S \ {top}) + |N(top) & S|, filled in increasing mask order
  std::vector<std::uint16_t> edges(subsets, 0);
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const int top = 31 - std::countl_zero(s);
    const std::uint32_t rest = s & ~(std::uint32_t{1} << top);
    edges[s] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[top] & rest));
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (edges[s] > best[k]) best[k] = edges[s];
  }
  return best;
}

}  // namespace detail

// max over subgraphs J of h of d2(J).
inline Rational m2(const Graph& h) {
  const auto best = detail::max_edges_by_order(h, "m2");
  Rational out = 0;
  for (std::size_t k = 0; k < best.size(); ++k) {
    Rational v = d2_counts(k, best[k]);
    if (v > out) out = v;
  }
  return out;
}

namespace detail {

inline Rational d2_asym_counts(const Rational& m2_left, std::size_t vertices, std::size_t edges) {
  // |E| / (|V| - 2 + 1/m2(G))
  const Rational denom = Rational(static_cast<long long>(vertices)) - 2 + 1 / m2_left;
  return Rational(static_cast<long long>(edges)) / denom;
}

inline Rational checked_m2_left(const Graph& g, const Graph& h, const char* who) {
  require(g.edge_count() >= 1, std::string(who) + ": left graph has no edges");
  require(h.edge_count() >= 1, std::string(who) + ": right graph has no edges");
  require(h.n() >= 2, std::string(who) + ": right graph needs at least two vertices");
  return m2(g);
}

}  // namespace detail

inline Rational d2_asym(const Graph& g, const Graph& h) {
  const Rational left = detail::checked_m2_left(g, h, "d2_asym");
  return detail::d2_asym_counts(left, h.n(), h.edge_count());
}

// max over subgraphs J of h with at least one edge of d2_asym(g, J).
inline Rational m2_asym(const Graph& g, const Graph& h) {
  const Rational left = detail::checked_m2_left(g, h, "m2_asym");
  const auto best = detail::max_edges_by_order(h, "m2_asym");
  Rational out = 0;
  for (std::size_t k = 2; k < best.size(); ++k) {
    if (best[k] == 0) continue;
    Rational v = detail::d2_asym_counts(left, k, best[k]);
    if (v > out) out = v;
  }
  return out;
}

// m2(K_l, K_r) = C(r,2) / (r - 2 + 2/(l+1)), valid for 3 <= l <= r.
inline Rational m2_clique_closed_form(long long l, long long r) {
  if (l < 3) throw OutOfDomain("m2_clique_closed_form: requires l >= 3 (got " + std::to_string(l) + ")");
  detail::require(l <= r, "m2_clique_closed_form: requires l <= r");
  const BigInt pairs = binomial(r, 2);
  return Rational(pairs * (l + 1), BigInt((r - 2) * (l + 1) + 2));
}

// Exponent of n in n^{(1-eps_count) r} p^{C(r,2)} when p = n^{-(1-eps_p)/m2(K_l,K_r)}.
// The union bound over vertex subsets needs this to exceed 1.
inline Rational clique_count_exponent(long long r, long long l, const Rational& eps_count, const Rational& eps_p) {
  const Rational pairs = Rational(binomial(r, 2));
  return (1 - eps_count) * r - (1 - eps_p) * pairs / m2_clique_closed_form(l, r);
}

}  // namespace ramsey

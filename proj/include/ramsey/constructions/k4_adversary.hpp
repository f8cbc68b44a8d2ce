#pragma once

#include <algorithm>
#include <set>

#include "ramsey/arrowing.hpp"
#include "ramsey/cliques.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions/dense_subgraph.hpp"
#include "ramsey/constructions/outcome.hpp"
#include "ramsey/generators.hpp"

namespace ramsey {

struct K4Adversary {
  EdgeColouring colouring;
  VertexSet u;                 // red class of the vertex colouring of V2
  std::vector<Edge> selected;  // one edge per K4 of g[V2], the set E_s
};

struct K4AdversaryOptions {
  std::size_t vmax = 8;
  Rational rho_min = 2;
};

// Three-part colouring of a bipartite-seeded perturbed graph with no monochromatic K4:
// phi1 inside V1 (no mono K3), phi2 inside V2 (red on U and on one edge per K4), phi3 on the
// cross edges (blue towards U).
inline ConstructionOutcome<K4Adversary> k4_adversarial_colouring(const PerturbedGraph& pg, const SearchBudget& budget,
                                                                 const K4AdversaryOptions& opts = {}) {
  detail::require(pg.partition.has_value(), "k4_adversarial_colouring: graph has no partition");
  const Graph& g = pg.graph;
  const VertexSet& v1 = pg.partition->first;
  const VertexSet& v2 = pg.partition->second;

  // (a) phi1
  const InducedSubgraph h1 = induced(g, v1);
  EdgeVerdict e1 = arrows_edge(h1.graph, 3, 3, budget);
  if (e1.verdict == Verdict::Unknown) return BudgetExhausted{"phi1"};
  if (e1.verdict == Verdict::Arrows) {
    PreconditionFailure f;
    f.check = "v1-arrows-k3";
    f.vertices = h1.original;
    return f;
  }

  // (b) vertex colouring of V2
  const InducedSubgraph h2 = induced(g, v2);
  VertexVerdict e2 = arrows_vertex(h2.graph, 4, budget);
  if (e2.verdict == Verdict::Unknown) return BudgetExhausted{"vertex-colouring"};
  if (e2.verdict == Verdict::Arrows) {
    PreconditionFailure f;
    f.check = "v2-vertex-arrows-k4";
    f.vertices = h2.original;
    return f;
  }
  VertexSet u(g.n());
  for (std::size_t i = 0; i < h2.original.size(); ++i)
    if (e2.witness->colour(static_cast<Vertex>(i)) == Colour::Red) u.insert(h2.original[i]);

  // (c)
  if (auto dense = check_no_dense_small_subgraph(h2.graph, opts.vmax, opts.rho_min)) {
    PreconditionFailure f;
    f.check = "dense-subgraph";
    dense->for_each([&](Vertex i) { f.vertices.push_back(h2.original[i]); });
    return f;
  }

  // (d) one edge per K4 of g[V2], at the smallest vertex of U in it
  std::set<Edge> selected;
  for_each_clique(
      g, 4,
      [&](std::span<const Vertex> l) {
        auto a = std::find_if(l.begin(), l.end(), [&](Vertex v) { return u.contains(v); });
        if (a == l.end()) throw InternalError("k4_adversarial_colouring: K4 inside the blue class");
        const Vertex other = *a == l[0] ? l[1] : l[0];
        selected.insert(Edge(std::min(*a, other), std::max(*a, other)));
        return true;
      },
      &v2);

  // (e)-(g)
  std::vector<Edge> edges = g.edges();
  std::vector<Colour> colours(edges.size());
  std::vector<Vertex> local(g.n(), 0);
  for (std::size_t i = 0; i < h1.original.size(); ++i) local[h1.original[i]] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const bool in1u = v1.contains(e.u), in1v = v1.contains(e.v);
    if (in1u && in1v) {
      colours[i] = e1.witness->colour_of(local[e.u], local[e.v]);
    } else if (!in1u && !in1v) {
      const bool red = (u.contains(e.u) && u.contains(e.v)) || selected.count(e);
      colours[i] = red ? Colour::Red : Colour::Blue;
    } else {
      const Vertex w = in1u ? e.v : e.u;
      colours[i] = u.contains(w) ? Colour::Blue : Colour::Red;
    }
  }
  EdgeColouring full(std::move(edges), std::move(colours));
  if (find_mono_clique(g, full, 4, 4))
    throw InternalError("k4_adversarial_colouring: assembled colouring has a monochromatic K4");
  return K4Adversary{std::move(full), std::move(u), std::vector<Edge>(selected.begin(), selected.end())};
}

}  // namespace ramsey

#pragma once

#include "ramsey/arrowing.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions/outcome.hpp"
#include "ramsey/generators.hpp"

namespace ramsey {

// Keeps `inner` on the edges inside the two classes and colours every cross edge red.
// A red K_r would need ceil(r/2) vertices in one class, so a red-K_ell-free and
// blue-K_r-free inner colouring stays mono-K_r-free.
inline ConstructionOutcome<EdgeColouring> extend_bipartite_colouring(const PerturbedGraph& pg,
                                                                     const EdgeColouring& inner, std::size_t ell,
                                                                     std::size_t r) {
  detail::require(pg.partition.has_value(), "extend_bipartite_colouring: graph has no partition");
  detail::require(r >= 2, "extend_bipartite_colouring: r must be at least 2");
  detail::require(ell == (r + 1) / 2, "extend_bipartite_colouring: ell must equal ceil(r/2)");
  const Graph inside = within_classes(pg.graph, *pg.partition);
  detail::require(inner.colours_exactly(inside),
                  "extend_bipartite_colouring: inner colouring must cover exactly the within-class edges");

  if (auto bad = find_mono_clique(inside, inner, ell, r)) {
    PreconditionFailure f;
    f.check = bad->colour == Colour::Red ? "inner-red-clique" : "inner-blue-clique";
    f.vertices = bad->vertices;
    f.colour = bad->colour;
    return f;
  }

  std::vector<Edge> edges = pg.graph.edges();
  std::vector<Colour> colours(edges.size(), Colour::Red);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (auto j = inner.index_of(edges[i])) colours[i] = inner.colour(*j);
  EdgeColouring full(std::move(edges), std::move(colours));
  if (find_mono_clique(pg.graph, full, r, r))
    throw InternalError("extend_bipartite_colouring: extended colouring has a monochromatic K_r");
  return full;
}

// Finds the inner colouring with arrows_edge on the within-class graph, then extends it.
inline ConstructionOutcome<EdgeColouring> bipartite_extension(const PerturbedGraph& pg, std::size_t r,
                                                              const SearchBudget& budget) {
  detail::require(pg.partition.has_value(), "bipartite_extension: graph has no partition");
  detail::require(r >= 3, "bipartite_extension: r must be at least 3");
  const std::size_t ell = (r + 1) / 2;
  const Graph inside = within_classes(pg.graph, *pg.partition);
  EdgeVerdict v = arrows_edge(inside, ell, r, budget);
  if (v.verdict == Verdict::Unknown) return BudgetExhausted{"inner-search"};
  if (v.verdict == Verdict::Arrows) {
    PreconditionFailure f;
    f.check = "inner-arrows";
    f.vertices = VertexSet::full(pg.graph.n()).to_vector();
    return f;
  }
  return extend_bipartite_colouring(pg, *v.witness, ell, r);
}

}  // namespace ramsey

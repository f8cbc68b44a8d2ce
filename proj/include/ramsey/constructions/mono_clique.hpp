#pragma once

#include <algorithm>
#include <optional>

#include "ramsey/cliques.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions/drc.hpp"
#include "ramsey/constructions/outcome.hpp"

namespace ramsey {

struct MonoCliqueResult {
  MonoClique clique;
  bool via_fallback = false;
  std::optional<VertexSet> drc_set;  // U from the DRC step when that path produced the clique
};

namespace detail {

inline void verify_mono_clique(const Graph& g, const EdgeColouring& c, const MonoClique& k) {
  if (!is_clique(g, k.vertices)) throw InternalError("mono_clique_via_drc: returned set is not a clique");
  for (std::size_t i = 0; i < k.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < k.vertices.size(); ++j)
      if (c.colour_of(k.vertices[i], k.vertices[j]) != k.colour)
        throw InternalError("mono_clique_via_drc: returned clique is not monochromatic");
}

inline std::optional<MonoClique> scan_mono_cliques(const Graph& g, const EdgeColouring& c, std::size_t r) {
  std::optional<MonoClique> found;
  for_each_clique(g, r, [&](std::span<const Vertex> k) {
    const Colour first = c.colour_of(k[0], k[1]);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j)
        if (c.colour_of(k[i], k[j]) != first) return true;
    found = MonoClique{first, std::vector<Vertex>(k.begin(), k.end())};
    return false;
  });
  return found;
}

}  // namespace detail

// Majority colour class -> DRC set U -> majority K_ceil(r/2) X in U -> majority K_floor(r/2)
// Y in the common majority neighbourhood W of X, giving the clique X u Y. A minority K_r found
// inside U or W is returned instead. When any step fails, an exhaustive scan over the r-cliques
// of g runs before the failure is reported.
inline ConstructionOutcome<MonoCliqueResult> mono_clique_via_drc(const Graph& g, const EdgeColouring& c,
                                                                 std::size_t r, std::size_t u_floor,
                                                                 std::size_t w_floor, std::size_t t, RngSeed seed,
                                                                 std::size_t max_attempts = 32) {
  detail::require(c.colours_exactly(g), "mono_clique_via_drc: colouring does not cover exactly the graph's edges");
  detail::require(r >= 2, "mono_clique_via_drc: r must be at least 2");
  const std::size_t hi = (r + 1) / 2;
  const std::size_t lo = r / 2;
  detail::require(u_floor >= hi, "mono_clique_via_drc: u_floor must be at least ceil(r/2)");
  detail::require(w_floor >= lo, "mono_clique_via_drc: w_floor must be at least floor(r/2)");

  const Colour major = c.count(Colour::Red) >= c.count(Colour::Blue) ? Colour::Red : Colour::Blue;
  const Colour minor = opposite(major);
  const Graph gmaj = c.colour_class(g.n(), major);
  const Graph gmin = c.colour_class(g.n(), minor);

  auto fallback = [&](ConstructionOutcome<MonoCliqueResult> failure) -> ConstructionOutcome<MonoCliqueResult> {
    if (auto k = detail::scan_mono_cliques(g, c, r)) {
      detail::verify_mono_clique(g, c, *k);
      return MonoCliqueResult{std::move(*k), true, std::nullopt};
    }
    return failure;
  };
  auto not_arrowing = [&](const VertexSet& s) {
    PreconditionFailure f;
    f.check = "subset-not-arrowing";
    f.vertices = s.to_vector();
    f.colouring = restrict_colouring(c, s);
    return ConstructionOutcome<MonoCliqueResult>(std::move(f));
  };
  auto success = [&](MonoClique k, const VertexSet& u) -> ConstructionOutcome<MonoCliqueResult> {
    std::sort(k.vertices.begin(), k.vertices.end());
    detail::verify_mono_clique(g, c, k);
    return MonoCliqueResult{std::move(k), false, u};
  };

  auto drc = drc_extract(gmaj, hi, w_floor, u_floor, t, seed, max_attempts);
  if (!drc.ok()) return fallback(BudgetExhausted{"drc"});
  const VertexSet& u = drc.value();

  auto x = find_clique(gmaj, hi, &u);
  if (!x) {
    if (auto b = find_clique(gmin, r, &u)) return success({minor, std::move(*b)}, u);
    return fallback(not_arrowing(u));
  }
  const VertexSet w = common_neighborhood(gmaj, VertexSet(g.n(), *x));
  auto y = find_clique(gmaj, lo, &w);
  if (!y) {
    if (auto b = find_clique(gmin, r, &w)) return success({minor, std::move(*b)}, u);
    return fallback(not_arrowing(w));
  }
  std::vector<Vertex> all = *x;
  all.insert(all.end(), y->begin(), y->end());
  return success({major, std::move(all)}, u);
}

}  // namespace ramsey

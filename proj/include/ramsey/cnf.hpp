#pragma once

#include <ostream>

#include "ramsey/cliques.hpp"
#include "ramsey/arrowing.hpp"

namespace ramsey {

struct CnfStats {
  std::size_t variables = 0;
  std::size_t clauses = 0;
};

// DIMACS CNF whose models are exactly the colourings avoiding red K_s and blue K_t.
// Variable i+1 is true iff edge i (lexicographic) is red. Each K_s contributes the clause
// "not all red", each K_t the clause "not all blue"; with s = t every clique gives both.
inline CnfStats export_cnf(const Graph& g, std::size_t s, std::size_t t, std::ostream& out) {
  detail::require(s >= 2 && t >= 2, "export_cnf: clique sizes must be at least 2");
  CnfStats stats;
  stats.variables = g.edge_count();
  stats.clauses = count_cliques(g, s) + count_cliques(g, t);
  out << "p cnf " << stats.variables << ' ' << stats.clauses << '\n';
  detail::EdgeIndex index(g);
  auto emit = [&](std::size_t size, bool negate) {
    for_each_clique(g, size, [&](std::span<const Vertex> c) {
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          const long long var = static_cast<long long>(index(c[i], c[j])) + 1;
          out << (negate ? -var : var) << ' ';
        }
      out << "0\n";
      return true;
    });
  };
  emit(s, true);
  emit(t, false);
  if (!out) throw std::runtime_error("export_cnf: write failed");
  return stats;
}

}  // namespace ramsey

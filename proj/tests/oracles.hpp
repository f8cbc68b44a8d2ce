#pragma once

// Test-only oracles, deliberately written without the library's clique search or solver.

#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey::testing {

// All k-subsets of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> idx(k);
  std::function<void(std::size_t, Vertex)> rec = [&](std::size_t depth, Vertex from) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      idx[depth] = v;
      rec(depth + 1, v + 1);
    }
  };
  rec(0, 0);
}

// colour[u][v]: 0 red, 1 blue, -1 non-edge.
using ColourMatrix = std::vector<std::vector<int>>;

inline bool naive_mono_clique(const ColourMatrix& col, std::size_t k, int colour) {
  const std::size_t n = col.size();
  if (k > n) return false;
  bool found = false;
  for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
    if (found) return;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (col[s[i]][s[j]] != colour) return;
    found = true;
  });
  return found;
}

inline ColourMatrix colour_matrix(std::size_t n, const EdgeColouring& c) {
  ColourMatrix col(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Edge& e = c.edges()[i];
    col[e.u][e.v] = col[e.v][e.u] = static_cast<int>(c.colour(i));
  }
  return col;
}

// Every 2^m colouring checked directly.
inline bool brute_force_arrows_edge(const Graph& g, std::size_t s, std::size_t t) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ColourMatrix col(g.n(), std::vector<int>(g.n(), -1));
    for (std::size_t i = 0; i < m; ++i) {
      const int c = static_cast<int>((mask >> i) & 1);
      col[edges[i].u][edges[i].v] = col[edges[i].v][edges[i].u] = c;
    }
    if (!naive_mono_clique(col, s, 0) && !naive_mono_clique(col, t, 1)) return false;
  }
  return true;
}

inline bool naive_has_clique_in(const Graph& g, const std::vector<Vertex>& cls, std::size_t k) {
  if (k > cls.size()) return false;
  bool found = false;
  for_each_subset(cls.size(), k, [&](const std::vector<Vertex>& pick) {
    if (found) return;
    for (std::size_t i = 0; i < pick.size(); ++i)
      for (std::size_t j = i + 1; j < pick.size(); ++j)
        if (!g.adjacent(cls[pick[i]], cls[pick[j]])) return;
    found = true;
  });
  return found;
}

inline bool brute_force_arrows_vertex(const Graph& g, std::size_t r) {
  const std::size_t n = g.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> red, blue;
    for (Vertex v = 0; v < n; ++v) ((mask >> v) & 1 ? blue : red).push_back(v);
    if (!naive_has_clique_in(g, red, r) && !naive_has_clique_in(g, blue, r)) return false;
  }
  return true;
}

// Minimal DPLL over DIMACS text. Returns true iff satisfiable.
class ToyDpll {
 public:
  explicit ToyDpll(const std::string& dimacs) {
    std::istringstream in(dimacs);
    std::string tok;
    in >> tok;  // p
    in >> tok;  // cnf
    std::size_t clauses = 0;
    in >> vars_ >> clauses;
    std::vector<int> cur;
    int lit = 0;
    while (in >> lit) {
      if (lit == 0) {
        clauses_.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(lit);
      }
    }
    declared_ = clauses;
  }

  std::size_t variables() const { return vars_; }
  std::size_t clauses() const { return clauses_.size(); }
  std::size_t declared_clauses() const { return declared_; }

  bool solve() {
    std::vector<int> val(vars_ + 1, 0);
    return dpll(val);
  }

 private:
  bool dpll(std::vector<int>& val) {
    for (;;) {
      bool changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = val[static_cast<std::size_t>(std::abs(lit))];
          if (v == 0) {
            ++unassigned;
            last = lit;
          } else if ((v > 0) == (lit > 0)) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          val[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
      if (!changed) break;
    }
    std::size_t pick = 0;
    for (std::size_t v = 1; v <= vars_; ++v)
      if (val[v] == 0) {
        pick = v;
        break;
      }
    if (pick == 0) return true;
    for (int choice : {1, -1}) {
      std::vector<int> copy = val;
      copy[pick] = choice;
      if (dpll(copy)) return true;
    }
    return false;
  }

  std::size_t vars_ = 0;
  std::size_t declared_ = 0;
  std::vector<std::vector<int>> clauses_;
};

// Connected vertex sets of size <= vmax grown one neighbour at a time; layers deduplicated
// as bitmasks. Returns whether some set has edges >= rho_num/rho_den * size. Needs n <= 64.
inline bool naive_dense_connected_exists(const Graph& g, std::size_t vmax, long long rho_num, long long rho_den) {
  const std::size_t n = g.n();
  std::vector<std::uint64_t> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }
  auto edges_in = [&](std::uint64_t mask) {
    long long e = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) e += std::popcount(nbr[v] & mask);
    return e / 2;
  };
  std::set<std::uint64_t> layer;
  for (std::size_t v = 0; v < n; ++v) layer.insert(std::uint64_t{1} << v);
  for (std::size_t k = 1; k <= vmax && !layer.empty(); ++k) {
    for (auto mask : layer)
      if (edges_in(mask) * rho_den >= rho_num * static_cast<long long>(k)) return true;
    std::set<std::uint64_t> next;
    for (auto mask : layer) {
      std::uint64_t frontier = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) frontier |= nbr[v];
      frontier &= ~mask;
      for (std::size_t v = 0; v < n; ++v)
        if (frontier >> v & 1) next.insert(mask | std::uint64_t{1} << v);
    }
    layer = std::move(next);
  }
  return false;
}

}  // namespace ramsey::testing

#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

namespace detail {

// ESU enumeration (each connected vertex set is visited once, rooted at its smallest vertex).
class DenseSubgraphSearch {
 public:
  DenseSubgraphSearch(const Graph& g, std::size_t vmax, const Rational& rho_min)
      : g_(g), vmax_(vmax), num_(numerator(rho_min)), den_(denominator(rho_min)) {}

  std::optional<VertexSet> run() {
    if (vmax_ == 0) return std::nullopt;
    for (Vertex root = 0; root < g_.n(); ++root) {
      root_ = root;
      sub_.assign(1, root);
      VertexSet closed = VertexSet::from_words(g_.n(), g_.row(root));
      closed.insert(root);
      std::vector<Vertex> ext;
      g_.neighbours(root).for_each([&](Vertex u) {
        if (u > root) ext.push_back(u);
      });
      if (extend(std::move(ext), 0, closed)) return VertexSet(g_.n(), sub_);
    }
    return std::nullopt;
  }

 private:
  bool dense(std::size_t edges, std::size_t k) const { return BigInt(edges) * den_ >= num_ * BigInt(k); }

  bool extend(std::vector<Vertex> ext, std::size_t edges, const VertexSet& closed) {
    if (dense(edges, sub_.size())) return true;
    if (sub_.size() == vmax_) return false;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      VertexSet next_closed = closed;
      g_.neighbours(w).for_each([&](Vertex u) {
        if (u > root_ && !closed.contains(u)) next.push_back(u);
        next_closed.insert(u);
      });
      std::size_t gained = 0;
      for (Vertex s : sub_) gained += g_.adjacent(s, w);
      sub_.push_back(w);
      if (extend(std::move(next), edges + gained, next_closed)) return true;
      sub_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t vmax_;
  BigInt num_, den_;
  Vertex root_ = 0;
  std::vector<Vertex> sub_;
};

}  // namespace detail

// A vertex set S with |S| <= vmax and e(S)/|S| >= rho_min, if one exists. Only connected sets
// are searched: the densest component of a set is at least as dense as the set.
inline std::optional<VertexSet> check_no_dense_small_subgraph(const Graph& g, std::size_t vmax = 8,
                                                              const Rational& rho_min = Rational(2)) {
  return detail::DenseSubgraphSearch(g, vmax, rho_min).run();
}

}  // namespace ramsey

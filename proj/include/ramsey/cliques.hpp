#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

// Candidate-intersection search. Candidates at each depth are the common neighbours of
// the current partial clique that are larger than its last vertex, so cliques come out
// in lexicographic order of their sorted vertex lists.
template <class Adjacency, class Visit>
class CliqueSearch {
 public:
  CliqueSearch(const Adjacency& g, std::size_t r, Visit& visit)
      : g_(g), r_(r), wpr_(g.words_per_row()), visit_(visit), stack_(r), buffers_((r + 1) * wpr_) {}

  // Returns false if the visitor asked to stop.
  bool run(std::span<const Word> candidates) {
    std::copy(candidates.begin(), candidates.end(), buffers_.begin());
    return descend(0);
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == r_) return visit_(std::span<const Vertex>(stack_));
    Word* cand = buffers_.data() + depth * wpr_;
    Word* next = cand + wpr_;
    const std::size_t need = r_ - depth;
    for (std::size_t w = 0; w < wpr_; ++w) {
      while (cand[w]) {
        if (popcount(std::span<const Word>(cand, wpr_)) < need) return true;
        const auto v = static_cast<Vertex>(w * kWordBits + std::countr_zero(cand[w]));
        cand[w] &= cand[w] - 1;
        stack_[depth] = v;
        if (need == 1) {
          if (!visit_(std::span<const Vertex>(stack_))) return false;
          continue;
        }
        auto row = g_.row(v);
        for (std::size_t i = 0; i < wpr_; ++i) next[i] = cand[i] & row[i];
        if (!descend(depth + 1)) return false;
      }
    }
    return true;
  }

  const Adjacency& g_;
  std::size_t r_;
  std::size_t wpr_;
  Visit& visit_;
  std::vector<Vertex> stack_;
  std::vector<Word> buffers_;
};

}  // namespace detail

// Borrowed adjacency rows (n rows of `wpr` words), e.g. the colour classes of a partial
// colouring during search.
struct RowView {
  const Word* data = nullptr;
  std::size_t wpr = 0;
  std::span<const Word> row(Vertex v) const { return {data + v * wpr, wpr}; }
  std::size_t words_per_row() const { return wpr; }
};

// True iff the rows contain an r-clique inside `within` (r = 0 is trivially true).
inline bool has_clique(const RowView& rows, std::size_t r, std::span<const Word> within) {
  if (r == 0) return true;
  if (popcount(within) < r) return false;
  auto stop = [](std::span<const Vertex>) { return false; };
  detail::CliqueSearch<RowView, decltype(stop)> search(rows, r, stop);
  return !search.run(within);
}

// Visits every r-clique (as an ascending vertex list) inside `within`, in lexicographic
// order. The visitor returns false to stop early; the function returns false in that case.
template <class Visit>
bool for_each_clique(const Graph& g, std::size_t r, Visit&& visit, const VertexSet* within = nullptr) {
  detail::require(r >= 1, "clique size must be at least 1");
  if (within) detail::require(within->universe() == g.n(), "for_each_clique: universe mismatch");
  if (r > g.n()) return true;
  std::vector<Word> start;
  if (within) {
    start.assign(within->words().begin(), within->words().end());
  } else {
    const VertexSet all = VertexSet::full(g.n());
    start.assign(all.words().begin(), all.words().end());
  }
  detail::CliqueSearch<Graph, std::remove_reference_t<Visit>> search(g, r, visit);
  return search.run(start);
}

struct CliqueList {
  std::vector<VertexSet> cliques;
  bool truncated = false;
};

inline CliqueList enumerate_cliques(const Graph& g, std::size_t r, std::optional<std::size_t> limit = std::nullopt) {
  CliqueList out;
  for_each_clique(g, r, [&](std::span<const Vertex> c) {
    if (limit && out.cliques.size() >= *limit) {
      out.truncated = true;
      return false;
    }
    out.cliques.emplace_back(g.n(), c);
    return true;
  });
  return out;
}

// Lexicographically first r-clique inside `within` (whole graph when null).
inline std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t r, const VertexSet* within = nullptr) {
  std::optional<std::vector<Vertex>> found;
  for_each_clique(
      g, r,
      [&](std::span<const Vertex> c) {
        found.emplace(c.begin(), c.end());
        return false;
      },
      within);
  return found;
}

inline bool contains_clique(const Graph& g, std::size_t r) { return find_clique(g, r).has_value(); }

inline std::size_t count_cliques(const Graph& g, std::size_t r) {
  std::size_t count = 0;
  for_each_clique(g, r, [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace ramsey

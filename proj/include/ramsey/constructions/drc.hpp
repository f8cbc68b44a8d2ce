#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/constructions/outcome.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"

// Dependent random choice: pick a few random vertices, keep their common neighbourhood,
// then trim it until every r-subset has many common neighbours.

namespace ramsey {

struct DrcParams {
  long long t = 1;   // number of sampled vertices
  Rational alpha = 1;  // guaranteed output fraction, |U| >= alpha n
  BigInt n0 = 1;     // smallest n for which the guarantee is claimed
  Rational gamma = 1;
  Rational eps = 1;
  long long r = 1;
  long long m = 0;   // required common neighbours per r-subset
  long long a = 1;   // required output size
};

// d^t / n^{t-1} - C(n,r) (m/n)^t >= a, evaluated exactly.
inline bool drc_condition(long long n, const Rational& d, long long t, long long m, long long r, long long a) {
  detail::require(n >= 1 && t >= 1, "drc_condition: requires n >= 1 and t >= 1");
  const auto ut = static_cast<unsigned>(t);
  const Rational nn(n);
  const Rational lhs = rational_pow(d, ut) / rational_pow(nn, ut - 1) -
                       Rational(binomial(n, r)) * rational_pow(Rational(m) / nn, ut);
  return lhs >= Rational(a);
}

// Parameters for a gamma-dense graph: t = ceil(r/eps), alpha = gamma^t / 2, n0 = ceil(2 / gamma^t).
// m and a depend on n; use drc_params_at to fill them in.
inline DrcParams drc_params(const Rational& gamma, const Rational& eps, long long r) {
  detail::require(gamma > 0 && eps > 0, "drc_params: gamma and eps must be positive");
  detail::require(r >= 1, "drc_params: r must be positive");
  DrcParams p;
  p.gamma = gamma;
  p.eps = eps;
  p.r = r;
  p.t = ceil_of(Rational(r) / eps).convert_to<long long>();
  const Rational gt = rational_pow(gamma, static_cast<unsigned>(p.t));
  p.alpha = gt / 2;
  p.n0 = ceil_of(2 / gt);
  return p;
}

// m = ceil(n^{1-eps}) and a = ceil(alpha n) for a concrete n.
inline DrcParams drc_params_at(DrcParams p, long long n) {
  const double exponent = 1.0 - to_double(p.eps);
  p.m = static_cast<long long>(std::ceil(std::pow(static_cast<double>(n), exponent) - 1e-9));
  p.a = std::max<long long>(1, ceil_of(p.alpha * n).convert_to<long long>());
  return p;
}

namespace detail {

// Lexicographically first r-subset of `pool` (ascending) with fewer than m common
// neighbours in g. Common neighbourhoods only shrink as a set grows, so a prefix that is
// already short of m makes its smallest completion the answer.
class BadSubsetFinder {
 public:
  BadSubsetFinder(const Graph& g, std::size_t r, std::size_t m) : g_(g), r_(r), m_(m), wpr_(g.words_per_row()) {}

  std::optional<std::vector<Vertex>> find(const std::vector<Vertex>& pool) {
    if (pool.size() < r_) return std::nullopt;
    pool_ = &pool;
    chosen_.clear();
    buffers_.assign((r_ + 1) * wpr_, 0);
    const VertexSet all = VertexSet::full(g_.n());
    std::copy(all.words().begin(), all.words().end(), buffers_.begin());
    return descend(0, 0);
  }

 private:
  std::optional<std::vector<Vertex>> descend(std::size_t depth, std::size_t from) {
    const auto& pool = *pool_;
    const Word* common = buffers_.data() + depth * wpr_;
    Word* next = buffers_.data() + (depth + 1) * wpr_;
    const std::size_t still_needed = r_ - depth - 1;
    for (std::size_t i = from; i + still_needed < pool.size(); ++i) {
      const Vertex v = pool[i];
      auto row = g_.row(v);
      for (std::size_t w = 0; w < wpr_; ++w) next[w] = common[w] & row[w];
      chosen_.push_back(v);
      if (popcount(std::span<const Word>(next, wpr_)) < m_) {
        std::vector<Vertex> out = chosen_;
        for (std::size_t j = 1; j <= still_needed; ++j) out.push_back(pool[i + j]);
        return out;
      }
      if (still_needed > 0)
        if (auto found = descend(depth + 1, i + 1)) return found;
      chosen_.pop_back();
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::size_t r_, m_, wpr_;
  const std::vector<Vertex>* pool_ = nullptr;
  std::vector<Vertex> chosen_;
  std::vector<Word> buffers_;
};

// Plain exhaustive check: every r-subset of u has at least m common neighbours.
inline bool every_subset_has_common_neighbours(const Graph& g, const VertexSet& u, std::size_t r, std::size_t m) {
  const auto members = u.to_vector();
  if (members.size() < r) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    VertexSet s(g.n());
    for (auto i : idx) s.insert(members[i]);
    if (common_neighborhood(g, s).size() < m) return false;
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == members.size() - r + k - 1) --k;
    if (k == 0) return true;
    ++idx[k - 1];
    for (std::size_t j = k; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Attempt i samples t vertices (with repetition) from stream (derive_seed(seed, i), Sampling),
// starts from their common neighbourhood U and deletes the smallest vertex of the
// lexicographically first r-subset of U with fewer than m common neighbours until none is
// left. Succeeds when |U| >= a; the returned set is re-verified exhaustively.
inline ConstructionOutcome<VertexSet> drc_extract(const Graph& g, std::size_t r, std::size_t m, std::size_t a,
                                                  std::size_t t, RngSeed seed, std::size_t max_attempts) {
  detail::require(r >= 1, "drc_extract: r must be positive");
  detail::require(a >= r, "drc_extract: requires a >= r");
  detail::require(t >= 1, "drc_extract: t must be positive");
  detail::require(max_attempts >= 1, "drc_extract: max_attempts must be positive");
  if (g.n() == 0) return BudgetExhausted{"drc"};

  detail::BadSubsetFinder finder(g, r, m);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    RngStream rng(derive_seed(seed, attempt), Stream::Sampling);
    VertexSet sample(g.n());
    for (std::size_t i = 0; i < t; ++i) sample.insert(static_cast<Vertex>(rng.next_below(g.n())));
    std::vector<Vertex> pool = common_neighborhood(g, sample).to_vector();

    while (pool.size() >= a) {
      auto bad = finder.find(pool);
      if (!bad) break;
      pool.erase(std::find(pool.begin(), pool.end(), bad->front()));
    }
    if (pool.size() < a) continue;

    VertexSet u(g.n(), pool);
    if (!detail::every_subset_has_common_neighbours(g, u, r, m))
      throw InternalError("drc_extract: output failed r-subset verification");
    return u;
  }
  return BudgetExhausted{"drc"};
}

}  // namespace ramsey

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ramsey/cliques.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct SearchBudget {
  std::chrono::milliseconds time{std::chrono::milliseconds::max()};
  std::uint64_t nodes = std::numeric_limits<std::uint64_t>::max();

  static SearchBudget milliseconds(long long ms) { return {std::chrono::milliseconds(ms), SearchBudget{}.nodes}; }
  static SearchBudget node_limit(std::uint64_t n) { return {SearchBudget{}.time, n}; }
  static SearchBudget unlimited() { return {}; }
};

enum class Verdict { Arrows, NotArrows, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Arrows: return "arrows";
    case Verdict::NotArrows: return "not-arrows";
    default: return "unknown";
  }
}

// Outcome of an exact decider. `witness` is present exactly when verdict == NotArrows.
template <class Witness>
struct ArrowVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
  std::chrono::microseconds elapsed{0};
  std::uint64_t nodes = 0;

  bool arrows() const { return verdict == Verdict::Arrows; }
  bool not_arrows() const { return verdict == Verdict::NotArrows; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};

using EdgeVerdict = ArrowVerdict<EdgeColouring>;
using VertexVerdict = ArrowVerdict<VertexColouring>;

struct EdgeSearchOptions {
  // Above this many target cliques (both families together) the search stops precomputing
  // clique lists and detects monochromatic cliques lazily, without propagation.
  std::size_t clique_cap = std::size_t{1} << 20;
};

namespace detail {

class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {
    require(b.time.count() > 0 && b.nodes > 0, "search budget must be positive");
  }
  // Counts one node; false once the budget is gone.
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.nodes) return false;
    if ((nodes_ & 255U) == 0 && std::chrono::steady_clock::now() - start_ >= budget_.time) return false;
    return true;
  }
  std::uint64_t nodes() const { return nodes_; }
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

inline constexpr std::uint8_t kUnassigned = 2;

// Index of edge {u, v} in the lexicographic edge list, via per-vertex offsets and ranks.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : g_(g), offset_(g.n() + 1, 0) {
    for (Vertex u = 0; u < g.n(); ++u) offset_[u + 1] = offset_[u] + higher_degree(u);
  }
  std::uint32_t operator()(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    // rank of v among neighbours of u that exceed u
    auto row = g_.row(u);
    std::size_t rank = 0;
    const std::size_t lo = u + 1;
    for (std::size_t w = lo / kWordBits; w <= v / kWordBits; ++w) {
      Word bits = row[w];
      if (w == lo / kWordBits) bits &= ~Word{0} << (lo % kWordBits);
      if (w == v / kWordBits) bits &= (Word{1} << (v % kWordBits)) - 1;
      rank += static_cast<std::size_t>(std::popcount(bits));
    }
    return static_cast<std::uint32_t>(offset_[u] + rank);
  }

 private:
  std::size_t higher_degree(Vertex u) const {
    std::size_t d = 0;
    for_each_bit(g_.row(u), [&](Vertex v) { d += v > u; });
    return d;
  }
  const Graph& g_;
  std::vector<std::size_t> offset_;
};

// Cliques of one target size, each forbidden from being entirely `bad`-coloured.
struct CliqueFamily {
  Colour bad = Colour::Red;
  std::size_t k = 0;  // edges per clique
  std::vector<std::uint32_t> clique_edges;  // flat, k per clique
  std::vector<std::uint32_t> occ_start, occ;  // CSR: cliques through each edge

  std::size_t cliques() const { return k == 0 ? 0 : clique_edges.size() / k; }
  std::size_t occurrences(std::uint32_t e) const { return occ_start[e + 1] - occ_start[e]; }

  void build_occurrences(std::size_t m) {
    occ_start.assign(m + 1, 0);
    for (auto e : clique_edges) ++occ_start[e + 1];
    for (std::size_t i = 0; i < m; ++i) occ_start[i + 1] += occ_start[i];
    occ.resize(clique_edges.size());
    std::vector<std::uint32_t> fill(occ_start.begin(), occ_start.end() - 1);
    for (std::size_t q = 0; q < cliques(); ++q)
      for (std::size_t j = 0; j < k; ++j) occ[fill[clique_edges[q * k + j]]++] = static_cast<std::uint32_t>(q);
  }
};

// Conflict-driven search over edge colours. Variables are host edges in lexicographic order;
// literal 2e + c says "edge e has colour c". Each K_s gives the clause "some edge is blue",
// each K_t the clause "some edge is red". Decisions follow a fixed order; conflicts are
// analysed to the first unique implication point, learned, and backjumped over.
class EdgeCdcl {
 public:
  explicit EdgeCdcl(std::size_t m)
      : m_(m), value_(m, kUnassigned), level_(m, 0), reason_(m, kNoReason), seen_(m, 0), watches_(2 * m) {}

  // Clauses of two or more literals, all added before the first fact.
  void add_clause(std::span<const std::uint32_t> lits) { add_watched(lits); }

  // Level-0 assignment that is not a consequence (pure edges, symmetry breaking, unit clauses).
  bool fact(std::uint32_t lit) {
    if (lit_true(lit)) return true;
    if (lit_false(lit)) return false;
    enqueue(lit, kNoReason);
    return propagate() == kNoReason;
  }

  bool assigned(std::uint32_t e) const { return value_[e] != kUnassigned; }
  Colour colour(std::uint32_t e) const { return static_cast<Colour>(value_[e]); }

  Verdict solve(const std::vector<std::uint32_t>& order, Colour first, BudgetClock& clock) {
    if (propagate() != kNoReason) return Verdict::Arrows;
    std::size_t scan = 0;
    std::vector<std::uint32_t> learnt;
    for (;;) {
      while (scan < order.size() && assigned(order[scan])) ++scan;
      if (scan == order.size()) return Verdict::NotArrows;
      if (!clock.tick()) return Verdict::Unknown;
      trail_lim_.push_back(trail_.size());
      enqueue(2 * order[scan] + colour_code(first), kNoReason);
      for (std::uint32_t confl; (confl = propagate()) != kNoReason;) {
        if (trail_lim_.empty()) return Verdict::Arrows;
        if (!clock.tick()) return Verdict::Unknown;
        const std::size_t back = analyse(confl, learnt);
        cancel_until(back);
        scan = 0;
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const std::uint32_t c = add_watched(learnt);
          enqueue(learnt[0], c);
        }
      }
    }
  }

 private:
  static constexpr std::uint32_t kNoReason = std::numeric_limits<std::uint32_t>::max();

  bool lit_true(std::uint32_t l) const { return value_[l >> 1] == (l & 1); }
  bool lit_false(std::uint32_t l) const { return value_[l >> 1] == ((l & 1) ^ 1); }

  std::uint32_t add_watched(std::span<const std::uint32_t> lits) {
    const auto id = static_cast<std::uint32_t>(start_.size());
    start_.push_back(static_cast<std::uint32_t>(lits_.size()));
    size_.push_back(static_cast<std::uint32_t>(lits.size()));
    lits_.insert(lits_.end(), lits.begin(), lits.end());
    watches_[lits[0]].push_back(id);
    watches_[lits[1]].push_back(id);
    return id;
  }

  void enqueue(std::uint32_t lit, std::uint32_t reason) {
    const std::uint32_t e = lit >> 1;
    value_[e] = static_cast<std::uint8_t>(lit & 1);
    level_[e] = static_cast<std::uint32_t>(trail_lim_.size());
    reason_[e] = reason;
    trail_.push_back(e);
  }

  // Returns the conflicting clause, or kNoReason.
  std::uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      const std::uint32_t e = trail_[qhead_++];
      const std::uint32_t false_lit = 2 * e + (value_[e] ^ 1);
      auto& ws = watches_[false_lit];
      std::size_t j = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::uint32_t c = ws[i];
        std::uint32_t* lits = lits_.data() + start_[c];
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (lit_true(lits[0])) {
          ws[j++] = c;
          continue;
        }
        bool moved = false;
        for (std::uint32_t k = 2; k < size_[c]; ++k)
          if (!lit_false(lits[k])) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1]].push_back(c);
            moved = true;
            break;
          }
        if (moved) continue;
        ws[j++] = c;
        if (lit_false(lits[0])) {
          for (++i; i < ws.size(); ++i) ws[j++] = ws[i];
          ws.resize(j);
          qhead_ = trail_.size();
          return c;
        }
        enqueue(lits[0], c);
      }
      ws.resize(j);
    }
    return kNoReason;
  }

  // First-UIP learning; fills `learnt` with the asserting literal first and returns the
  // level to jump back to.
  std::size_t analyse(std::uint32_t confl, std::vector<std::uint32_t>& learnt) {
    learnt.assign(1, 0);
    const std::uint32_t current = static_cast<std::uint32_t>(trail_lim_.size());
    std::size_t pending = 0;
    std::size_t idx = trail_.size();
    std::uint32_t implied = kNoReason;
    for (;;) {
      const std::uint32_t* lits = lits_.data() + start_[confl];
      for (std::uint32_t k = implied == kNoReason ? 0 : 1; k < size_[confl]; ++k) {
        const std::uint32_t e = lits[k] >> 1;
        if (seen_[e] || level_[e] == 0) continue;
        seen_[e] = 1;
        if (level_[e] == current)
          ++pending;
        else
          learnt.push_back(lits[k]);
      }
      do --idx;
      while (!seen_[trail_[idx]]);
      implied = trail_[idx];
      seen_[implied] = 0;
      if (--pending == 0) break;
      confl = reason_[implied];
    }
    learnt[0] = 2 * implied + (value_[implied] ^ 1);
    std::size_t back = 0;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      seen_[learnt[k] >> 1] = 0;
      if (level_[learnt[k] >> 1] > level_[learnt[1] >> 1]) std::swap(learnt[1], learnt[k]);
    }
    if (learnt.size() > 1) back = level_[learnt[1] >> 1];
    return back;
  }

  void cancel_until(std::size_t level) {
    if (trail_lim_.size() <= level) return;
    const std::size_t pos = trail_lim_[level];
    for (std::size_t i = pos; i < trail_.size(); ++i) value_[trail_[i]] = kUnassigned;
    trail_.resize(pos);
    trail_lim_.resize(level);
    qhead_ = pos;
  }

  std::size_t m_;
  std::vector<std::uint8_t> value_;
  std::vector<std::uint32_t> level_, reason_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<std::uint32_t> lits_, start_, size_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
};

// Edge arrowing search. With precomputed clique lists it runs EdgeCdcl; above the clique cap
// it backtracks chronologically and checks the colour classes for cliques directly.
class EdgeArrowSearch {
 public:
  EdgeArrowSearch(const Graph& g, std::size_t s, std::size_t t, const EdgeSearchOptions& opt)
      : g_(g), s_(s), t_(t), edges_(g.edges()), m_(edges_.size()), value_(m_, kUnassigned) {
    lazy_ = !precompute(opt.clique_cap);
    if (lazy_) {
      const std::size_t cells = g.n() * g.words_per_row();
      colour_rows_[0].assign(cells, 0);
      colour_rows_[1].assign(cells, 0);
    }
    build_order();
  }

  EdgeVerdict run(const SearchBudget& budget) {
    BudgetClock clock(budget);
    EdgeVerdict out;
    const Verdict v = lazy_ ? lazy_search(clock) : cdcl_search(clock);
    out.verdict = v;
    out.nodes = clock.nodes();
    if (v == Verdict::NotArrows) out.witness = witness();
    out.elapsed = clock.elapsed();
    return out;
  }

  bool lazy() const { return lazy_; }

 private:
  bool precompute(std::size_t cap) {
    const std::size_t count_s = s_ <= g_.n() ? count_cliques_capped(s_, cap) : 0;
    if (count_s > cap) return false;
    const std::size_t count_t = s_ == t_ ? count_s : (t_ <= g_.n() ? count_cliques_capped(t_, cap - count_s) : 0);
    if (count_s + count_t > cap) return false;

    EdgeIndex index(g_);
    auto fill = [&](CliqueFamily& f, std::size_t size, Colour bad) {
      f.bad = bad;
      f.k = size * (size - 1) / 2;
      if (size <= g_.n()) {
        for_each_clique(g_, size, [&](std::span<const Vertex> c) {
          for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) f.clique_edges.push_back(index(c[i], c[j]));
          return true;
        });
      }
      f.build_occurrences(m_);
    };
    fill(families_[0], s_, Colour::Red);
    if (s_ == t_) {
      families_[1] = families_[0];
      families_[1].bad = Colour::Blue;
    } else {
      fill(families_[1], t_, Colour::Blue);
    }
    return true;
  }

  std::size_t count_cliques_capped(std::size_t r, std::size_t cap) const {
    std::size_t c = 0;
    for_each_clique(g_, r, [&](std::span<const Vertex>) { return ++c <= cap; });
    return c;
  }

  void build_order() {
    order_.clear();
    std::vector<std::size_t> weight(m_, 0);
    for (std::uint32_t e = 0; e < m_; ++e) {
      if (!lazy_) weight[e] = families_[0].occurrences(e) + families_[1].occurrences(e);
      order_.push_back(e);
    }
    // most constrained edges first; ties broken by lexicographic position
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return weight[a] > weight[b]; });
  }

  // Colour tried first at a decision.
  Colour preferred() const { return t_ > s_ ? Colour::Blue : Colour::Red; }

  Verdict cdcl_search(BudgetClock& clock) {
    EdgeCdcl solver(m_);
    auto lit = [](std::uint32_t e, Colour c) { return 2 * e + colour_code(c); };
    std::vector<std::uint32_t> clause;
    for (const auto& f : families_) {
      if (f.k < 2) continue;
      for (std::size_t q = 0; q < f.cliques(); ++q) {
        clause.clear();
        for (std::size_t j = 0; j < f.k; ++j) clause.push_back(lit(f.clique_edges[q * f.k + j], opposite(f.bad)));
        solver.add_clause(clause);
      }
    }
    // a K_1 family (s or t equal 2) forces every clique edge
    for (const auto& f : families_)
      if (f.k == 1)
        for (auto e : f.clique_edges)
          if (!solver.fact(lit(e, opposite(f.bad)))) return Verdict::Arrows;
    // Edges that lie in no K_s can always be red, edges in no K_t always blue.
    for (std::uint32_t e = 0; e < m_; ++e) {
      if (solver.assigned(e)) continue;
      if (families_[0].occurrences(e) == 0 && !solver.fact(lit(e, Colour::Red))) return Verdict::Arrows;
      if (!solver.assigned(e) && families_[1].occurrences(e) == 0 && !solver.fact(lit(e, Colour::Blue)))
        return Verdict::Arrows;
    }
    // With s = t, swapping colours maps solutions to solutions, so the first open edge is red.
    if (s_ == t_) {
      for (auto e : order_)
        if (!solver.assigned(e)) {
          if (!solver.fact(lit(e, Colour::Red))) return Verdict::Arrows;
          break;
        }
    }
    const Verdict v = solver.solve(order_, preferred(), clock);
    if (v == Verdict::NotArrows)
      for (std::uint32_t e = 0; e < m_; ++e) value_[e] = static_cast<std::uint8_t>(solver.colour(e));
    return v;
  }

  void assign(std::uint32_t e, Colour c) {
    value_[e] = static_cast<std::uint8_t>(c);
    trail_.push_back(e);
    const Edge& ed = edges_[e];
    const std::size_t wpr = g_.words_per_row();
    auto& rows = colour_rows_[colour_code(c)];
    rows[ed.u * wpr + ed.v / kWordBits] |= Word{1} << (ed.v % kWordBits);
    rows[ed.v * wpr + ed.u / kWordBits] |= Word{1} << (ed.u % kWordBits);
  }

  bool completes_clique(std::uint32_t e, Colour c) const {
    const std::size_t target = c == Colour::Red ? s_ : t_;
    if (target > g_.n()) return false;
    const Edge& ed = edges_[e];
    const auto& rows = colour_rows_[colour_code(c)];
    const std::size_t wpr = g_.words_per_row();
    std::vector<Word> common(wpr);
    for (std::size_t w = 0; w < wpr; ++w) common[w] = rows[ed.u * wpr + w] & rows[ed.v * wpr + w];
    return has_clique(RowView{rows.data(), wpr}, target - 2, common);
  }

  void undo_to(std::size_t pos) {
    for (std::size_t i = trail_.size(); i-- > pos;) {
      const std::uint32_t e = trail_[i];
      const Edge& ed = edges_[e];
      const std::size_t wpr = g_.words_per_row();
      auto& rows = colour_rows_[value_[e]];
      rows[ed.u * wpr + ed.v / kWordBits] &= ~(Word{1} << (ed.v % kWordBits));
      rows[ed.v * wpr + ed.u / kWordBits] &= ~(Word{1} << (ed.u % kWordBits));
      value_[e] = kUnassigned;
    }
    trail_.resize(pos);
  }

  // Chronological backtracking in order_, each assignment checked against both colour classes.
  Verdict lazy_search(BudgetClock& clock) {
    struct Frame {
      std::size_t order_pos;
      bool flipped;
    };
    const Colour first = preferred();
    std::vector<Frame> frames;
    std::size_t pos = 0;
    auto try_assign = [&](std::size_t at, Colour c) {
      assign(order_[at], c);
      return !completes_clique(order_[at], c);
    };
    // With s = t the colour swap symmetry lets the first edge be red.
    if (m_ > 0 && s_ == t_) {
      if (!try_assign(0, Colour::Red)) return Verdict::Arrows;
      pos = 1;
    }
    for (;;) {
      if (pos == m_) return Verdict::NotArrows;
      if (!clock.tick()) return Verdict::Unknown;
      frames.push_back({pos, false});
      bool ok = try_assign(pos, first);
      while (!ok) {
        while (!frames.empty() && frames.back().flipped) {
          undo_to(frames.back().order_pos);
          frames.pop_back();
        }
        if (frames.empty()) return Verdict::Arrows;
        if (!clock.tick()) return Verdict::Unknown;
        Frame& top = frames.back();
        undo_to(top.order_pos);
        top.flipped = true;
        pos = top.order_pos;
        ok = try_assign(pos, opposite(first));
      }
      ++pos;
    }
  }

  EdgeColouring witness() const {
    std::vector<Colour> colours(m_);
    for (std::size_t e = 0; e < m_; ++e)
      colours[e] = value_[e] == kUnassigned ? Colour::Red : static_cast<Colour>(value_[e]);
    return {edges_, std::move(colours)};
  }

  const Graph& g_;
  std::size_t s_, t_;
  std::vector<Edge> edges_;
  std::size_t m_;
  std::vector<std::uint8_t> value_;
  std::vector<std::uint32_t> trail_;
  CliqueFamily families_[2];
  std::vector<std::uint32_t> order_;
  bool lazy_ = false;
  std::vector<Word> colour_rows_[2];
};

}  // namespace detail

// Decides g -> (K_s, K_t): does every red/blue colouring of E(g) contain a red K_s or a
// blue K_t? NotArrows carries a colouring that avoids both, re-verified before return.
inline EdgeVerdict arrows_edge(const Graph& g, std::size_t s, std::size_t t, const SearchBudget& budget,
                               const EdgeSearchOptions& options = {}) {
  detail::require(s >= 2 && t >= 2, "arrows_edge: clique sizes must be at least 2");
  detail::require(budget.time.count() > 0 && budget.nodes > 0, "search budget must be positive");
  detail::EdgeArrowSearch search(g, s, t, options);
  EdgeVerdict out = search.run(budget);
  if (out.not_arrows() && find_mono_clique(g, *out.witness, s, t))
    throw InternalError("arrows_edge: witness colouring contains a forbidden clique");
  return out;
}

namespace detail {

// Backtracking over vertices in index order, red first. A vertex may take a colour only
// if it does not complete an r-clique inside that colour class.
class VertexArrowSearch {
 public:
  VertexArrowSearch(const Graph& g, std::size_t r)
      : g_(g), r_(r), wpr_(g.words_per_row()), colour_(g.n(), kUnassigned) {
    classes_[0].assign(wpr_, 0);
    classes_[1].assign(wpr_, 0);
    scratch_.assign(wpr_, 0);
  }

  VertexVerdict run(const SearchBudget& budget) {
    BudgetClock clock(budget);
    VertexVerdict out;
    out.verdict = search(clock);
    out.nodes = clock.nodes();
    if (out.not_arrows()) out.witness = VertexColouring(witness());
    out.elapsed = clock.elapsed();
    return out;
  }

 private:
  bool allowed(Vertex v, Colour c) {
    const auto& cls = classes_[colour_code(c)];
    auto row = g_.row(v);
    for (std::size_t w = 0; w < wpr_; ++w) scratch_[w] = cls[w] & row[w];
    return !has_clique(RowView{g_.storage().data(), wpr_}, r_ - 1, scratch_);
  }
  void set(Vertex v, Colour c) {
    colour_[v] = static_cast<std::uint8_t>(c);
    classes_[colour_code(c)][v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void clear(Vertex v) {
    const auto c = colour_[v];
    classes_[c][v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    colour_[v] = kUnassigned;
  }

  Verdict search(BudgetClock& clock) {
    const std::size_t n = g_.n();
    // tried[v] = last colour tried at v (-1: none). Vertex 0 only gets red, by colour symmetry.
    std::vector<int> tried(n, -1);
    std::size_t v = 0;
    for (;;) {
      if (v == n) return Verdict::NotArrows;
      const int from = tried[v] + 1;
      if (tried[v] >= 0) clear(static_cast<Vertex>(v));
      const int last = v == 0 ? 0 : 1;
      bool placed = false;
      for (int c = from; c <= last && !placed; ++c) {
        if (!clock.tick()) return Verdict::Unknown;
        tried[v] = c;
        if (allowed(static_cast<Vertex>(v), static_cast<Colour>(c))) {
          set(static_cast<Vertex>(v), static_cast<Colour>(c));
          placed = true;
        }
      }
      if (placed) {
        ++v;
        if (v < n) tried[v] = -1;
      } else {
        tried[v] = -1;
        if (v == 0) return Verdict::Arrows;
        --v;
      }
    }
  }

  std::vector<Colour> witness() const {
    std::vector<Colour> out(colour_.size());
    for (std::size_t v = 0; v < colour_.size(); ++v) out[v] = static_cast<Colour>(colour_[v]);
    return out;
  }

  const Graph& g_;
  std::size_t r_;
  std::size_t wpr_;
  std::vector<std::uint8_t> colour_;
  std::vector<Word> classes_[2];
  std::vector<Word> scratch_;
};

}  // namespace detail

// Decides g -> (K_r)^v: does every red/blue colouring of V(g) have a class containing K_r?
inline VertexVerdict arrows_vertex(const Graph& g, std::size_t r, const SearchBudget& budget) {
  detail::require(r >= 2, "arrows_vertex: clique size must be at least 2");
  detail::require(budget.time.count() > 0 && budget.nodes > 0, "search budget must be positive");
  detail::VertexArrowSearch search(g, r);
  VertexVerdict out = search.run(budget);
  if (out.not_arrows() && find_mono_vertex_clique(g, *out.witness, r))
    throw InternalError("arrows_vertex: witness colouring has a monochromatic clique");
  return out;
}

}  // namespace ramsey

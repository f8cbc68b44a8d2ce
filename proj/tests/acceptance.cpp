// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ramsey/ramsey.hpp"
#include "test_graphs.hpp"

using namespace ramsey;
using namespace ramsey::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Result()>& body) {
  const auto t0 = Clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  if (!r.pass) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(t0));
  std::cout << (r.pass ? "PASS" : "FAIL") << "  " << id << ". " << name << " [" << buf << "] " << r.detail << std::endl;
}

bool mono_free(const Graph& g, const EdgeColouring& c, std::size_t s, std::size_t t) {
  if (!c.colours_exactly(g)) return false;
  const auto col = colour_matrix(g.n(), c);
  return !naive_mono_clique(col, s, 0) && !naive_mono_clique(col, t, 1);
}

bool vertex_witness_ok(const Graph& g, const VertexColouring& c, std::size_t r) {
  if (c.size() != g.n()) return false;
  for (Colour col : {Colour::Red, Colour::Blue}) {
    std::vector<Vertex> cls;
    for (Vertex v = 0; v < g.n(); ++v)
      if (c.colour(v) == col) cls.push_back(v);
    if (naive_has_clique_in(g, cls, r)) return false;
  }
  return true;
}

std::string count_of(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

// Three distinct 4-sets L, L1, L2 with |L & L1| >= 2 and |L & L2| >= 2, each a K4 of the edge
// mask g; checks e(M) >= 2|M| for M = L | L1 | L2. Bit i of an edge mask is pair i of `pairs`.
struct TripleChecker {
  int n;
  std::vector<std::uint32_t> quads;       // vertex masks of the 4-sets
  std::vector<std::uint32_t> quad_edges;  // edge masks of the 4-sets
  std::vector<std::uint32_t> set_edges;   // edge mask of every vertex subset
  std::size_t triples = 0, violations = 0;

  explicit TripleChecker(int n_) : n(n_), set_edges(1u << n_, 0) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((s >> pairs[i].first & 1) && (s >> pairs[i].second & 1)) set_edges[s] |= 1u << i;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
      if (std::popcount(s) == 4) {
        quads.push_back(s);
        quad_edges.push_back(set_edges[s]);
      }
  }

  void check(std::uint32_t g) {
    std::vector<std::uint32_t> k4;
    for (std::size_t i = 0; i < quads.size(); ++i)
      if ((g & quad_edges[i]) == quad_edges[i]) k4.push_back(quads[i]);
    if (k4.size() < 3) return;
    for (auto l : k4)
      for (auto l1 : k4) {
        if (l1 == l || std::popcount(l & l1) < 2) continue;
        for (auto l2 : k4) {
          if (l2 <= l1 || l2 == l || std::popcount(l & l2) < 2) continue;
          const std::uint32_t m = l | l1 | l2;
          ++triples;
          if (std::popcount(g & set_edges[m]) < 2 * std::popcount(m)) ++violations;
        }
      }
  }
};

std::string sweep_csv(const SweepResult& sr) {
  std::ostringstream os;
  write_csv(os, sr);
  return os.str();
}

}  // namespace

int main() {
  const auto budget60 = SearchBudget::milliseconds(60'000);

  criterion(1, "closed-form m2(K_l,K_r) = brute force, 3<=l<=r<=9, under 10 s", [] {
    const auto t0 = Clock::now();
    std::size_t checked = 0, bad = 0;
    for (long long l = 3; l <= 9; ++l)
      for (long long r = l; r <= 9; ++r) {
        ++checked;
        if (m2_asym(Graph::complete(l), Graph::complete(r)) != m2_clique_closed_form(l, r)) ++bad;
      }
    const double t = seconds_since(t0);
    return Result{bad == 0 && t < 10.0, count_of(checked - bad, checked) + " pairs agree"};
  });

  criterion(2, "m2(K_l) = (l+1)/2 for 3<=l<=10", [] {
    std::size_t bad = 0;
    for (long long l = 3; l <= 10; ++l)
      if (m2(Graph::complete(l)) != make_rational(l + 1, 2)) ++bad;
    return Result{bad == 0, std::to_string(8 - bad) + "/8 exact"};
  });

  criterion(3, "odd r in {5,7,9}: m2(K_(r+1)/2,K_r) > m2(K_(r-1)/2,K_r) exactly", [] {
    std::ostringstream detail;
    bool ok = m2(Graph::complete(2)) == make_rational(1, 2);
    for (long long r : {5, 7, 9}) {
      const Rational upper = m2_clique_closed_form((r + 1) / 2, r);
      const Rational lower = m2_asym(Graph::complete((r - 1) / 2), Graph::complete(r));
      ok = ok && upper > lower;
      detail << "r=" << r << ": " << to_string(upper) << " > " << to_string(lower) << "; ";
    }
    return Result{ok, detail.str()};
  });

  criterion(4, "Ramsey anchors K6,K5 for (3,3) and K9,K8 for (3,4), each under 60 s", [&] {
    struct Anchor {
      std::size_t n, s, t;
      bool arrows;
    };
    std::ostringstream detail;
    bool ok = true;
    for (const Anchor& a : {Anchor{6, 3, 3, true}, Anchor{5, 3, 3, false}, Anchor{9, 3, 4, true}, Anchor{8, 3, 4, false}}) {
      const Graph g = Graph::complete(a.n);
      const auto t0 = Clock::now();
      const auto v = arrows_edge(g, a.s, a.t, budget60);
      const double t = seconds_since(t0);
      bool good = t < 60.0 && (a.arrows ? v.arrows() : v.not_arrows() && mono_free(g, *v.witness, a.s, a.t));
      ok = ok && good;
      detail << "K" << a.n << "(" << a.s << "," << a.t << ")=" << verdict_name(v.verdict) << " ";
    }
    return Result{ok, detail.str()};
  });

  criterion(5, "vertex anchors K_(2r-1) arrows, K_(2r-2) does not, r in {3,4,5}", [&] {
    bool ok = true;
    for (std::size_t r : {3u, 4u, 5u}) {
      const auto yes = arrows_vertex(Graph::complete(2 * r - 1), r, budget60);
      const Graph k = Graph::complete(2 * r - 2);
      const auto no = arrows_vertex(k, r, budget60);
      ok = ok && yes.arrows() && no.not_arrows() && vertex_witness_ok(k, *no.witness, r);
    }
    return Result{ok, ""};
  });

  criterion(6, "brute-force equivalence: 200 graphs <=8 edges (edge), 200 graphs <=10 vertices (vertex)", [&] {
    std::mt19937_64 rng(606);
    std::size_t edge_bad = 0, vertex_bad = 0, edge_arrows = 0, vertex_arrows = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 3 + i % 6;
      const std::size_t m = std::min<std::size_t>(1 + rng() % 8, n * (n - 1) / 2);
      const Graph g = random_graph_with_edges(n, m, rng);
      const std::size_t s = 2 + i % 2, t = 3;
      const auto v = arrows_edge(g, s, t, budget60);
      const bool expect = brute_force_arrows_edge(g, s, t);
      if (v.unknown() || v.arrows() != expect || (v.not_arrows() && !mono_free(g, *v.witness, s, t))) ++edge_bad;
      edge_arrows += expect;
    }
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + i % 10;
      const Graph g = random_graph(n, 0.5 + 0.05 * (i % 8), rng);
      const std::size_t r = 2 + i % 3;
      const auto v = arrows_vertex(g, r, budget60);
      const bool expect = brute_force_arrows_vertex(g, r);
      if (v.unknown() || v.arrows() != expect || (v.not_arrows() && !vertex_witness_ok(g, *v.witness, r))) ++vertex_bad;
      vertex_arrows += expect;
    }
    return Result{edge_bad == 0 && vertex_bad == 0,
                  "disagreements edge=" + std::to_string(edge_bad) + " vertex=" + std::to_string(vertex_bad) +
                      " (arrowing instances " + std::to_string(edge_arrows) + ", " + std::to_string(vertex_arrows) + ")"};
  });

  criterion(7, "DRC soundness: 100 runs on gnp(200,1/2), r=2, m=20, a=10, t=2", [] {
    std::size_t verified = 0;
    for (RngSeed s = 1; s <= 100; ++s) {
      const Graph g = gnp(200, Probability::parse("1/2"), s);
      auto out = drc_extract(g, 2, 20, 10, 2, s, 16);
      if (!out.ok() || out.value().size() < 10) continue;
      const auto vs = out.value().to_vector();
      bool good = true;
      for (std::size_t i = 0; i < vs.size() && good; ++i)
        for (std::size_t j = i + 1; j < vs.size() && good; ++j) {
          std::size_t common = 0;
          for (Vertex w = 0; w < g.n(); ++w) common += g.adjacent(w, vs[i]) && g.adjacent(w, vs[j]);
          good = common >= 20;
        }
      verified += good;
    }
    return Result{verified == 100, count_of(verified, 100) + " verified"};
  });

  criterion(8, "mono_clique_via_drc: 100 random colourings of K18, r=4", [] {
    const Graph g = Graph::complete(18);
    std::size_t verified = 0, fallback = 0;
    for (RngSeed s = 1; s <= 100; ++s) {
      const auto c = EdgeColouring::random(g, s);
      auto out = mono_clique_via_drc(g, c, 4, 4, 2, 2, s);
      if (!out.ok()) continue;
      const auto& k = out.value().clique;
      const auto col = colour_matrix(18, c);
      bool good = k.vertices.size() == 4;
      for (std::size_t i = 0; i < k.vertices.size() && good; ++i)
        for (std::size_t j = i + 1; j < k.vertices.size() && good; ++j)
          good = k.vertices[i] != k.vertices[j] && col[k.vertices[i]][k.vertices[j]] == static_cast<int>(k.colour);
      verified += good;
      fallback += out.value().via_fallback;
    }
    return Result{verified == 100, count_of(verified, 100) + " verified, " + std::to_string(fallback) + " via fallback"};
  });

  criterion(9, "bipartite extension r=5, n in {10,14}, p=0.5 n^(-7/20), 50 seeds each", [] {
    std::size_t successes = 0, verified = 0, runs = 0;
    for (std::size_t n : {10u, 14u}) {
      const Probability p = Probability::from_double(0.5 * std::pow(static_cast<double>(n), -7.0 / 20.0));
      for (RngSeed s = 1; s <= 50; ++s) {
        ++runs;
        const auto pg = perturbed_bipartite(n, p, s);
        auto out = bipartite_extension(pg, 5, SearchBudget::milliseconds(10'000));
        if (!out.ok()) continue;
        ++successes;
        verified += mono_free(pg.graph, out.value(), 5, 5);
      }
    }
    return Result{successes > 0 && verified == successes,
                  count_of(verified, successes) + " successes verified (" + count_of(successes, runs) + " runs)"};
  });

  criterion(10, "K4 adversary n in {16,24}, p=0.2 n^(-0.55), 50 seeds each; >=60% pass preconditions", [] {
    std::size_t passing = 0, verified = 0, runs = 0;
    std::ostringstream per_n;
    for (std::size_t n : {16u, 24u}) {
      const Probability p = Probability::from_double(0.2 * std::pow(static_cast<double>(n), -0.55));
      std::size_t here = 0;
      for (RngSeed s = 1; s <= 50; ++s) {
        ++runs;
        const auto pg = perturbed_bipartite(n, p, s);
        auto out = k4_adversarial_colouring(pg, SearchBudget::milliseconds(10'000));
        if (!out.ok()) continue;
        ++passing;
        ++here;
        verified += mono_free(pg.graph, out.value().colouring, 4, 4);
      }
      per_n << " n=" << n << ":" << here << "/50";
    }
    return Result{verified == passing && passing * 10 >= runs * 6,
                  count_of(verified, passing) + " verified, " + count_of(passing, runs) + " passed" + per_n.str()};
  });

  criterion(11, "|E(M)| >= 2|M| over all graphs on <=8 vertices with the overlap pattern", [] {
    std::size_t triples = 0, violations = 0, graphs = 0;
    for (int n = 4; n <= 7; ++n) {
      TripleChecker tc(n);
      const int pairs = n * (n - 1) / 2;
      for (std::uint32_t g = 0; g < (1u << pairs); ++g) tc.check(g);
      graphs += std::size_t{1} << pairs;
      triples += tc.triples;
      violations += tc.violations;
    }
    // On 8 vertices the union of the three K4s is the sparsest graph containing them, and
    // e(M) only grows with extra edges, so checking those unions covers every graph.
    TripleChecker tc(8);
    for (std::size_t i = 0; i < tc.quads.size(); ++i)
      for (std::size_t j = 0; j < tc.quads.size(); ++j)
        for (std::size_t k = j + 1; k < tc.quads.size(); ++k) {
          if (i == j || i == k) continue;
          if (std::popcount(tc.quads[i] & tc.quads[j]) < 2 || std::popcount(tc.quads[i] & tc.quads[k]) < 2) continue;
          const std::uint32_t h = tc.quad_edges[i] | tc.quad_edges[j] | tc.quad_edges[k];
          const std::uint32_t m = tc.quads[i] | tc.quads[j] | tc.quads[k];
          ++triples;
          if (std::popcount(h & tc.set_edges[m]) < 2 * std::popcount(m)) ++violations;
        }
    return Result{violations == 0 && triples > 0, std::to_string(triples) + " triples over " + std::to_string(graphs) +
                                                      " graphs on <=7 vertices plus 8-vertex unions, " +
                                                      std::to_string(violations) + " counterexamples"};
  });

  criterion(12, "threshold sweep r=3, n=10..20 even, 300 trials: slope in [-1.5,-0.5], unknown < 5%, < 30 min", [] {
    const auto t0 = Clock::now();
    ExperimentConfig cfg;
    cfg.model = Model::PerturbedBipartite;
    cfg.r = 3;
    cfg.trials = 300;
    cfg.master_seed = 12;
    cfg.budget_ms = default_budget_ms(3);
    const SweepResult sr = sweep_threshold(cfg, {10, 12, 14, 16, 18, 20}, SweepOptions{});
    const double t = seconds_since(t0);
    bool ok = t < 1800.0 && sr.fit.has_value() && sr.fit->points == 6;
    std::ostringstream detail;
    for (const auto& c : sr.curves) {
      ok = ok && c.valid && c.p_half.has_value();
      for (const auto& e : c.points) ok = ok && e.unknown_fraction() < 0.05;
      detail << "n=" << c.n << ":" << (c.p_half ? format_fraction(*c.p_half) : "none") << " ";
    }
    if (sr.fit) {
      ok = ok && sr.fit->slope >= -1.5 && sr.fit->slope <= -0.5;
      detail << "slope=" << format_fraction(sr.fit->slope);
    }
    return Result{ok, detail.str()};
  });

  criterion(13, "determinism: identical config and seed give byte-identical outputs", [] {
    bool ok = true;
    ExperimentConfig cfg;
    cfg.trials = 80;
    cfg.master_seed = 13;
    const SweepOptions opt;
    const auto a = sweep_threshold(cfg, {8, 12}, opt, 1);
    const auto b = sweep_threshold(cfg, {8, 12}, opt, 4);
    ok = ok && sweep_csv(a) == sweep_csv(b) &&
         sweep_manifest(cfg, {8, 12}, opt, a).dump() == sweep_manifest(cfg, {8, 12}, opt, b).dump();

    cfg.n = 14;
    cfg.p = Probability::parse("0.3");
    std::ostringstream e1, e2;
    write_csv(e1, std::vector<Estimate>{estimate_arrow_probability(cfg, 1)});
    write_csv(e2, std::vector<Estimate>{estimate_arrow_probability(cfg, 3)});
    ok = ok && e1.str() == e2.str();

    const auto text = [](RngSeed seed) {
      std::string out;
      const auto pg = perturbed_bipartite(20, Probability::parse("0.05"), seed);
      out += to_text(pg.graph) + perturbed_sidecar_json(pg).dump();
      auto k4 = k4_adversarial_colouring(pg, SearchBudget::milliseconds(10'000));
      if (k4.ok()) out += colouring_json(k4.value().colouring, true, "k4-adversary", seed).dump();
      const auto pg12 = perturbed_bipartite(12, Probability::parse("0.05"), seed);
      auto ext = bipartite_extension(pg12, 5, SearchBudget::milliseconds(10'000));
      out += outcome_json(ext, "bipartite-extend", seed, [](const EdgeColouring& c) { return edges_json(c); }).dump();
      const Graph g = gnp(100, Probability::parse("1/2"), seed);
      auto drc = drc_extract(g, 2, 10, 10, 2, seed, 8);
      out += outcome_json(drc, "drc", seed, [](const VertexSet& u) { return Json(u.to_vector()); }).dump();
      const Graph k18 = Graph::complete(18);
      auto mc = mono_clique_via_drc(k18, EdgeColouring::random(k18, seed), 4, 4, 2, 2, seed);
      out += outcome_json(mc, "mono-clique", seed, [](const MonoCliqueResult& r) { return Json(r.clique.vertices); }).dump();
      const auto w = arrows_edge(Graph::complete(8), 3, 4, SearchBudget::milliseconds(60'000));
      out += edge_witness_json(w, 3, 4).dump();
      return out;
    };
    std::size_t same = 0;
    for (RngSeed s = 1; s <= 5; ++s) same += text(s) == text(s);
    ok = ok && same == 5;
    return Result{ok, "sweep, estimate and 5 construction seeds compared"};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

// Command-line front end: gen, density, arrow, construct, experiment.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/ramsey.hpp"

using namespace ramsey;

namespace {

constexpr int kExitError = 3;

Probability parse_p(const std::string& s) { return Probability::parse(s); }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

// ---- gen

struct GenArgs {
  std::string model = "perturbed";
  std::size_t n = 0;
  std::string p = "0";
  RngSeed seed = 1;
  std::string seed_graph;
  std::string out;
  std::string sidecar;
};

int run_gen(const GenArgs& a) {
  detail::require(!a.out.empty(), "gen: --out is required");
  if (a.model == "gnp") {
    save_graph(a.out, gnp(a.n, parse_p(a.p), a.seed));
  } else if (a.model == "bipartite") {
    save_graph(a.out, complete_bipartite(a.n).graph);
  } else if (a.model == "perturbed") {
    PerturbedGraph pg = a.seed_graph.empty() ? perturbed_bipartite(a.n, parse_p(a.p), a.seed)
                                             : perturbed_from_seed(load_graph(a.seed_graph), a.n, parse_p(a.p), a.seed);
    save_graph(a.out, pg.graph);
    save_json(a.sidecar.empty() ? a.out + ".json" : a.sidecar, perturbed_sidecar_json(pg));
  } else {
    throw ContractViolation("gen: unknown model " + a.model);
  }
  return 0;
}

// ---- density

struct DensityArgs {
  std::string graph;
  std::string asym_left;
  std::vector<long long> closed_form;
};

int run_density(const DensityArgs& a) {
  if (!a.graph.empty()) {
    const Graph g = load_graph(a.graph);
    std::cout << "vertices " << g.n() << "\n"
              << "edges " << g.edge_count() << "\n";
    if (g.n() > 0) std::cout << "rho " << to_string(rho(g)) << "\n";
    std::cout << "d2 " << to_string(d2(g)) << "\n"
              << "m2 " << to_string(m2(g)) << "\n";
    if (!a.asym_left.empty()) {
      const Graph left = load_graph(a.asym_left);
      std::cout << "d2_asym " << to_string(d2_asym(left, g)) << "\n"
                << "m2_asym " << to_string(m2_asym(left, g)) << "\n";
    }
  }
  if (!a.closed_form.empty()) {
    detail::require(a.closed_form.size() == 2, "density: --closed-form takes L R");
    std::cout << "m2_closed_form " << to_string(m2_clique_closed_form(a.closed_form[0], a.closed_form[1])) << "\n";
  }
  detail::require(!a.graph.empty() || !a.closed_form.empty(), "density: give --graph or --closed-form");
  return 0;
}

// ---- arrow

struct ArrowArgs {
  std::string graph;
  std::size_t s = 3, t = 3, r = 3;
  bool vertex = false;
  long long budget_ms = 60'000;
  std::string cnf, witness;
};

int exit_for(Verdict v) { return v == Verdict::Arrows ? 0 : v == Verdict::NotArrows ? 1 : 2; }

int run_arrow(const ArrowArgs& a) {
  const Graph g = load_graph(a.graph);
  const SearchBudget budget = SearchBudget::milliseconds(a.budget_ms);
  if (!a.cnf.empty()) {
    auto out = open_out(a.cnf);
    const CnfStats st = export_cnf(g, a.s, a.t, out);
    std::cerr << "cnf: " << st.variables << " variables, " << st.clauses << " clauses\n";
  }
  if (a.vertex) {
    const VertexVerdict v = arrows_vertex(g, a.r, budget);
    std::cout << verdict_name(v.verdict) << "\n";
    if (!a.witness.empty()) save_json(a.witness, vertex_witness_json(v, a.r));
    return exit_for(v.verdict);
  }
  const EdgeVerdict v = arrows_edge(g, a.s, a.t, budget);
  std::cout << verdict_name(v.verdict) << "\n";
  if (!a.witness.empty()) save_json(a.witness, edge_witness_json(v, a.s, a.t));
  return exit_for(v.verdict);
}

// ---- construct

struct ConstructArgs {
  std::size_t n = 12;
  std::string p = "0.05";
  RngSeed seed = 1;
  std::size_t r = 5;
  long long budget_ms = 60'000;
  std::size_t vmax = 8;
  std::string rho_min = "2";
  std::string graph, colouring;
  std::size_t m = 1, a = 2, t = 1, attempts = 32, u_floor = 0, w_floor = 0;
  std::string out, outcome;
};

template <class T>
int outcome_exit(const ConstructionOutcome<T>& o) {
  return o.ok() ? 0 : o.precondition_failed() ? 1 : 2;
}

template <class T, class F>
int report(const ConstructionOutcome<T>& o, const std::string& name, const ConstructArgs& a, F&& payload) {
  const Json j = outcome_json(o, name, a.seed, payload);
  std::cout << name << ": " << o.kind();
  if (o.precondition_failed()) std::cout << " (" << o.failure().check << ")";
  if (o.budget_exhausted()) std::cout << " (" << o.exhausted().stage << ")";
  std::cout << "\n";
  if (!a.outcome.empty()) save_json(a.outcome, j);
  return outcome_exit(o);
}

int run_construct(const std::string& which, const ConstructArgs& a) {
  const SearchBudget budget = SearchBudget::milliseconds(a.budget_ms);
  auto colouring_payload = [](const EdgeColouring& c) { return edges_json(c); };

  if (which == "bipartite-extend") {
    const auto pg = perturbed_bipartite(a.n, parse_p(a.p), a.seed);
    auto o = bipartite_extension(pg, a.r, budget);
    if (o.ok() && !a.out.empty()) save_json(a.out, colouring_json(o.value(), true, which, a.seed));
    return report(o, which, a, colouring_payload);
  }
  if (which == "k4-adversary") {
    const auto pg = perturbed_bipartite(a.n, parse_p(a.p), a.seed);
    K4AdversaryOptions opts;
    opts.vmax = a.vmax;
    opts.rho_min = parse_rational(a.rho_min);
    auto o = k4_adversarial_colouring(pg, budget, opts);
    if (o.ok() && !a.out.empty()) save_json(a.out, colouring_json(o.value().colouring, true, which, a.seed));
    return report(o, which, a, [](const K4Adversary& k) {
      Json j;
      j["u"] = k.u.to_vector();
      Json sel = Json::array();
      for (const Edge& e : k.selected) sel.push_back({e.u, e.v});
      j["selected_edges"] = sel;
      j["edges"] = edges_json(k.colouring);
      return j;
    });
  }
  if (which == "drc") {
    const Graph g = load_graph(a.graph);
    auto o = drc_extract(g, a.r, a.m, a.a, a.t, a.seed, a.attempts);
    auto payload = [](const VertexSet& u) { return Json{{"vertices", u.to_vector()}}; };
    if (!a.out.empty()) save_json(a.out, outcome_json(o, which, a.seed, payload));
    return report(o, which, a, payload);
  }
  if (which == "mono-clique") {
    const Graph g = load_graph(a.graph);
    const EdgeColouring c = a.colouring.empty() ? EdgeColouring::random(g, a.seed) : colouring_from_json(load_json(a.colouring));
    const std::size_t u_floor = a.u_floor ? a.u_floor : (a.r + 1) / 2;
    const std::size_t w_floor = a.w_floor ? a.w_floor : a.r / 2;
    auto o = mono_clique_via_drc(g, c, a.r, u_floor, w_floor, a.t, a.seed, a.attempts);
    auto payload = [](const MonoCliqueResult& res) {
      Json j;
      j["colour"] = colour_code(res.clique.colour);
      j["vertices"] = res.clique.vertices;
      j["via_fallback"] = res.via_fallback;
      return j;
    };
    if (!a.out.empty()) save_json(a.out, outcome_json(o, which, a.seed, payload));
    return report(o, which, a, payload);
  }
  throw ContractViolation("construct: unknown construction " + which);
}

// ---- experiment

struct ExperimentArgs {
  std::string model = "perturbed-bipartite";
  std::string mode = "edge-symmetric";
  std::size_t r = 3, s = 3, t = 3;
  std::vector<std::size_t> n;
  std::vector<std::string> p;
  std::vector<std::string> p_bracket;
  std::size_t trials = 100;
  RngSeed seed = 1;
  long long budget_ms = 0;
  std::size_t max_steps = 12;
  std::string out, manifest;
};

ExperimentConfig make_config(const ExperimentArgs& a) {
  ExperimentConfig cfg;
  cfg.model = parse_model(a.model);
  cfg.r = a.r;
  if (a.mode == "edge-symmetric") cfg.mode = DeciderKind::EdgeSymmetric;
  else if (a.mode == "edge-asymmetric") cfg.mode = DeciderKind::EdgeAsymmetric;
  else if (a.mode == "vertex") cfg.mode = DeciderKind::Vertex;
  else throw ContractViolation("experiment: unknown mode " + a.mode);
  cfg.s = a.s;
  cfg.t = a.t;
  cfg.trials = a.trials;
  cfg.master_seed = a.seed;
  cfg.budget_ms = a.budget_ms > 0 ? a.budget_ms : default_budget_ms(a.r);
  return cfg;
}

int run_experiment(const std::string& which, const ExperimentArgs& a) {
  detail::require(!a.n.empty(), "experiment: --n is required");
  detail::require(!a.out.empty(), "experiment: --out is required");
  ExperimentConfig cfg = make_config(a);
  const std::string manifest = a.manifest.empty() ? a.out + ".manifest.json" : a.manifest;

  if (which == "estimate") {
    detail::require(!a.p.empty(), "experiment estimate: --p is required");
    std::vector<Estimate> rows;
    for (std::size_t n : a.n)
      for (const auto& p : a.p) {
        cfg.n = n;
        cfg.p = parse_p(p);
        rows.push_back(estimate_arrow_probability(cfg));
        const Estimate& e = rows.back();
        std::cout << "n=" << n << " p=" << format_probability(e.p) << " phat=" << format_fraction(e.phat)
                  << " unknown=" << e.unknown << "\n";
      }
    auto out = open_out(a.out);
    write_csv(out, rows);
    save_json(manifest, estimate_manifest(cfg, rows));
    return 0;
  }

  SweepOptions opt;
  opt.max_steps = a.max_steps;
  if (!a.p.empty()) {
    opt.strategy = PStrategy::Grid;
    for (const auto& p : a.p) opt.grid.push_back(parse_p(p));
  } else if (!a.p_bracket.empty()) {
    detail::require(a.p_bracket.size() == 2, "experiment sweep: --p-bracket takes LO,HI");
    opt.lo = parse_rational(a.p_bracket[0]);
    opt.hi = parse_rational(a.p_bracket[1]);
  }
  const SweepResult sr = sweep_threshold(cfg, a.n, opt);
  for (const auto& c : sr.curves) {
    std::cout << "n=" << c.n << " p_half=" << (c.p_half ? format_fraction(*c.p_half) : std::string("none"));
    if (c.non_monotone) std::cout << " warning=non-monotone";
    if (!c.valid) std::cout << " warning=unknown-over-5%";
    std::cout << "\n";
  }
  if (sr.fit) std::cout << "slope=" << format_fraction(sr.fit->slope) << " residual=" << format_fraction(sr.fit->residual) << "\n";
  auto out = open_out(a.out);
  write_csv(out, sr);
  save_json(manifest, sweep_manifest(cfg, a.n, opt, sr));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey properties of randomly perturbed graphs"};
  app.set_version_flag("--version", std::string(RAMSEY_VERSION));
  app.require_subcommand(1);
  int code = 0;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a graph in the text format");
  g->add_option("--model", gen.model, "gnp | bipartite | perturbed")->check(CLI::IsMember({"gnp", "bipartite", "perturbed"}));
  g->add_option("--n", gen.n, "vertex count")->required();
  g->add_option("--p", gen.p, "edge probability (decimal or p/q)");
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--seed-graph", gen.seed_graph, "perturb this graph instead of the complete bipartite seed");
  g->add_option("--out", gen.out, "output graph file")->required();
  g->add_option("--sidecar", gen.sidecar, "sidecar JSON path (default OUT.json)");

  DensityArgs den;
  auto* d = app.add_subcommand("density", "exact densities of a graph");
  d->add_option("--graph", den.graph, "graph file");
  d->add_option("--asym-left", den.asym_left, "left graph for the asymmetric 2-density");
  d->add_option("--closed-form", den.closed_form, "L R: clique closed form m2(K_L, K_R)")->expected(2);

  ArrowArgs arr;
  auto* ar = app.add_subcommand("arrow", "decide an edge or vertex arrowing");
  ar->add_option("--graph", arr.graph, "graph file")->required();
  ar->add_option("--s", arr.s, "red clique size");
  ar->add_option("--t", arr.t, "blue clique size");
  ar->add_flag("--vertex", arr.vertex, "vertex arrowing");
  ar->add_option("--r", arr.r, "clique size for --vertex");
  ar->add_option("--budget-ms", arr.budget_ms, "time budget");
  ar->add_option("--cnf", arr.cnf, "write the DIMACS encoding here");
  ar->add_option("--witness", arr.witness, "write the verdict and witness JSON here");

  ConstructArgs con;
  std::string construction;
  auto* c = app.add_subcommand("construct", "run a construction");
  c->add_option("construction", construction, "bipartite-extend | k4-adversary | drc | mono-clique")
      ->required()
      ->check(CLI::IsMember({"bipartite-extend", "k4-adversary", "drc", "mono-clique"}));
  c->add_option("--n", con.n, "vertex count (perturbed constructions)");
  c->add_option("--p", con.p, "edge probability");
  c->add_option("--seed", con.seed, "RNG seed");
  c->add_option("--r", con.r, "clique size");
  c->add_option("--budget-ms", con.budget_ms, "search budget per stage");
  c->add_option("--vmax", con.vmax, "largest dense subgraph checked (k4-adversary)");
  c->add_option("--rho-min", con.rho_min, "density threshold (k4-adversary)");
  c->add_option("--graph", con.graph, "host graph (drc, mono-clique)");
  c->add_option("--colouring", con.colouring, "colouring JSON (mono-clique; default random from --seed)");
  c->add_option("--m", con.m, "common neighbours per r-subset (drc)");
  c->add_option("--a", con.a, "output size (drc)");
  c->add_option("--t", con.t, "sampled vertices (drc, mono-clique)");
  c->add_option("--attempts", con.attempts, "DRC attempts");
  c->add_option("--u-floor", con.u_floor, "mono-clique: DRC target size");
  c->add_option("--w-floor", con.w_floor, "mono-clique: common neighbour demand");
  c->add_option("--out", con.out, "colouring JSON (or outcome JSON for drc, mono-clique)");
  c->add_option("--outcome", con.outcome, "outcome JSON with precondition witnesses");

  ExperimentArgs ex;
  std::string experiment;
  auto* e = app.add_subcommand("experiment", "Monte Carlo estimates and threshold sweeps");
  e->add_option("kind", experiment, "estimate | sweep")->required()->check(CLI::IsMember({"estimate", "sweep"}));
  e->add_option("--model", ex.model, "perturbed-bipartite | gnp");
  e->add_option("--mode", ex.mode, "edge-symmetric | edge-asymmetric | vertex");
  e->add_option("--r", ex.r, "clique size");
  e->add_option("--s", ex.s, "red clique size (edge-asymmetric)");
  e->add_option("--t", ex.t, "blue clique size (edge-asymmetric)");
  e->add_option("--n", ex.n, "vertex counts, comma separated")->delimiter(',')->required();
  e->add_option("--p", ex.p, "probabilities, comma separated (sweep: a grid)")->delimiter(',');
  e->add_option("--p-bracket", ex.p_bracket, "LO,HI bisection bracket (sweep)")->delimiter(',');
  e->add_option("--trials", ex.trials, "trials per point");
  e->add_option("--seed", ex.seed, "master seed");
  e->add_option("--budget-ms", ex.budget_ms, "per-trial budget (default 2000 for r=3, else 10000)");
  e->add_option("--max-steps", ex.max_steps, "bisection steps");
  e->add_option("--out", ex.out, "results CSV")->required();
  e->add_option("--manifest", ex.manifest, "manifest JSON (default OUT.manifest.json)");

  try {
    app.parse(argc, argv);
    if (g->parsed()) code = run_gen(gen);
    if (d->parsed()) code = run_density(den);
    if (ar->parsed()) code = run_arrow(arr);
    if (c->parsed()) code = run_construct(construction, con);
    if (e->parsed()) code = run_experiment(experiment, ex);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return code;
}

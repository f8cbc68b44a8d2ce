#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/constructions/outcome.hpp"
#include "ramsey/experiments.hpp"
#include "ramsey/generators.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

inline Json edges_json(const EdgeColouring& c) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    edges.push_back({c.edges()[i].u, c.edges()[i].v, colour_code(c.colour(i))});
  return edges;
}

inline EdgeColouring colouring_from_edges_json(const Json& edges) {
  if (!edges.is_array()) throw ParseError("colouring: \"edges\" must be an array");
  std::vector<std::pair<Edge, Colour>> items;
  for (const auto& item : edges) {
    if (!item.is_array() || item.size() != 3) throw ParseError("colouring: each edge must be [u, v, colour]");
    const auto u = item[0].get<long long>(), v = item[1].get<long long>(), c = item[2].get<long long>();
    if (u < 0 || v < 0 || u == v || (c != 0 && c != 1)) throw ParseError("colouring: bad edge entry " + item.dump());
    items.push_back({Edge(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))),
                     c == 0 ? Colour::Red : Colour::Blue});
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Edge> es;
  std::vector<Colour> cs;
  for (const auto& [e, c] : items) {
    if (!es.empty() && es.back() == e) throw ParseError("colouring: duplicate edge");
    es.push_back(e);
    cs.push_back(c);
  }
  return {std::move(es), std::move(cs)};
}

// {edges: [[u, v, colour]...], verified, construction, seed}
inline Json colouring_json(const EdgeColouring& c, bool verified, const std::string& construction, RngSeed seed) {
  Json j;
  j["edges"] = edges_json(c);
  j["verified"] = verified;
  j["construction"] = construction;
  j["seed"] = seed;
  return j;
}

inline EdgeColouring colouring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("edges")) throw ParseError("colouring: expected an object with \"edges\"");
  return colouring_from_edges_json(j.at("edges"));
}

inline Json failure_json(const PreconditionFailure& f) {
  Json j;
  j["check"] = f.check;
  j["vertices"] = f.vertices;
  if (f.colour) j["colour"] = colour_code(*f.colour);
  if (f.colouring) j["colouring"] = edges_json(*f.colouring);
  return j;
}

// Outcome wrapper; `payload` renders the success value.
template <class T, class F>
Json outcome_json(const ConstructionOutcome<T>& out, const std::string& construction, RngSeed seed, F&& payload) {
  Json j;
  j["construction"] = construction;
  j["seed"] = seed;
  j["outcome"] = out.kind();
  if (out.ok())
    j["result"] = payload(out.value());
  else if (out.precondition_failed())
    j["failure"] = failure_json(out.failure());
  else
    j["stage"] = out.exhausted().stage;
  return j;
}

inline Json edge_witness_json(const EdgeVerdict& v, std::size_t s, std::size_t t) {
  Json j;
  j["kind"] = "edge";
  j["s"] = s;
  j["t"] = t;
  j["verdict"] = verdict_name(v.verdict);
  if (v.witness) j["edges"] = edges_json(*v.witness);
  return j;
}

inline Json vertex_witness_json(const VertexVerdict& v, std::size_t r) {
  Json j;
  j["kind"] = "vertex";
  j["r"] = r;
  j["verdict"] = verdict_name(v.verdict);
  if (v.witness) {
    Json vs = Json::array();
    for (Vertex i = 0; i < v.witness->size(); ++i) vs.push_back({i, colour_code(v.witness->colour(i))});
    j["vertices"] = vs;
  }
  return j;
}

// {n, p, seed, seed_kind, partition, seed_edge_count, random_edge_count}
inline Json perturbed_sidecar_json(const PerturbedGraph& pg) {
  Json j;
  j["n"] = pg.graph.n();
  j["p"] = format_probability(pg.p);
  j["seed"] = pg.rng_seed;
  j["seed_kind"] = seed_kind_name(pg.seed_kind);
  if (pg.partition)
    j["partition"] = {pg.partition->first.to_vector(), pg.partition->second.to_vector()};
  else
    j["partition"] = nullptr;
  j["seed_edge_count"] = pg.seed_edges.size();
  j["random_edge_count"] = pg.random_edges.size();
  return j;
}

inline Json config_json(const ExperimentConfig& cfg) {
  Json j;
  j["model"] = model_name(cfg.model);
  j["r"] = cfg.r;
  j["mode"] = decider_name(cfg.mode);
  if (cfg.mode == DeciderKind::EdgeAsymmetric) {
    j["s"] = cfg.s;
    j["t"] = cfg.t;
  }
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["budget_ms"] = cfg.budget_ms;
  return j;
}

inline Json estimate_manifest(const ExperimentConfig& cfg, const std::vector<Estimate>& rows) {
  Json j;
  j["version"] = RAMSEY_VERSION;
  j["command"] = "estimate";
  j["config"] = config_json(cfg);
  Json points = Json::array();
  for (const auto& e : rows) points.push_back({{"n", e.n}, {"p", format_probability(e.p)}});
  j["points"] = points;
  return j;
}

inline Json sweep_manifest(const ExperimentConfig& cfg, const std::vector<std::size_t>& n_list,
                           const SweepOptions& opt, const SweepResult& sr) {
  Json j;
  j["version"] = RAMSEY_VERSION;
  j["command"] = "sweep";
  j["config"] = config_json(cfg);
  j["n"] = n_list;
  j["strategy"] = opt.strategy == PStrategy::Grid ? "grid" : "bisection";
  if (opt.strategy == PStrategy::Grid) {
    Json grid = Json::array();
    for (const auto& p : opt.grid) grid.push_back(format_probability(p));
    j["grid"] = grid;
  } else {
    j["bracket"] = {to_string(opt.lo), to_string(opt.hi)};
    j["max_steps"] = opt.max_steps;
  }
  Json curves = Json::array();
  for (const auto& c : sr.curves) {
    Json cj;
    cj["n"] = c.n;
    cj["p_half"] = c.p_half ? Json(format_fraction(*c.p_half)) : Json(nullptr);
    cj["bracket"] = c.bracket ? Json{format_fraction(c.bracket->lo), format_fraction(c.bracket->hi)} : Json(nullptr);
    cj["non_monotone"] = c.non_monotone;
    cj["valid"] = c.valid;
    curves.push_back(cj);
  }
  j["curves"] = curves;
  if (sr.fit) {
    j["fit"] = {{"slope", format_fraction(sr.fit->slope)},
                {"intercept", format_fraction(sr.fit->intercept)},
                {"residual", format_fraction(sr.fit->residual)},
                {"points", sr.fit->points}};
  } else {
    j["fit"] = nullptr;
  }
  return j;
}

inline void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace ramsey

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/generators.hpp"

namespace ramsey {

enum class Model { PerturbedBipartite, Gnp };
enum class DeciderKind { EdgeSymmetric, EdgeAsymmetric, Vertex };

inline const char* model_name(Model m) { return m == Model::PerturbedBipartite ? "perturbed-bipartite" : "gnp"; }

inline Model parse_model(const std::string& s) {
  if (s == "perturbed-bipartite") return Model::PerturbedBipartite;
  if (s == "gnp") return Model::Gnp;
  throw ContractViolation("unknown model: " + s);
}

inline const char* decider_name(DeciderKind k) {
  switch (k) {
    case DeciderKind::EdgeSymmetric: return "edge-symmetric";
    case DeciderKind::EdgeAsymmetric: return "edge-asymmetric";
    default: return "vertex";
  }
}

// 2 s for r = 3, 10 s for larger targets.
inline long long default_budget_ms(std::size_t r) { return r <= 3 ? 2'000 : 10'000; }

struct ExperimentConfig {
  Model model = Model::PerturbedBipartite;
  std::size_t r = 3;
  DeciderKind mode = DeciderKind::EdgeSymmetric;
  std::size_t s = 0, t = 0;  // edge-asymmetric targets
  std::size_t n = 10;
  Probability p;
  std::size_t trials = 100;
  RngSeed master_seed = 1;
  long long budget_ms = 2'000;

  void validate() const {
    detail::require(trials >= 1, "experiment: trials must be at least 1");
    detail::require(budget_ms > 0, "experiment: budget must be positive");
    detail::require(r >= 2, "experiment: r must be at least 2");
    if (mode == DeciderKind::EdgeAsymmetric) detail::require(s >= 2 && t >= 2, "experiment: s and t must be at least 2");
    if (model == Model::PerturbedBipartite) detail::require(n >= 2, "experiment: perturbed model needs n >= 2");
  }
};

struct TrialRecord {
  std::size_t index = 0;
  Verdict verdict = Verdict::Unknown;
  double elapsed_ms = 0;  // wall time; kept out of persisted files
  std::size_t m_seed = 0, m_random = 0;
};

struct Interval {
  double lo = 0, hi = 1;
};

// Wilson score interval at 95%.
inline Interval wilson_interval(std::size_t successes, std::size_t total) {
  if (total == 0) return {0, 1};
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(total);
  const double ph = static_cast<double>(successes) / nn;
  const double denom = 1 + z * z / nn;
  const double centre = (ph + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn)) / denom;
  return {successes == 0 ? 0.0 : std::max(0.0, centre - half), successes == total ? 1.0 : std::min(1.0, centre + half)};
}

struct Estimate {
  std::size_t n = 0;
  Probability p;
  std::size_t trials = 0, arrows = 0, not_arrows = 0, unknown = 0;
  double phat = 0;
  Interval ci;
  std::vector<TrialRecord> records;

  double unknown_fraction() const { return trials == 0 ? 0 : static_cast<double>(unknown) / static_cast<double>(trials); }
  bool valid() const { return unknown_fraction() < 0.05; }
};

// Worker count: RAMSEY_WORKERS if set and positive, otherwise the hardware count.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("RAMSEY_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(i) for i in [0, count) on `workers` threads. Results are written by index, so the
// output does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, std::size_t workers, F&& f) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

inline TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t index) {
  const RngSeed seed = derive_seed(cfg.master_seed, index);
  TrialRecord rec;
  rec.index = index;
  Graph g;
  if (cfg.model == Model::PerturbedBipartite) {
    PerturbedGraph pg = perturbed_bipartite(cfg.n, cfg.p, seed);
    rec.m_seed = pg.seed_edges.size();
    rec.m_random = pg.random_edges.size();
    g = std::move(pg.graph);
  } else {
    g = gnp(cfg.n, cfg.p, seed);
    rec.m_random = g.edge_count();
  }
  const SearchBudget budget = SearchBudget::milliseconds(cfg.budget_ms);
  const auto start = std::chrono::steady_clock::now();
  switch (cfg.mode) {
    case DeciderKind::EdgeSymmetric: rec.verdict = arrows_edge(g, cfg.r, cfg.r, budget).verdict; break;
    case DeciderKind::EdgeAsymmetric: rec.verdict = arrows_edge(g, cfg.s, cfg.t, budget).verdict; break;
    case DeciderKind::Vertex: rec.verdict = arrows_vertex(g, cfg.r, budget).verdict; break;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

inline Estimate summarise(std::size_t n, const Probability& p, std::vector<TrialRecord> records) {
  Estimate est;
  est.n = n;
  est.p = p;
  est.trials = records.size();
  for (const auto& r : records) {
    if (r.verdict == Verdict::Arrows) ++est.arrows;
    else if (r.verdict == Verdict::NotArrows) ++est.not_arrows;
    else ++est.unknown;
  }
  const std::size_t decided = est.arrows + est.not_arrows;
  if (decided == 0) throw DegenerateEstimate("every trial ended with an unknown verdict");
  est.phat = static_cast<double>(est.arrows) / static_cast<double>(decided);
  est.ci = wilson_interval(est.arrows, decided);
  est.records = std::move(records);
  return est;
}

// Monte Carlo estimate of Pr(model graph arrows the target). Trial i uses seed
// derive_seed(master_seed, i), so the graphs are coupled across p.
inline Estimate estimate_arrow_probability(const ExperimentConfig& cfg, std::size_t workers = worker_count()) {
  cfg.validate();
  std::vector<TrialRecord> records(cfg.trials);
  parallel_for(cfg.trials, workers, [&](std::size_t i) { records[i] = run_trial(cfg, i); });
  return summarise(cfg.n, cfg.p, std::move(records));
}

enum class PStrategy { Grid, Bisection };

struct SweepOptions {
  PStrategy strategy = PStrategy::Bisection;
  std::vector<Probability> grid;       // strictly increasing, for Grid
  Rational lo = 0, hi = 1;             // bracket, for Bisection
  std::size_t max_steps = 12;
  double target_lo = 0.4, target_hi = 0.6;
};

struct SweepCurve {
  std::size_t n = 0;
  std::vector<Estimate> points;     // p strictly increasing
  std::optional<double> p_half;
  std::optional<Interval> bracket;  // p values with phat on either side of 1/2
  bool non_monotone = false;
  bool valid = true;                // every point used has unknown fraction < 5%
};

struct ExponentFit {
  double slope = 0, intercept = 0, residual = 0;
  std::size_t points = 0;
};

struct SweepResult {
  std::vector<SweepCurve> curves;
  std::optional<ExponentFit> fit;
};

namespace detail {

inline void finish_curve(SweepCurve& c) {
  std::sort(c.points.begin(), c.points.end(),
            [](const Estimate& a, const Estimate& b) { return a.p.threshold() < b.p.threshold(); });
  // Decreasing beyond both intervals counts as non-monotone.
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t j = i + 1; j < c.points.size(); ++j)
      if (c.points[j].ci.hi < c.points[i].ci.lo) c.non_monotone = true;
}

inline double interpolate_half(const Estimate& a, const Estimate& b) {
  if (b.phat == a.phat) return (a.p.value() + b.p.value()) / 2;
  return a.p.value() + (0.5 - a.phat) * (b.p.value() - a.p.value()) / (b.phat - a.phat);
}

}  // namespace detail

inline SweepCurve sweep_one(const ExperimentConfig& base, std::size_t n, const SweepOptions& opt, std::size_t workers) {
  ExperimentConfig cfg = base;
  cfg.n = n;
  SweepCurve curve;
  curve.n = n;
  auto run = [&](const Probability& p) -> const Estimate& {
    cfg.p = p;
    curve.points.push_back(estimate_arrow_probability(cfg, workers));
    if (!curve.points.back().valid()) curve.valid = false;
    return curve.points.back();
  };

  if (opt.strategy == PStrategy::Grid) {
    for (std::size_t i = 1; i < opt.grid.size(); ++i)
      detail::require(opt.grid[i - 1].threshold() < opt.grid[i].threshold(), "sweep: grid must be strictly increasing");
    for (const auto& p : opt.grid) run(p);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      const Estimate& a = curve.points[i - 1];
      const Estimate& b = curve.points[i];
      if (a.phat < 0.5 && b.phat >= 0.5) {
        curve.bracket = Interval{a.p.value(), b.p.value()};
        curve.p_half = detail::interpolate_half(a, b);
        break;
      }
    }
    detail::finish_curve(curve);
    return curve;
  }

  detail::require(opt.lo >= 0 && opt.lo < opt.hi && opt.hi <= 1, "sweep: bisection bracket must satisfy 0 <= lo < hi <= 1");
  Rational lo = opt.lo, hi = opt.hi;
  const double phat_lo = run(Probability::from_rational(lo)).phat;
  const double phat_hi = run(Probability::from_rational(hi)).phat;
  if (phat_lo < 0.5 && phat_hi >= 0.5) {
    std::size_t lo_idx = 0, hi_idx = 1;
    for (std::size_t step = 0; step < opt.max_steps; ++step) {
      const Rational mid = (lo + hi) / 2;
      const Estimate& e = run(Probability::from_rational(mid));
      if (e.phat >= opt.target_lo && e.phat <= opt.target_hi) {
        curve.p_half = e.p.value();
        break;
      }
      if (e.phat < 0.5) {
        lo = mid;
        lo_idx = curve.points.size() - 1;
      } else {
        hi = mid;
        hi_idx = curve.points.size() - 1;
      }
    }
    curve.bracket = Interval{to_double(lo), to_double(hi)};
    if (!curve.p_half) curve.p_half = detail::interpolate_half(curve.points[lo_idx], curve.points[hi_idx]);
  }
  detail::finish_curve(curve);
  return curve;
}

// Least squares of log p_half against log n; residual is the sum of squared errors.
inline ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& n_and_p_half) {
  if (n_and_p_half.size() < 3) throw InsufficientData("fit_exponent: needs at least 3 crossing estimates");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(n_and_p_half.size());
  for (auto [n, p] : n_and_p_half) {
    detail::require(n > 0 && p > 0, "fit_exponent: n and p_half must be positive");
    const double x = std::log(n), y = std::log(p);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw InsufficientData("fit_exponent: all n values are equal");
  ExponentFit fit;
  fit.slope = (k * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / k;
  fit.points = n_and_p_half.size();
  for (auto [n, p] : n_and_p_half) {
    const double e = std::log(p) - (fit.intercept + fit.slope * std::log(n));
    fit.residual += e * e;
  }
  return fit;
}

// Uses curves that have a crossing and no invalid points.
inline ExponentFit fit_exponent(const SweepResult& sr) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& c : sr.curves)
    if (c.valid && c.p_half) pts.emplace_back(static_cast<double>(c.n), *c.p_half);
  return fit_exponent(pts);
}

inline SweepResult sweep_threshold(const ExperimentConfig& base, const std::vector<std::size_t>& n_list,
                                   const SweepOptions& opt, std::size_t workers = worker_count()) {
  detail::require(!n_list.empty(), "sweep: n list is empty");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    detail::require(n_list[i - 1] < n_list[i], "sweep: n list must be strictly ascending");
  SweepResult out;
  for (std::size_t n : n_list) out.curves.push_back(sweep_one(base, n, opt, workers));
  try {
    out.fit = fit_exponent(out);
  } catch (const InsufficientData&) {
  }
  return out;
}

inline std::string format_probability(const Probability& p) {
  if (p.exact()) return to_string(*p.exact());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p.value());
  return buf;
}

inline std::string format_fraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline constexpr const char* kCsvHeader = "n,p,trials,arrows,notarrows,unknown,phat,ci_lo,ci_hi";

inline void write_csv_row(std::ostream& os, const Estimate& e) {
  os << e.n << ',' << format_probability(e.p) << ',' << e.trials << ',' << e.arrows << ',' << e.not_arrows << ','
     << e.unknown << ',' << format_fraction(e.phat) << ',' << format_fraction(e.ci.lo) << ','
     << format_fraction(e.ci.hi) << '\n';
}

// One row per (n, p) point; no field needs quoting, so rows are plain RFC 4180 with LF endings.
inline void write_csv(std::ostream& os, const std::vector<Estimate>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& e : rows) write_csv_row(os, e);
}

inline void write_csv(std::ostream& os, const SweepResult& sr) {
  os << kCsvHeader << '\n';
  for (const auto& c : sr.curves)
    for (const auto& e : c.points) write_csv_row(os, e);
}

}  // namespace ramsey

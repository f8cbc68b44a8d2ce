// Perturbs K_{10,10} with G(20, p), colours it with the K4 adversary and estimates how often
// the perturbed graph arrows (K3, K3).

#include <iostream>

#include "ramsey/constructions.hpp"
#include "ramsey/experiments.hpp"

int main() {
  using namespace ramsey;
  const auto pg = perturbed_bipartite(20, Probability::parse("0.05"), 11);
  std::cout << "edges: " << pg.seed_edges.size() << " seed + " << pg.random_edges.size() << " random\n";
  auto out = k4_adversarial_colouring(pg, SearchBudget::milliseconds(10'000));
  std::cout << "k4 adversary: " << out.kind() << "\n";
  if (out.ok()) std::cout << "  red edges " << out.value().colouring.count(Colour::Red) << "\n";

  ExperimentConfig cfg;
  cfg.n = 16;
  cfg.trials = 200;
  for (const char* p : {"0.1", "0.25", "0.4"}) {
    cfg.p = Probability::parse(p);
    const Estimate e = estimate_arrow_probability(cfg);
    std::cout << "n=16 p=" << p << " phat=" << e.phat << " [" << e.ci.lo << ", " << e.ci.hi << "]\n";
  }
}

// Decides K5 -> (K3, K3) and K6 -> (K3, K3), printing the K5 witness.

#include <iostream>

#include "ramsey/arrowing.hpp"

int main() {
  using namespace ramsey;
  const auto budget = SearchBudget::milliseconds(10'000);
  for (std::size_t n : {5, 6}) {
    const auto v = arrows_edge(Graph::complete(n), 3, 3, budget);
    std::cout << "K" << n << " -> (K3, K3): " << verdict_name(v.verdict) << "\n";
    if (v.witness)
      for (std::size_t i = 0; i < v.witness->size(); ++i) {
        const Edge& e = v.witness->edges()[i];
        std::cout << "  " << e.u << "-" << e.v << " " << colour_name(v.witness->colour(i)) << "\n";
      }
  }
}

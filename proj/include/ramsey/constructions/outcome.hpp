#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ramsey/colouring.hpp"

namespace ramsey {

// Which precondition failed, with enough data to re-check it independently.
struct PreconditionFailure {
  std::string check;
  std::vector<Vertex> vertices;          // offending clique or vertex set, original labels
  std::optional<Colour> colour;          // colour of an offending monochromatic clique
  std::optional<EdgeColouring> colouring;  // restricted colouring certifying the failure
};

struct BudgetExhausted {
  std::string stage;
};

template <class T>
class ConstructionOutcome {
 public:
  ConstructionOutcome(T value) : state_(std::move(value)) {}
  ConstructionOutcome(PreconditionFailure f) : state_(std::move(f)) {}
  ConstructionOutcome(BudgetExhausted b) : state_(std::move(b)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  bool precondition_failed() const { return std::holds_alternative<PreconditionFailure>(state_); }
  bool budget_exhausted() const { return std::holds_alternative<BudgetExhausted>(state_); }

  const T& value() const { return std::get<T>(state_); }
  const PreconditionFailure& failure() const { return std::get<PreconditionFailure>(state_); }
  const BudgetExhausted& exhausted() const { return std::get<BudgetExhausted>(state_); }

  const char* kind() const {
    return ok() ? "success" : precondition_failed() ? "precondition_failed" : "budget_exhausted";
  }

 private:
  std::variant<T, PreconditionFailure, BudgetExhausted> state_;
};

// Colouring restricted to the edges with both endpoints in s (labels unchanged).
inline EdgeColouring restrict_colouring(const EdgeColouring& c, const VertexSet& s) {
  std::vector<Edge> edges;
  std::vector<Colour> colours;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Edge& e = c.edges()[i];
    if (s.contains(e.u) && s.contains(e.v)) {
      edges.push_back(e);
      colours.push_back(c.colour(i));
    }
  }
  return {std::move(edges), std::move(colours)};
}

}  // namespace ramsey

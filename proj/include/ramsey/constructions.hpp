#pragma once

#include "ramsey/constructions/bipartite_extension.hpp"
#include "ramsey/constructions/dense_subgraph.hpp"
#include "ramsey/constructions/drc.hpp"
#include "ramsey/constructions/k4_adversary.hpp"
#include "ramsey/constructions/mono_clique.hpp"
#include "ramsey/constructions/outcome.hpp"

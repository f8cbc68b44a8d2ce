#pragma once

#include "ramsey/arrowing.hpp"
#include "ramsey/cliques.hpp"
#include "ramsey/cnf.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/error.hpp"
#include "ramsey/experiments.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/vertex_set.hpp"

#pragma once

// Umbrella header for the modk library.

#include "modk/errors.hpp"
#include "modk/rng.hpp"
#include "modk/graph.hpp"
#include "modk/edge_coloring.hpp"
#include "modk/edgelist.hpp"
#include "modk/bipartite.hpp"
#include "modk/matching.hpp"
#include "modk/gnp.hpp"
#include "modk/binomial_mod_k.hpp"
#include "modk/bijumbled.hpp"
#include "modk/class_checks.hpp"
#include "modk/star_forest.hpp"
#include "modk/coloring_engine.hpp"
#include "modk/k1kk.hpp"
#include "modk/certificates.hpp"
#include "modk/exact_solver.hpp"
#include "modk/experiment.hpp"

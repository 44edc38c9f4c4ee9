#pragma once

#include <random>

#include "minenum/core.hpp"

namespace minenum {

/// Uniform simple graph with exactly min(m, C(n,2)) edges.
Graph random_graph(std::mt19937_64& rng, int n, int m);

/// Random connected graph: a random spanning tree plus extra edges up to m.
Graph random_connected_graph(std::mt19937_64& rng, int n, int m);

/// Random hypergraph with m edges of size 2..rank (clamped to n).
Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int rank);

}  // namespace minenum

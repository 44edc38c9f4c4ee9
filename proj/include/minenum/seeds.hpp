#pragma once

#include "minenum/property.hpp"

namespace minenum {

// Polynomial-time seed constructors. Each returns either a minimal Pi-set of
// size <= c*k or a certificate that no (Pi,k)-set exists (raw approximate
// size > c*k). All greedy ties break by smallest identifier and every seed is
// minimalized before return.

/// Greedy maximal matching, cover = matched endpoints, minimalized. c = 2.
SeedResult vc_seed(const Graph& g, int k);

/// Greedy maximal matching returned directly; a maximal matching is already a
/// minimal edge dominating set. c = 2.
SeedResult eds_seed(const Graph& g, int k);

/// Greedy domination (largest undominated-coverage first), minimalized.
/// c = H(max_degree + 1), the harmonic set-cover bound.
SeedResult ds_seed(const Graph& g, int k);

/// Local-ratio over the two minimal obstructions to star forests (triangles
/// and 3-edge paths): delete all 3 edges of the lexicographically smallest
/// obstruction until none remain, then minimalize. c = 3.
SeedResult sfed_seed(const Graph& g, int k);

/// Local-ratio: delete an over-degree vertex together with its first d+1
/// neighbors until max degree <= d, then minimalize. c = d + 2.
SeedResult bdd_seed(const Graph& g, int degree_bound, int k);

/// Scan hyperedges in order, adding every vertex of each unhit edge, then
/// minimalize. c = rank.
SeedResult hs_seed(const Hypergraph& h, int k);

/// Metric-closure MST over the terminals expanded to shortest paths, then
/// minimalized. c = 2. Disconnected terminals yield a structural
/// infeasibility certificate.
SeedResult steiner_seed(const Graph& g, const ElementSet& terminals, int k);

/// Greedy maximal matching in ascending edge order (shared helper).
ElementSet maximal_matching(const Graph& g);

/// BFS distances from a source; -1 where unreachable. Deterministic
/// (ascending neighbor scan).
std::vector<int> bfs_distances(const Graph& g, int source);

double harmonic(int n);

}  // namespace minenum

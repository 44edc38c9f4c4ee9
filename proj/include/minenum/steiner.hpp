#pragma once

#include <functional>

#include "minenum/property.hpp"

namespace minenum {

/// Multigraph obtained by identifying the two components of a Steiner tree
/// minus one edge into super-vertices s and t. Parallel edges are kept with
/// distinct identities; self-loops are dropped. Vertex ids stay in the
/// original space (contracted vertices map onto s or t).
struct ContractedMultigraph {
    int vertex_count = 0;
    int s = -1;
    int t = -1;
    struct MultiEdge {
        int a = -1, b = -1;
        int orig = -1;  // original edge id (back_map; injective)
    };
    std::vector<MultiEdge> edges;
    std::vector<std::vector<int>> incidence;  // per vertex, edge indices sorted by (nbr, idx)
};

/// Simple s-t path reported as original edge identifiers in path order.
struct PathRecord {
    std::vector<int> edges;
    int length = 0;
};

/// Splits tree_edges - x into components C1, C2 and contracts them. Throws
/// when tree_edges is not a tree or when a side of the split carries no
/// terminal weight (callers pass minimal Steiner subgraphs).
ContractedMultigraph contract_for_edge(const Graph& g, const ElementSet& tree_edges, int x);

/// Deviation-based enumeration of every simple s-t path of length at most k,
/// each exactly once, in nondecreasing length: a priority pool of
/// (path, branch index, forbidden edge set) tuples, popping the shortest and
/// re-branching at every later deviation position (the same-position branch
/// accumulates its forbidden set). Unit lengths via BFS.
long long k_bounded_st_paths(const ContractedMultigraph& g, int k,
                             const std::function<bool(const PathRecord&)>& emit);

/// Streams the input-restricted family for Steiner subgraphs: every Y is the
/// edge set of a path reconnecting the two components of tree_edges - x whose
/// internal vertices avoid both components. Exact (factor 1).
long long restricted_steiner(const Graph& g, const ElementSet& terminals, int k,
                             const ElementSet& tree_edges, int x,
                             const std::function<bool(const ElementSet&)>& yield);

/// Property registration; rejects empty or disconnected terminal sets.
PropertyInstance make_steiner_property(std::shared_ptr<const Graph> g, ElementSet terminals);

}  // namespace minenum

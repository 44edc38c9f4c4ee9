#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <unordered_set>

#include "minenum/property.hpp"

namespace minenum {

/// One emitted minimal Pi-set with its discovery metadata.
struct SolutionRecord {
    ElementSet solution;
    int size = 0;
    bool within_budget = false;               // size <= k
    std::optional<ElementSet> parent;         // expanded node that produced it
};

/// Sink for the emission stream; return false to stop the traversal cleanly.
using EmitFn = std::function<bool(const SolutionRecord&)>;

/// Queue of sets pending expansion plus the deduplicating archive of every
/// set ever emitted. The queue is always a subset of the archive.
struct TraversalState {
    std::deque<ElementSet> queue;
    std::unordered_set<ElementSet, ElementSetHash> archive;
    int budget_k = 0;
    int seed_size = 0;
    long long expansion_cap = 0;  // size bound governing (re-)expansion
    bool cap_inclusive = false;   // poly-delay: emit iff size < cap (default) or <= cap
    bool stopped = false;         // sink requested termination
};

struct RunSummary {
    long long emitted = 0;
    long long within_budget = 0;
    int max_size = 0;
    long long expansions = 0;         // dequeued nodes
    long long max_gap_work = 0;       // max membership+comp+solver calls between emissions
    EnumWork total_work;
    double factor_bound = 0.0;
    bool truncated = false;
};

struct EngineOptions {
    /// Use |X'| <= |S| + k instead of the strict |X'| < |S| + k rule.
    bool cap_inclusive = false;
    /// Re-verify minimality of every emission (test mode).
    bool verify_emissions = false;
};

/// Polynomial-delay driver for properties whose restricted solver returns the
/// complete family exactly (vc, bdd, sfed, ds and rank-<=2 hitting sets).
/// Emits the seed, then breadth-first: for each dequeued X, each x in X and
/// each Y in the restricted family, X' = comp((X \ {x}) ∪ Y) is emitted and
/// enqueued iff it clears the size rule and is new. Every minimal (Pi,k)-set
/// is emitted; every emission has size < |seed| + k (or <= with the inclusive
/// rule).
RunSummary enumerate_poly_delay(const PropertyInstance& p, int k, const ElementSet& seed,
                                const EmitFn& emit, const EngineOptions& opts = {});

/// Generalized driver for streaming restricted solvers with approximation
/// factor d (steiner: exact, d = 1; hitting sets: recursive). Every distinct
/// X' is emitted; only those with |X'| <= (c+1)k are enqueued, where
/// c = max(seed_factor, ceil(|seed| / k)). Every emission has size at most
/// (c + d + 1) k.
RunSummary enumerate_incremental(const PropertyInstance& p, int k, const ElementSet& seed,
                                 const EmitFn& emit, const EngineOptions& opts = {});

/// One full expansion of an archived node under the poly-delay rules; returns
/// the number of new emissions. Deterministic: x ascending within x_set, then
/// the restricted solver's own order.
long long expand_node(const PropertyInstance& p, int k, const ElementSet& x_set,
                      TraversalState& state, const EmitFn& emit,
                      const EngineOptions& opts = {});

}  // namespace minenum

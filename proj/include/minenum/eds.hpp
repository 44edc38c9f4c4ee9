#pragma once

#include <functional>
#include <optional>

#include "minenum/engine.hpp"
#include "minenum/property.hpp"

namespace minenum {

/// One supergraph arc request for the edge dominating set traversal.
/// type1: replace x = {u, v} by e in Gamma(u) \ {x} and f in Gamma(v) \ {x};
/// the degenerate form applies when one incidence set is just {x}.
/// type2: pivot endpoint u and e sharing u with x; the far side Gamma(v) is to
/// be covered from outside via the W set.
struct EdsNeighborRequest {
    enum class Kind { type1, type1_degenerate, type2 };
    Kind kind = Kind::type1;
    int x = -1;
    int e = -1;
    int f = -1;      // full type-I only
    int pivot = -1;  // type-II only: the shared endpoint u
};

/// Comp((X \ {x}) ∪ {e, f}) or the degenerate Comp((X \ {x}) ∪ {e}).
ElementSet type1_neighbor(const Graph& g, const ElementSet& x_set,
                          const EdsNeighborRequest& req, EnumWork* work = nullptr);

/// Comp((X \ {x}) ∪ W ∪ {e}) where W is the deterministic minimal set of
/// edges outside Gamma(v) dominating the residue of Gamma(v) \ {x} left
/// uncovered by (X \ {x}) ∪ {e}; nullopt when some residue edge has no
/// dominator outside Gamma(v). w_size_out reports |W| when defined.
std::optional<ElementSet> type2_neighbor(const Graph& g, const ElementSet& x_set,
                                         const EdsNeighborRequest& req,
                                         EnumWork* work = nullptr, int* w_size_out = nullptr);

/// Evaluates every well-formed request in deterministic order (x ascending;
/// type-I before type-II; both pivot orientations for type-II), discarding
/// undefined results and results larger than cap, and streams the distinct
/// outcomes. Returns the number streamed.
long long eds_neighbors(const Graph& g, const ElementSet& x_set, long long cap,
                        const std::function<bool(const ElementSet&)>& emit,
                        EnumWork* work = nullptr);

struct EdsOptions {
    bool force = false;             // enumerate even when the seed certifies k infeasible
    bool verify_emissions = false;  // re-check minimality of every emission
    std::optional<ElementSet> seed_override;
};

struct EdsRun {
    RunSummary summary;
    std::optional<SeedResult> certificate;
};

/// 5k-capped breadth-first traversal over type-I/type-II arcs seeded by a
/// maximal matching. Emits a duplicate-free family of minimal edge dominating
/// sets containing every one of size <= k; every emission has size <= 5k.
EdsRun enumerate_eds(const Graph& g, int k, const EmitFn& emit, const EdsOptions& opts = {});

}  // namespace minenum

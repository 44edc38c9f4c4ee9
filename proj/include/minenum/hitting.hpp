#pragma once

#include <functional>
#include <optional>

#include "minenum/engine.hpp"
#include "minenum/property.hpp"

namespace minenum {

/// Hypergraph left over after committing to X \ {x} and banning x: hyperedges
/// met by X \ {x} are gone, x is stripped from the rest. Singleton leftovers
/// are resolved eagerly into `forced`; an edge that loses its last vertex
/// makes the whole subproblem infeasible.
struct ReducedInstance {
    std::vector<std::vector<int>> remaining;  // edges of size >= 2, untouched by forced
    ElementSet forced;
    int actual_rank = 0;
    bool infeasible = false;
};

ReducedInstance reduce_hs(const Hypergraph& h, const ElementSet& x_set, int x);

/// Streams the input-restricted family for d-hitting sets by recursing on the
/// reduced instance at rank d-1 (rank <= 2 bottoms out in forced vertices,
/// the vertex cover semantics). Only sets within the budget are forwarded, so
/// the stream equals the restricted family exactly.
long long restricted_hs(const Hypergraph& h, int d, int k, const ElementSet& x_set, int x,
                        const std::function<bool(const ElementSet&)>& yield);

struct HsRun {
    RunSummary summary;
    std::optional<SeedResult> certificate;  // set when the seed proves infeasibility
};

/// Approximate enumeration of minimal hitting sets: seed via hs_seed, then
/// the poly-delay driver at rank <= 2 or the incremental driver with
/// restricted_hs above that. Factor metadata follows
/// f(d) = d + f(d-1) + 1, f(2) = 3, i.e. (d+4)(d-1)/2.
HsRun enumerate_hs(const Hypergraph& h, int k, const EmitFn& emit,
                   const EngineOptions& opts = {}, bool force = false,
                   std::optional<ElementSet> seed_override = std::nullopt);

/// Closed-form factor (d+4)(d-1)/2 for d >= 2.
double hs_factor(int d);

PropertyInstance make_hs_property(std::shared_ptr<const Hypergraph> h, int declared_rank = -1);

}  // namespace minenum

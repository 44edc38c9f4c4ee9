#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "minenum/core.hpp"

namespace minenum {

/// Call counters exposed for the empirical delay checks. Counted per
/// PropertyInstance; single-threaded use.
struct EnumWork {
    long long membership = 0;
    long long comp = 0;
    long long solver = 0;
    long long total() const { return membership + comp + solver; }
    EnumWork operator-(const EnumWork& o) const {
        return {membership - o.membership, comp - o.comp, solver - o.solver};
    }
};

/// Outcome of a polynomial-time seed constructor. When feasible, `seed` is a
/// minimal Pi-set of size <= factor * k. Otherwise `raw_size > factor * k`
/// certifies that no (Pi,k)-set exists; `seed` still carries the minimalized
/// approximate solution so a forced run can use it.
struct SeedResult {
    bool feasible = false;
    bool structurally_infeasible = false;  // no Pi-set at all (e.g. disconnected terminals)
    ElementSet seed;
    long long raw_size = 0;
    double factor = 1.0;
};

/// Bundles a ground set with a monotone membership oracle, the handles into
/// the matching input-restricted solver and seed strategy, and factor
/// metadata. Treat as immutable after construction (the factories in
/// registry.cpp and steiner.cpp/hitting.cpp fill it in); `work` is the one
/// mutable slot and only tracks instrumentation.
struct PropertyInstance {
    using FamilySolver = std::function<std::vector<ElementSet>(
        int k, const ElementSet& x_set, int x)>;
    using StreamingSolver = std::function<long long(
        int k, const ElementSet& x_set, int x,
        const std::function<bool(const ElementSet&)>& yield)>;
    using SeedStrategy = std::function<SeedResult(int k)>;

    std::string name;
    GroundKind kind = GroundKind::vertex;
    int ground_size = 0;
    std::shared_ptr<const Graph> graph;
    std::shared_ptr<const Hypergraph> hypergraph;
    int degree_bound = -1;   // bdd
    int rank = -1;           // hs
    ElementSet terminals;    // steiner

    std::function<bool(const ElementSet&)> membership;
    FamilySolver family_solver;        // complete polynomial-size families (vc/bdd/sfed/ds, hs rank<=2)
    StreamingSolver streaming_solver;  // streaming enumerators (steiner, hs rank>=3)
    SeedStrategy seed_strategy;

    double seed_factor = 1.0;    // c: seed is a minimal (Pi, c*k)-set when one exists
    double solver_factor = 1.0;  // d: approximation factor of the restricted solver
    double output_factor = 1.0;  // bound on |emitted| / k for the matching engine

    mutable EnumWork work;

    /// Membership oracle. Validates the identifier range and kind.
    bool is_pi_set(const ElementSet& x) const;
};

/// Greedy minimalizer over an arbitrary monotone membership predicate:
/// repeats ascending-identifier passes, removing an element whenever the
/// remainder still satisfies the predicate, until a full pass removes
/// nothing. Requires member(x) to hold.
ElementSet comp_with(const std::function<bool(const ElementSet&)>& member,
                     ElementSet x, EnumWork* work = nullptr);

/// Comp: deterministic minimalization of a Pi-set (ascending passes).
ElementSet comp(const PropertyInstance& p, ElementSet x);

/// True iff x is a Pi-set and no single-element removal keeps the property.
bool is_minimal_pi_set(const PropertyInstance& p, const ElementSet& x);

// Direct per-property membership scans, shared by the property factories,
// the restricted solvers and the seed constructors. All linear-time-ish.
bool vc_satisfied(const Graph& g, const ElementSet& cover);
bool bdd_satisfied(const Graph& g, int degree_bound, const ElementSet& deleted);
bool star_forest(const Graph& g, const std::vector<char>& edge_removed);
bool sfed_satisfied(const Graph& g, const ElementSet& deleted);
bool ds_satisfied(const Graph& g, const ElementSet& dominators);
bool eds_satisfied(const Graph& g, const ElementSet& dominators);
bool steiner_satisfied(const Graph& g, const ElementSet& terminals, const ElementSet& edges);
bool hs_satisfied(const Hypergraph& h, const ElementSet& hitters);

// Registry: binds each property name to its ground set, membership oracle,
// restricted solver, seed strategy and factor metadata.
struct PropertyLimits {
    long long ds_work_limit = 1'000'000;  // guard on restricted_ds branching
};

PropertyInstance make_vc_property(std::shared_ptr<const Graph> g);
PropertyInstance make_bdd_property(std::shared_ptr<const Graph> g, int degree_bound);
PropertyInstance make_sfed_property(std::shared_ptr<const Graph> g);
PropertyInstance make_ds_property(std::shared_ptr<const Graph> g,
                                  const PropertyLimits& limits = {});
PropertyInstance make_eds_property(std::shared_ptr<const Graph> g);
// make_steiner_property lives in steiner.hpp, make_hs_property in hitting.hpp.

}  // namespace minenum

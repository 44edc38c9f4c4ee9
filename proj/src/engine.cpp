#include "minenum/engine.hpp"

#include <algorithm>
#include <cmath>

namespace minenum {

namespace {

// Tracks the worst inter-emission work window, measured in property-level
// call counts. The drain after the final emission counts as a gap too.
struct GapTracker {
    const PropertyInstance& p;
    long long last_total;
    long long max_gap = 0;

    explicit GapTracker(const PropertyInstance& p) : p(p), last_total(p.work.total()) {}
    void on_emission() {
        long long now = p.work.total();
        max_gap = std::max(max_gap, now - last_total);
        last_total = now;
    }
    void finish() { max_gap = std::max(max_gap, p.work.total() - last_total); }
};

struct EmitContext {
    const PropertyInstance& p;
    TraversalState& state;
    const EmitFn& emit;
    GapTracker& gaps;
    RunSummary& summary;
    bool verify = false;

    // Archive + optional enqueue + stream. Assumes the set is not archived yet.
    void accept(ElementSet solution, bool enqueue, const ElementSet* parent) {
        if (verify && !is_minimal_pi_set(p, solution)) {
            throw Error(p.name + ": engine produced a non-minimal set " + to_string(solution));
        }
        state.archive.insert(solution);
        if (enqueue) state.queue.push_back(solution);
        SolutionRecord rec;
        rec.size = solution.size();
        rec.within_budget = rec.size <= state.budget_k;
        if (parent) rec.parent = *parent;
        rec.solution = std::move(solution);
        ++summary.emitted;
        if (rec.within_budget) ++summary.within_budget;
        summary.max_size = std::max(summary.max_size, rec.size);
        bool keep_going = emit(rec);
        gaps.on_emission();
        if (!keep_going) {
            state.stopped = true;
            summary.truncated = true;
        }
    }
};

void check_seed(const PropertyInstance& p, const ElementSet& seed) {
    if (!p.is_pi_set(seed)) throw PreconditionError(p.name + ": seed is not a Pi-set");
    if (!is_minimal_pi_set(p, seed)) throw PreconditionError(p.name + ": seed is not minimal");
}

// One poly-delay expansion: for each x in X and each Y in the complete
// restricted family, comp((X \ {x}) ∪ Y) is accepted when it clears the size
// rule and is new.
long long expand_with(const PropertyInstance& p, int k, const ElementSet& x_set,
                      EmitContext& ctx) {
    TraversalState& state = ctx.state;
    long long produced = 0;
    for (int x : x_set) {
        if (state.stopped) break;
        ++p.work.solver;
        std::vector<ElementSet> family = p.family_solver(k, x_set, x);
        ElementSet without_x = x_set.without(x);
        for (const auto& y : family) {
            if (state.stopped) break;
            ElementSet next = comp(p, without_x.set_union(y));
            bool within_cap = state.cap_inclusive ? next.size() <= state.expansion_cap
                                                  : next.size() < state.expansion_cap;
            if (within_cap && !state.archive.count(next)) {
                ctx.accept(std::move(next), /*enqueue=*/true, &x_set);
                ++produced;
            }
        }
    }
    return produced;
}

}  // namespace

long long expand_node(const PropertyInstance& p, int k, const ElementSet& x_set,
                      TraversalState& state, const EmitFn& emit, const EngineOptions& opts) {
    if (!state.archive.count(x_set)) {
        throw PreconditionError(p.name + ": expanding a node outside the archive");
    }
    GapTracker gaps(p);
    RunSummary scratch;
    EmitContext ctx{p, state, emit, gaps, scratch, opts.verify_emissions};
    return expand_with(p, k, x_set, ctx);
}

RunSummary enumerate_poly_delay(const PropertyInstance& p, int k, const ElementSet& seed,
                                const EmitFn& emit, const EngineOptions& opts) {
    if (!p.family_solver) throw Error(p.name + ": no complete restricted solver registered");
    check_seed(p, seed);

    TraversalState state;
    state.budget_k = k;
    state.seed_size = seed.size();
    state.expansion_cap = static_cast<long long>(seed.size()) + k;
    state.cap_inclusive = opts.cap_inclusive;

    RunSummary summary;
    summary.factor_bound = p.seed_factor + 1;
    EnumWork start = p.work;
    GapTracker gaps(p);
    EmitContext ctx{p, state, emit, gaps, summary, opts.verify_emissions};

    ctx.accept(seed, /*enqueue=*/true, nullptr);
    while (!state.queue.empty() && !state.stopped) {
        ElementSet node = std::move(state.queue.front());
        state.queue.pop_front();
        ++summary.expansions;
        expand_with(p, k, node, ctx);
    }
    gaps.finish();
    summary.max_gap_work = gaps.max_gap;
    summary.total_work = p.work - start;
    return summary;
}

RunSummary enumerate_incremental(const PropertyInstance& p, int k, const ElementSet& seed,
                                 const EmitFn& emit, const EngineOptions& opts) {
    if (!p.streaming_solver) throw Error(p.name + ": no streaming restricted solver registered");
    check_seed(p, seed);

    long long c = 0;
    if (k > 0) {
        long long from_seed = (seed.size() + k - 1) / k;
        c = std::max(static_cast<long long>(std::ceil(p.seed_factor - 1e-9)), from_seed);
    }
    TraversalState state;
    state.budget_k = k;
    state.seed_size = seed.size();
    state.expansion_cap = (c + 1) * static_cast<long long>(k);

    RunSummary summary;
    summary.factor_bound = static_cast<double>(c) + p.solver_factor + 1;
    EnumWork start = p.work;
    GapTracker gaps(p);
    EmitContext ctx{p, state, emit, gaps, summary, opts.verify_emissions};

    ctx.accept(seed, /*enqueue=*/true, nullptr);
    while (!state.queue.empty() && !state.stopped) {
        ElementSet node = std::move(state.queue.front());
        state.queue.pop_front();
        ++summary.expansions;
        for (int x : node) {
            if (state.stopped) break;
            ++p.work.solver;
            ElementSet without_x = node.without(x);
            p.streaming_solver(k, node, x, [&](const ElementSet& y) {
                ElementSet next = comp(p, without_x.set_union(y));
                if (!state.archive.count(next)) {
                    // Oversized sets are still emitted, just never expanded.
                    bool enqueue = next.size() <= state.expansion_cap;
                    ctx.accept(std::move(next), enqueue, &node);
                }
                return !state.stopped;
            });
        }
    }
    gaps.finish();
    summary.max_gap_work = gaps.max_gap;
    summary.total_work = p.work - start;
    return summary;
}

}  // namespace minenum

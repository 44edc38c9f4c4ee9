#include "minenum/hitting.hpp"

#include <algorithm>

#include "minenum/seeds.hpp"

namespace minenum {

double hs_factor(int d) {
    if (d < 2) d = 2;
    return (d + 4.0) * (d - 1.0) / 2.0;
}

ReducedInstance reduce_hs(const Hypergraph& h, const ElementSet& x_set, int x) {
    if (x_set.kind() != GroundKind::vertex || !x_set.contains(x)) {
        throw PreconditionError("restricted_hs: x not in X");
    }
    if (!hs_satisfied(h, x_set)) {
        throw PreconditionError("restricted_hs: X is not a hitting set");
    }
    ElementSet base = x_set.without(x);
    ReducedInstance out;
    out.forced = ElementSet(GroundKind::vertex);
    std::vector<std::vector<int>> stripped;
    std::vector<int> forced;
    for (const auto& e : h.hyperedges()) {
        bool hit = false;
        for (int v : e) {
            if (base.contains(v)) {
                hit = true;
                break;
            }
        }
        if (hit) continue;
        std::vector<int> reduced;
        for (int v : e) {
            if (v != x) reduced.push_back(v);
        }
        if (reduced.empty()) {
            out.infeasible = true;  // the edge was {x}; nothing else can hit it
            return out;
        }
        if (reduced.size() == 1) {
            forced.push_back(reduced[0]);
        } else {
            stripped.push_back(std::move(reduced));
        }
    }
    out.forced = canonicalize(std::move(forced), GroundKind::vertex);
    for (auto& e : stripped) {
        bool hit = false;
        for (int v : e) {
            if (out.forced.contains(v)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            out.actual_rank = std::max(out.actual_rank, static_cast<int>(e.size()));
            out.remaining.push_back(std::move(e));
        }
    }
    return out;
}

long long restricted_hs(const Hypergraph& h, int d, int k, const ElementSet& x_set, int x,
                        const std::function<bool(const ElementSet&)>& yield) {
    if (h.rank() > d) throw PreconditionError("restricted_hs: rank above the declared d");
    ReducedInstance red = reduce_hs(h, x_set, x);
    if (red.infeasible) return 0;
    int budget = k - red.forced.size();
    if (budget < 0) return 0;
    if (red.remaining.empty()) {
        yield(red.forced);
        return 1;
    }
    Hypergraph sub(h.vertex_count(), red.remaining);
    long long count = 0;
    enumerate_hs(sub, budget, [&](const SolutionRecord& rec) {
        if (rec.size > budget) return true;  // oversized recursion output; not part of the family
        ++count;
        return yield(red.forced.set_union(rec.solution));
    });
    return count;
}

PropertyInstance make_hs_property(std::shared_ptr<const Hypergraph> h, int declared_rank) {
    PropertyInstance p;
    p.name = "hs";
    p.kind = GroundKind::vertex;
    p.hypergraph = std::move(h);
    p.ground_size = p.hypergraph->vertex_count();
    int actual = p.hypergraph->rank();
    if (declared_rank >= 0 && declared_rank < actual) {
        throw Error("hs: declared rank " + std::to_string(declared_rank) +
                    " below actual rank " + std::to_string(actual));
    }
    p.rank = actual;
    auto hg = p.hypergraph;
    p.membership = [hg](const ElementSet& s) { return hs_satisfied(*hg, s); };
    p.seed_strategy = [hg](int k) { return hs_seed(*hg, k); };
    int r = std::max(actual, 2);
    p.seed_factor = r;
    if (actual <= 2) {
        p.family_solver = [hg](int k, const ElementSet& x_set, int x) {
            std::vector<ElementSet> family;
            restricted_hs(*hg, 2, k, x_set, x, [&](const ElementSet& y) {
                family.push_back(y);
                return true;
            });
            return family;
        };
        p.solver_factor = 1.0;
    } else {
        p.streaming_solver = [hg, actual](int k, const ElementSet& x_set, int x,
                                          const std::function<bool(const ElementSet&)>& yield) {
            return restricted_hs(*hg, actual, k, x_set, x, yield);
        };
        p.solver_factor = hs_factor(actual - 1);
    }
    p.output_factor = hs_factor(r);
    return p;
}

HsRun enumerate_hs(const Hypergraph& h, int k, const EmitFn& emit, const EngineOptions& opts,
                   bool force, std::optional<ElementSet> seed_override) {
    HsRun run;
    PropertyInstance p = make_hs_property(std::make_shared<Hypergraph>(h));
    ElementSet seed;
    if (seed_override) {
        seed = *seed_override;
    } else {
        SeedResult sr = p.seed_strategy(k);
        if (!sr.feasible) {
            run.certificate = sr;
            if (!force) return run;
        }
        seed = sr.seed;
    }
    if (h.rank() <= 2) {
        run.summary = enumerate_poly_delay(p, k, seed, emit, opts);
    } else {
        run.summary = enumerate_incremental(p, k, seed, emit, opts);
    }
    return run;
}

}  // namespace minenum

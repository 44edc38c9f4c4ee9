#include "minenum/eds.hpp"

#include <algorithm>
#include <unordered_set>

#include "minenum/seeds.hpp"

namespace minenum {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

ElementSet comp_eds(const Graph& g, ElementSet x, EnumWork* work) {
    if (work) ++work->comp;
    return comp_with([&](const ElementSet& s) { return eds_satisfied(g, s); }, std::move(x),
                     work);
}

int other_end(const Graph& g, int edge, int v) {
    auto [a, b] = g.edge(edge);
    return a == v ? b : a;
}

bool shares_endpoint(const Graph& g, int e1, int e2) {
    auto [a, b] = g.edge(e1);
    auto [c, d] = g.edge(e2);
    return a == c || a == d || b == c || b == d;
}

}  // namespace

ElementSet type1_neighbor(const Graph& g, const ElementSet& x_set,
                          const EdsNeighborRequest& req, EnumWork* work) {
    require(x_set.kind() == GroundKind::edge && x_set.contains(req.x),
            "type1_neighbor: x not in X");
    auto [u, v] = g.edge(req.x);
    if (req.kind == EdsNeighborRequest::Kind::type1_degenerate) {
        bool u_alone = g.incident_edges(u).size() == 1;
        bool v_alone = g.incident_edges(v).size() == 1;
        require(u_alone || v_alone, "type1_neighbor: degenerate form needs a lone endpoint");
        int live = u_alone ? v : u;
        require(req.e != req.x && req.e >= 0 && req.e < g.edge_count(),
                "type1_neighbor: bad e");
        require(g.edge(req.e).first == live || g.edge(req.e).second == live,
                "type1_neighbor: e not incident to the live endpoint");
        return comp_eds(g, x_set.without(req.x).with(req.e), work);
    }
    require(req.kind == EdsNeighborRequest::Kind::type1, "type1_neighbor: wrong kind");
    require(req.e != req.x && req.f != req.x, "type1_neighbor: e or f equals x");
    require(req.e >= 0 && req.e < g.edge_count() && req.f >= 0 && req.f < g.edge_count(),
            "type1_neighbor: edge out of range");
    require(g.edge(req.e).first == u || g.edge(req.e).second == u,
            "type1_neighbor: e not incident to u");
    require(g.edge(req.f).first == v || g.edge(req.f).second == v,
            "type1_neighbor: f not incident to v");
    return comp_eds(g, x_set.without(req.x).with(req.e).with(req.f), work);
}

std::optional<ElementSet> type2_neighbor(const Graph& g, const ElementSet& x_set,
                                         const EdsNeighborRequest& req, EnumWork* work,
                                         int* w_size_out) {
    require(x_set.kind() == GroundKind::edge && x_set.contains(req.x),
            "type2_neighbor: x not in X");
    require(req.kind == EdsNeighborRequest::Kind::type2, "type2_neighbor: wrong kind");
    auto [a, b] = g.edge(req.x);
    require(req.pivot == a || req.pivot == b, "type2_neighbor: pivot not an endpoint of x");
    int u = req.pivot;
    int v = u == a ? b : a;
    require(req.e != req.x && req.e >= 0 && req.e < g.edge_count(), "type2_neighbor: bad e");
    require(g.edge(req.e).first == u || g.edge(req.e).second == u,
            "type2_neighbor: e does not share the pivot with x");

    ElementSet base = x_set.without(req.x).with(req.e);

    // Residue: edges at v (other than x) that base leaves undominated.
    std::vector<char> touched(g.vertex_count(), 0);
    for (int e : base) {
        touched[g.edge(e).first] = 1;
        touched[g.edge(e).second] = 1;
    }
    std::vector<int> residue;
    for (int e : g.incident_edges(v)) {
        if (e == req.x) continue;
        if (!touched[g.edge(e).first] && !touched[g.edge(e).second]) residue.push_back(e);
    }
    if (residue.empty()) {
        if (w_size_out) *w_size_out = 0;
        return comp_eds(g, base, work);
    }

    // Candidate pool: edges outside Gamma(v) at the far endpoint of some
    // residue edge.
    std::vector<int> pool;
    for (int r : residue) {
        int w = other_end(g, r, v);
        for (int h : g.incident_edges(w)) {
            auto [hu, hv] = g.edge(h);
            if (hu == v || hv == v) continue;
            pool.push_back(h);
        }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    auto dominates_residue = [&](const std::vector<int>& w_edges) {
        for (int r : residue) {
            bool ok = false;
            for (int h : w_edges) {
                if (h == r || shares_endpoint(g, h, r)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    };
    if (!dominates_residue(pool)) return std::nullopt;  // W is not definable here

    // Ascending greedy minimalization of the pool against residue domination.
    std::vector<int> w_edges = pool;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w_edges.size();) {
            std::vector<int> cand = w_edges;
            cand.erase(cand.begin() + i);
            if (dominates_residue(cand)) {
                w_edges = std::move(cand);
                changed = true;
            } else {
                ++i;
            }
        }
    }
    if (w_size_out) *w_size_out = static_cast<int>(w_edges.size());
    ElementSet with_w = base;
    for (int h : w_edges) with_w = with_w.with(h);
    return comp_eds(g, with_w, work);
}

long long eds_neighbors(const Graph& g, const ElementSet& x_set, long long cap,
                        const std::function<bool(const ElementSet&)>& emit, EnumWork* work) {
    require(x_set.kind() == GroundKind::edge, "eds_neighbors: X must be an edge set");
    std::unordered_set<ElementSet, ElementSetHash> seen;
    long long streamed = 0;
    bool stop = false;

    auto offer = [&](ElementSet z) {
        if (stop || z.size() > cap) return;
        if (!seen.insert(z).second) return;
        ++streamed;
        if (!emit(z)) stop = true;
    };

    for (int x : x_set) {
        if (stop) break;
        auto [u, v] = g.edge(x);
        std::vector<int> at_u, at_v;
        for (int e : g.incident_edges(u)) {
            if (e != x) at_u.push_back(e);
        }
        for (int e : g.incident_edges(v)) {
            if (e != x) at_v.push_back(e);
        }
        if (work) work->solver += 1;

        if (at_u.empty() && at_v.empty()) continue;  // isolated edge: no requests
        if (at_u.empty() || at_v.empty()) {
            const auto& live = at_u.empty() ? at_v : at_u;
            for (int e : live) {
                if (stop) break;
                EdsNeighborRequest req;
                req.kind = EdsNeighborRequest::Kind::type1_degenerate;
                req.x = x;
                req.e = e;
                offer(type1_neighbor(g, x_set, req, work));
            }
        } else {
            for (int e : at_u) {
                if (stop) break;
                for (int f : at_v) {
                    if (stop) break;
                    EdsNeighborRequest req;
                    req.kind = EdsNeighborRequest::Kind::type1;
                    req.x = x;
                    req.e = e;
                    req.f = f;
                    offer(type1_neighbor(g, x_set, req, work));
                }
            }
        }
        // Type-II, both pivot orientations.
        for (int pivot : {std::min(u, v), std::max(u, v)}) {
            if (stop) break;
            for (int e : g.incident_edges(pivot)) {
                if (e == x || stop) continue;
                EdsNeighborRequest req;
                req.kind = EdsNeighborRequest::Kind::type2;
                req.x = x;
                req.pivot = pivot;
                req.e = e;
                if (auto z = type2_neighbor(g, x_set, req, work)) offer(std::move(*z));
            }
        }
    }
    return streamed;
}

EdsRun enumerate_eds(const Graph& g, int k, const EmitFn& emit, const EdsOptions& opts) {
    EdsRun run;
    ElementSet seed;
    if (opts.seed_override) {
        seed = *opts.seed_override;
    } else {
        SeedResult sr = eds_seed(g, k);
        if (!sr.feasible) {
            run.certificate = sr;
            if (!opts.force) return run;
        }
        seed = sr.seed;
    }
    auto member = [&](const ElementSet& s) { return eds_satisfied(g, s); };
    {
        // A maximal matching is minimal as an edge dominating set; keep the
        // assertion anyway.
        bool minimal = member(seed);
        for (int e : seed) {
            if (!minimal) break;
            if (member(seed.without(e))) minimal = false;
        }
        if (!minimal) throw Error("eds: seed is not a minimal edge dominating set");
    }

    long long cap = std::max<long long>(5LL * k, static_cast<long long>(seed.size()) + 3LL * k);
    EnumWork work;
    RunSummary& summary = run.summary;
    summary.factor_bound = 5.0;

    TraversalState state;
    state.budget_k = k;
    state.seed_size = seed.size();
    state.expansion_cap = cap;

    long long last_gap_mark = 0;
    auto note_emission = [&]() {
        summary.max_gap_work = std::max(summary.max_gap_work, work.total() - last_gap_mark);
        last_gap_mark = work.total();
    };
    auto accept = [&](ElementSet z, const ElementSet* parent) {
        if (opts.verify_emissions) {
            bool minimal = member(z);
            for (int e : z) {
                if (!minimal) break;
                if (member(z.without(e))) minimal = false;
            }
            if (!minimal) throw Error("eds: produced a non-minimal set " + to_string(z));
        }
        state.archive.insert(z);
        state.queue.push_back(z);
        SolutionRecord rec;
        rec.size = z.size();
        rec.within_budget = rec.size <= k;
        if (parent) rec.parent = *parent;
        rec.solution = std::move(z);
        ++summary.emitted;
        if (rec.within_budget) ++summary.within_budget;
        summary.max_size = std::max(summary.max_size, rec.size);
        if (!emit(rec)) {
            state.stopped = true;
            summary.truncated = true;
        }
        note_emission();
    };

    accept(seed, nullptr);
    while (!state.queue.empty() && !state.stopped) {
        ElementSet node = std::move(state.queue.front());
        state.queue.pop_front();
        ++summary.expansions;
        eds_neighbors(g, node, cap, [&](const ElementSet& z) {
            if (!state.archive.count(z)) accept(z, &node);
            return !state.stopped;
        }, &work);
    }
    summary.max_gap_work = std::max(summary.max_gap_work, work.total() - last_gap_mark);
    summary.total_work = work;
    return run;
}

}  // namespace minenum

#include "minenum/seeds.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>

namespace minenum {

namespace {

SeedResult finish(ElementSet seed, long long raw_size, double factor, int k) {
    SeedResult r;
    r.seed = std::move(seed);
    r.raw_size = raw_size;
    r.factor = factor;
    r.feasible = static_cast<double>(raw_size) <= factor * k + 1e-9;
    return r;
}

}  // namespace

ElementSet maximal_matching(const Graph& g) {
    std::vector<char> matched(g.vertex_count(), 0);
    std::vector<int> picked;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!matched[u] && !matched[v]) {
            matched[u] = matched[v] = 1;
            picked.push_back(e);
        }
    }
    return ElementSet(std::move(picked), GroundKind::edge);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

double harmonic(int n) {
    double h = 0;
    for (int i = 1; i <= n; ++i) h += 1.0 / i;
    return h;
}

SeedResult vc_seed(const Graph& g, int k) {
    ElementSet matching = maximal_matching(g);
    std::vector<int> endpoints;
    for (int e : matching) {
        auto [u, v] = g.edge(e);
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    ElementSet raw = canonicalize(std::move(endpoints), GroundKind::vertex);
    ElementSet seed = comp_with([&](const ElementSet& s) { return vc_satisfied(g, s); }, raw);
    return finish(std::move(seed), raw.size(), 2.0, k);
}

SeedResult eds_seed(const Graph& g, int k) {
    // A maximal matching is itself a minimal edge dominating set; no comp run.
    ElementSet matching = maximal_matching(g);
    return finish(matching, matching.size(), 2.0, k);
}

SeedResult ds_seed(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<char> dominated(n, 0);
    int left = n;
    std::vector<int> picked;
    while (left > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            int gain = dominated[v] ? 0 : 1;
            for (int w : g.neighbors(v)) gain += dominated[w] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        picked.push_back(best);
        if (!dominated[best]) {
            dominated[best] = 1;
            --left;
        }
        for (int w : g.neighbors(best)) {
            if (!dominated[w]) {
                dominated[w] = 1;
                --left;
            }
        }
    }
    ElementSet raw = canonicalize(std::move(picked), GroundKind::vertex);
    ElementSet seed = comp_with([&](const ElementSet& s) { return ds_satisfied(g, s); }, raw);
    return finish(std::move(seed), raw.size(), harmonic(g.max_degree() + 1), k);
}

namespace {

// Lexicographically smallest (by sorted edge-id triple) triangle or 3-edge
// path in the graph with `removed` edges deleted; empty when none exists.
std::array<int, 3> smallest_obstruction(const Graph& g, const std::vector<char>& removed) {
    std::array<int, 3> best{-1, -1, -1};
    auto consider = [&](int a, int b, int c) {
        std::array<int, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        if (best[0] < 0 || t < best) best = t;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (removed[e]) continue;
        auto [u, v] = g.edge(e);
        // Any pair of surviving edges hanging off both endpoints of e forms an
        // obstruction: a 3-edge path when their far ends differ, a triangle
        // when they coincide.
        for (int eu : g.incident_edges(u)) {
            if (eu == e || removed[eu]) continue;
            for (int ev : g.incident_edges(v)) {
                if (ev == e || removed[ev]) continue;
                consider(eu, e, ev);
            }
        }
    }
    return best;
}

}  // namespace

SeedResult sfed_seed(const Graph& g, int k) {
    std::vector<char> removed(g.edge_count(), 0);
    long long raw_count = 0;
    while (true) {
        auto obs = smallest_obstruction(g, removed);
        if (obs[0] < 0) break;
        for (int e : obs) {
            if (!removed[e]) {
                removed[e] = 1;
                ++raw_count;
            }
        }
    }
    std::vector<int> raw;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (removed[e]) raw.push_back(e);
    }
    ElementSet seed = comp_with([&](const ElementSet& s) { return sfed_satisfied(g, s); },
                                ElementSet(std::move(raw), GroundKind::edge));
    return finish(std::move(seed), raw_count, 3.0, k);
}

SeedResult bdd_seed(const Graph& g, int degree_bound, int k) {
    if (degree_bound < 0) throw Error("bdd: degree bound must be >= 0");
    int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    std::vector<int> raw;
    while (true) {
        int offender = -1;
        for (int v = 0; v < n && offender < 0; ++v) {
            if (gone[v]) continue;
            int deg = 0;
            for (int w : g.neighbors(v)) {
                if (!gone[w]) ++deg;
            }
            if (deg > degree_bound) offender = v;
        }
        if (offender < 0) break;
        gone[offender] = 1;
        raw.push_back(offender);
        int taken = 0;
        for (int w : g.neighbors(offender)) {
            if (gone[w]) continue;
            gone[w] = 1;
            raw.push_back(w);
            if (++taken == degree_bound + 1) break;
        }
    }
    ElementSet raw_set = canonicalize(std::move(raw), GroundKind::vertex);
    ElementSet seed = comp_with(
        [&](const ElementSet& s) { return bdd_satisfied(g, degree_bound, s); }, raw_set);
    return finish(std::move(seed), raw_set.size(), degree_bound + 2.0, k);
}

SeedResult hs_seed(const Hypergraph& h, int k) {
    std::vector<char> in(h.vertex_count(), 0);
    std::vector<int> raw;
    for (const auto& e : h.hyperedges()) {
        bool hit = false;
        for (int v : e) {
            if (in[v]) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            for (int v : e) {
                in[v] = 1;
                raw.push_back(v);
            }
        }
    }
    ElementSet raw_set = canonicalize(std::move(raw), GroundKind::vertex);
    ElementSet seed =
        comp_with([&](const ElementSet& s) { return hs_satisfied(h, s); }, raw_set);
    return finish(std::move(seed), raw_set.size(), std::max(h.rank(), 2), k);
}

namespace {

// Deterministic shortest path between two vertices as an edge-id list.
std::vector<int> bfs_path(const Graph& g, int from, int to) {
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty() && !seen[to]) {
        int v = queue.front();
        queue.pop_front();
        for (int e : g.incident_edges(v)) {
            auto [a, b] = g.edge(e);
            int w = a == v ? b : a;
            if (!seen[w]) {
                seen[w] = 1;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> path;
    int v = to;
    while (v != from) {
        int e = parent_edge[v];
        path.push_back(e);
        auto [a, b] = g.edge(e);
        v = a == v ? b : a;
    }
    return path;
}

}  // namespace

SeedResult steiner_seed(const Graph& g, const ElementSet& terminals, int k) {
    if (terminals.empty()) throw Error("steiner: empty terminal set");
    const auto& term = terminals.elements();
    if (term.size() == 1) return finish(ElementSet(GroundKind::edge), 0, 2.0, k);

    std::vector<std::vector<int>> dist;
    dist.reserve(term.size());
    for (int t : term) dist.push_back(bfs_distances(g, t));
    for (std::size_t i = 1; i < term.size(); ++i) {
        if (dist[0][term[i]] < 0) {
            SeedResult r;
            r.feasible = false;
            r.structurally_infeasible = true;
            r.seed = ElementSet(GroundKind::edge);
            r.factor = 2.0;
            return r;
        }
    }

    // Kruskal on the metric closure, ties by (weight, endpoints).
    struct ClosureEdge {
        int w, a, b;  // a, b index into term
        bool operator<(const ClosureEdge& o) const {
            return std::tie(w, a, b) < std::tie(o.w, o.a, o.b);
        }
    };
    std::vector<ClosureEdge> closure;
    for (std::size_t i = 0; i < term.size(); ++i) {
        for (std::size_t j = i + 1; j < term.size(); ++j) {
            closure.push_back({dist[i][term[j]], static_cast<int>(i), static_cast<int>(j)});
        }
    }
    std::sort(closure.begin(), closure.end());
    std::vector<int> parent(term.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<int> raw;
    long long raw_size = 0;
    for (const auto& ce : closure) {
        int ra = find(ce.a), rb = find(ce.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        for (int e : bfs_path(g, term[ce.a], term[ce.b])) raw.push_back(e);
    }
    ElementSet raw_set = canonicalize(std::move(raw), GroundKind::edge);
    raw_size = raw_set.size();
    ElementSet seed = comp_with(
        [&](const ElementSet& s) { return steiner_satisfied(g, terminals, s); }, raw_set);
    return finish(std::move(seed), raw_size, 2.0, k);
}

}  // namespace minenum

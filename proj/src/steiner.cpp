#include "minenum/steiner.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <unordered_set>

#include "minenum/seeds.hpp"

namespace minenum {

namespace {

int uf_find(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

ContractedMultigraph contract_for_edge(const Graph& g, const ElementSet& tree_edges, int x) {
    if (tree_edges.kind() != GroundKind::edge || !tree_edges.contains(x)) {
        throw PreconditionError("steiner: x not in the tree edge set");
    }
    std::vector<int> parent(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
    for (int e : tree_edges) {
        if (e == x) continue;
        auto [u, v] = g.edge(e);
        int ru = uf_find(parent, u), rv = uf_find(parent, v);
        if (ru == rv) throw PreconditionError("steiner: tree edge set contains a cycle");
        parent[ru] = rv;
    }
    auto [xu, xv] = g.edge(x);
    int c1 = uf_find(parent, xu), c2 = uf_find(parent, xv);
    if (c1 == c2) throw PreconditionError("steiner: tree edge set contains a cycle");

    // Vertices outside the tree keep their own identity; only the tree's two
    // halves collapse. s and t are the endpoints of x.
    std::vector<char> in_tree(g.vertex_count(), 0);
    for (int e : tree_edges) {
        in_tree[g.edge(e).first] = 1;
        in_tree[g.edge(e).second] = 1;
    }
    ContractedMultigraph mg;
    mg.vertex_count = g.vertex_count();
    mg.s = xu;
    mg.t = xv;
    std::vector<int> vmap(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_tree[v]) {
            int r = uf_find(parent, v);
            if (r != c1 && r != c2) {
                throw PreconditionError("steiner: tree edge set is disconnected");
            }
            vmap[v] = r == c1 ? xu : xv;
        } else {
            vmap[v] = v;
        }
    }
    mg.incidence.assign(g.vertex_count(), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == x) continue;
        int a = vmap[g.edge(e).first];
        int b = vmap[g.edge(e).second];
        if (a == b) continue;  // self-loop after contraction
        int idx = static_cast<int>(mg.edges.size());
        mg.edges.push_back({a, b, e});
        mg.incidence[a].push_back(idx);
        mg.incidence[b].push_back(idx);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& inc = mg.incidence[v];
        std::sort(inc.begin(), inc.end(), [&](int i, int j) {
            int wi = mg.edges[i].a == v ? mg.edges[i].b : mg.edges[i].a;
            int wj = mg.edges[j].a == v ? mg.edges[j].b : mg.edges[j].a;
            return std::tie(wi, i) < std::tie(wj, j);
        });
    }
    return mg;
}

namespace {

// Shortest path from `from` to `to` avoiding the flagged vertices and edges,
// as multigraph edge indices. BFS with ascending (neighbor, edge) scan.
std::optional<std::vector<int>> shortest_path(const ContractedMultigraph& g, int from, int to,
                                              const std::vector<char>& vertex_banned,
                                              const std::vector<char>& edge_banned) {
    std::vector<int> parent_edge(g.vertex_count, -1);
    std::vector<char> seen(g.vertex_count, 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int e : g.incidence[v]) {
            if (edge_banned[e]) continue;
            int w = g.edges[e].a == v ? g.edges[e].b : g.edges[e].a;
            if (seen[w] || vertex_banned[w]) continue;
            seen[w] = 1;
            parent_edge[w] = e;
            queue.push_back(w);
        }
    }
    if (!seen[to]) return std::nullopt;
    std::vector<int> path;
    int v = to;
    while (v != from) {
        int e = parent_edge[v];
        path.push_back(e);
        v = g.edges[e].a == v ? g.edges[e].b : g.edges[e].a;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

struct PoolEntry {
    std::vector<int> edges;      // multigraph edge indices, s to t
    int branch = 1;              // deviation positions start here (1-based)
    std::vector<int> forbidden;  // first-edge exclusions at the branch position

    bool operator>(const PoolEntry& o) const {
        if (edges.size() != o.edges.size()) return edges.size() > o.edges.size();
        return edges > o.edges;
    }
};

}  // namespace

long long k_bounded_st_paths(const ContractedMultigraph& g, int k,
                             const std::function<bool(const PathRecord&)>& emit) {
    if (g.s == g.t) throw PreconditionError("steiner: contracted endpoints coincide");
    if (k < 0) return 0;

    std::priority_queue<PoolEntry, std::vector<PoolEntry>, std::greater<>> pool;
    std::vector<char> no_vertex(g.vertex_count, 0);
    std::vector<char> no_edge(g.edges.size(), 0);

    auto vertices_along = [&](const std::vector<int>& edges) {
        std::vector<int> vs{g.s};
        int at = g.s;
        for (int e : edges) {
            at = g.edges[e].a == at ? g.edges[e].b : g.edges[e].a;
            vs.push_back(at);
        }
        return vs;
    };

    if (auto p0 = shortest_path(g, g.s, g.t, no_vertex, no_edge)) {
        if (static_cast<int>(p0->size()) <= k) pool.push({std::move(*p0), 1, {}});
    }

    long long count = 0;
    while (!pool.empty()) {
        PoolEntry cur = pool.top();
        pool.pop();
        PathRecord rec;
        rec.length = static_cast<int>(cur.edges.size());
        rec.edges.reserve(cur.edges.size());
        for (int e : cur.edges) rec.edges.push_back(g.edges[e].orig);
        ++count;
        if (!emit(rec)) break;

        // Partition the remaining paths of this entry's family by their first
        // deviation position d. The branch position itself inherits the
        // accumulated forbidden set; later positions start a fresh one.
        std::vector<int> verts = vertices_along(cur.edges);
        int len = static_cast<int>(cur.edges.size());
        for (int d = cur.branch; d <= len; ++d) {
            std::vector<int> forb = d == cur.branch ? cur.forbidden : std::vector<int>{};
            forb.push_back(cur.edges[d - 1]);

            std::fill(no_vertex.begin(), no_vertex.end(), 0);
            for (int i = 0; i < d - 1; ++i) no_vertex[verts[i]] = 1;
            std::fill(no_edge.begin(), no_edge.end(), 0);
            for (int e : forb) no_edge[e] = 1;

            auto q = shortest_path(g, verts[d - 1], g.t, no_vertex, no_edge);
            if (!q) continue;
            std::vector<int> cand(cur.edges.begin(), cur.edges.begin() + (d - 1));
            cand.insert(cand.end(), q->begin(), q->end());
            if (static_cast<int>(cand.size()) <= k) {
                pool.push({std::move(cand), d, std::move(forb)});
            }
        }
    }
    return count;
}

long long restricted_steiner(const Graph& g, const ElementSet& terminals, int k,
                             const ElementSet& tree_edges, int x,
                             const std::function<bool(const ElementSet&)>& yield) {
    ContractedMultigraph mg = contract_for_edge(g, tree_edges, x);

    // Each side of the split must hold a terminal in a minimal Steiner tree.
    {
        bool s_side = false, t_side = false;
        std::vector<int> parent(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
        for (int e : tree_edges) {
            if (e == x) continue;
            auto [a, b] = g.edge(e);
            parent[uf_find(parent, a)] = uf_find(parent, b);
        }
        int rs = uf_find(parent, mg.s), rt = uf_find(parent, mg.t);
        for (int t : terminals) {
            int r = uf_find(parent, t);
            if (r == rs) s_side = true;
            if (r == rt) t_side = true;
        }
        if (!s_side || !t_side) {
            throw PreconditionError("steiner: tree edge set is not a minimal Steiner subgraph");
        }
    }

    long long count = 0;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    k_bounded_st_paths(mg, k, [&](const PathRecord& path) {
        ElementSet y = canonicalize(path.edges, GroundKind::edge);
        if (!seen.insert(y).second) return true;  // parallel-edge paths map to distinct sets
        ++count;
        return yield(y);
    });
    return count;
}

PropertyInstance make_steiner_property(std::shared_ptr<const Graph> g, ElementSet terminals) {
    if (terminals.empty()) throw Error("steiner: empty terminal set");
    PropertyInstance p;
    p.name = "steiner";
    p.kind = GroundKind::edge;
    p.graph = std::move(g);
    p.ground_size = p.graph->edge_count();
    p.terminals = terminals;
    auto graph = p.graph;
    p.membership = [graph, terminals](const ElementSet& s) {
        return steiner_satisfied(*graph, terminals, s);
    };
    // Registration rejects infeasible instances: the full edge set must
    // already connect the terminals.
    {
        std::vector<int> all(p.ground_size);
        for (int i = 0; i < p.ground_size; ++i) all[i] = i;
        if (!p.membership(ElementSet(std::move(all), GroundKind::edge))) {
            throw InfeasibleInstanceError("steiner: terminals are not connected in the input graph");
        }
    }
    p.streaming_solver = [graph, terminals](int k, const ElementSet& x_set, int x,
                                            const std::function<bool(const ElementSet&)>& yield) {
        return restricted_steiner(*graph, terminals, k, x_set, x, yield);
    };
    p.seed_strategy = [graph, terminals](int k) { return steiner_seed(*graph, terminals, k); };
    p.seed_factor = 2.0;
    p.solver_factor = 1.0;  // the path enumerator is exact
    p.output_factor = 4.0;
    return p;
}

}  // namespace minenum

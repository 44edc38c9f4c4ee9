#include "minenum/property.hpp"

#include <algorithm>

namespace minenum {

bool PropertyInstance::is_pi_set(const ElementSet& x) const {
    if (x.kind() != kind) throw Error(name + ": element set has the wrong kind");
    if (!x.empty() && (x.elements().front() < 0 || x.elements().back() >= ground_size)) {
        throw Error(name + ": element out of range");
    }
    ++work.membership;
    return membership(x);
}

ElementSet comp_with(const std::function<bool(const ElementSet&)>& member,
                     ElementSet x, EnumWork* work) {
    auto check = [&](const ElementSet& s) {
        if (work) ++work->membership;
        return member(s);
    };
    if (!check(x)) throw PreconditionError("comp: input is not a Pi-set");
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < x.elements().size();) {
            ElementSet cand = x.without(x.elements()[i]);
            if (check(cand)) {
                x = std::move(cand);  // element i removed; the next one slides into i
                changed = true;
            } else {
                ++i;
            }
        }
    }
    return x;
}

ElementSet comp(const PropertyInstance& p, ElementSet x) {
    ++p.work.comp;
    if (x.kind() != p.kind) throw Error(p.name + ": element set has the wrong kind");
    if (!x.empty() && (x.elements().front() < 0 || x.elements().back() >= p.ground_size)) {
        throw Error(p.name + ": element out of range");
    }
    return comp_with(p.membership, std::move(x), &p.work);
}

bool is_minimal_pi_set(const PropertyInstance& p, const ElementSet& x) {
    if (!p.is_pi_set(x)) return false;
    for (int e : x) {
        if (p.is_pi_set(x.without(e))) return false;
    }
    return true;
}

bool vc_satisfied(const Graph& g, const ElementSet& cover) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : cover) in[v] = 1;
    for (const auto& [u, v] : g.edges()) {
        if (!in[u] && !in[v]) return false;
    }
    return true;
}

bool bdd_satisfied(const Graph& g, int degree_bound, const ElementSet& deleted) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : deleted) gone[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (gone[v]) continue;
        int deg = 0;
        for (int w : g.neighbors(v)) {
            if (!gone[w] && ++deg > degree_bound) return false;
        }
    }
    return true;
}

bool star_forest(const Graph& g, const std::vector<char>& edge_removed) {
    // A graph is a star forest iff no component has two vertices of degree >= 2.
    std::vector<int> deg(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (edge_removed[i]) continue;
        auto [u, v] = g.edge(i);
        ++deg[u];
        ++deg[v];
    }
    for (int i = 0; i < g.edge_count(); ++i) {
        if (edge_removed[i]) continue;
        auto [u, v] = g.edge(i);
        if (deg[u] >= 2 && deg[v] >= 2) return false;
    }
    return true;
}

bool sfed_satisfied(const Graph& g, const ElementSet& deleted) {
    std::vector<char> removed(g.edge_count(), 0);
    for (int e : deleted) removed[e] = 1;
    return star_forest(g, removed);
}

bool ds_satisfied(const Graph& g, const ElementSet& dominators) {
    std::vector<char> dominated(g.vertex_count(), 0);
    for (int v : dominators) {
        dominated[v] = 1;
        for (int w : g.neighbors(v)) dominated[w] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!dominated[v]) return false;
    }
    return true;
}

bool eds_satisfied(const Graph& g, const ElementSet& dominators) {
    std::vector<char> touched(g.vertex_count(), 0);
    for (int e : dominators) {
        auto [u, v] = g.edge(e);
        touched[u] = 1;
        touched[v] = 1;
    }
    for (const auto& [u, v] : g.edges()) {
        if (!touched[u] && !touched[v]) return false;
    }
    return true;
}

namespace {

int uf_find(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

bool steiner_satisfied(const Graph& g, const ElementSet& terminals, const ElementSet& edges) {
    if (terminals.size() <= 1) return true;
    std::vector<int> parent(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
    for (int e : edges) {
        auto [u, v] = g.edge(e);
        parent[uf_find(parent, u)] = uf_find(parent, v);
    }
    int root = uf_find(parent, terminals.elements().front());
    for (int t : terminals) {
        if (uf_find(parent, t) != root) return false;
    }
    return true;
}

bool hs_satisfied(const Hypergraph& h, const ElementSet& hitters) {
    std::vector<char> in(h.vertex_count(), 0);
    for (int v : hitters) in[v] = 1;
    for (const auto& e : h.hyperedges()) {
        bool hit = false;
        for (int v : e) {
            if (in[v]) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace minenum

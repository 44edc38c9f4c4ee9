#include "minenum/cks.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace minenum {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

// Shared tail: feasibility, minimality (single-element removals suffice for a
// monotone property), budget, dedup, lexicographic order.
RestrictedFamily filter_candidates(std::vector<ElementSet> candidates,
                                   const std::function<bool(const ElementSet&)>& member,
                                   int k, const ElementSet& x_set, int x) {
    ElementSet base = x_set.without(x);
    RestrictedFamily fam;
    fam.source_x_set = x_set;
    fam.source_x = x;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (auto& y : candidates) {
        if (y.size() > k || y.contains(x)) continue;
        if (!member(base.set_union(y))) continue;
        bool minimal = true;
        for (int e : y) {
            if (member(base.set_union(y.without(e)))) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        if (seen.insert(y).second) fam.members.push_back(std::move(y));
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

}  // namespace

RestrictedFamily restricted_vc(const Graph& g, int k, const ElementSet& x_set, int x) {
    require(x_set.kind() == GroundKind::vertex && x_set.contains(x), "restricted_vc: x not in X");
    require(vc_satisfied(g, x_set), "restricted_vc: X is not a vertex cover");
    std::vector<int> forced;
    for (int e : g.incident_edges(x)) {
        auto [u, v] = g.edge(e);
        int w = u == x ? v : u;
        if (!x_set.contains(w)) forced.push_back(w);
    }
    std::vector<ElementSet> candidates{canonicalize(std::move(forced), GroundKind::vertex)};
    return filter_candidates(std::move(candidates),
                             [&](const ElementSet& s) { return vc_satisfied(g, s); }, k,
                             x_set, x);
}

RestrictedFamily restricted_bdd(const Graph& g, int degree_bound, int k,
                                const ElementSet& x_set, int x) {
    require(x_set.kind() == GroundKind::vertex && x_set.contains(x), "restricted_bdd: x not in X");
    require(bdd_satisfied(g, degree_bound, x_set), "restricted_bdd: X is not a solution");
    const int d = degree_bound;
    ElementSet base = x_set.without(x);
    auto member = [&](const ElementSet& s) { return bdd_satisfied(g, d, s); };

    std::vector<char> removed(g.vertex_count(), 0);
    for (int v : base) removed[v] = 1;
    auto live_degree = [&](int v, const std::vector<char>& gone) {
        int deg = 0;
        for (int w : g.neighbors(v)) {
            if (!gone[w]) ++deg;
        }
        return deg;
    };

    std::vector<int> nbrs;  // neighbors of x in H = G - (X \ {x})
    for (int w : g.neighbors(x)) {
        if (!removed[w]) nbrs.push_back(w);
    }

    std::vector<ElementSet> candidates;
    if (member(base)) {
        candidates.emplace_back(GroundKind::vertex);
        return filter_candidates(std::move(candidates), member, k, x_set, x);
    }

    // Survivor subsets A of x's neighborhood, |A| <= d, in cardinality-lex order.
    int nn = static_cast<int>(nbrs.size());
    for (int card = 0; card <= std::min(d, nn); ++card) {
        std::vector<int> idx(card);
        for (int i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            std::vector<char> survives(nn, 0);
            for (int i : idx) survives[i] = 1;
            std::vector<int> deletion;
            std::vector<char> gone = removed;
            for (int i = 0; i < nn; ++i) {
                if (!survives[i]) {
                    deletion.push_back(nbrs[i]);
                    gone[nbrs[i]] = 1;
                }
            }
            // Each surviving neighbor still above the bound needs to shed one
            // more neighbor; its degree in H minus the base deletion is at
            // most d+1, so exactly one further removal per such vertex.
            std::vector<std::vector<int>> choices;
            bool dead = false;
            for (int i = 0; i < nn && !dead; ++i) {
                if (!survives[i]) continue;
                int w = nbrs[i];
                if (live_degree(w, gone) <= d) continue;
                std::vector<int> opts;
                for (int z : g.neighbors(w)) {
                    if (!gone[z] && z != x) opts.push_back(z);
                }
                if (opts.empty()) dead = true;
                else choices.push_back(std::move(opts));
            }
            if (!dead) {
                std::vector<int> pick(choices.size(), 0);
                while (true) {
                    std::vector<int> y = deletion;
                    for (std::size_t i = 0; i < choices.size(); ++i) {
                        y.push_back(choices[i][pick[i]]);
                    }
                    candidates.push_back(canonicalize(std::move(y), GroundKind::vertex));
                    std::size_t i = 0;
                    for (; i < pick.size(); ++i) {
                        if (++pick[i] < static_cast<int>(choices[i].size())) break;
                        pick[i] = 0;
                    }
                    if (i == pick.size()) break;
                }
            }
            if (card == 0) break;
            int i = card - 1;
            while (i >= 0 && idx[i] == nn - card + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return filter_candidates(std::move(candidates), member, k, x_set, x);
}

namespace {

// Edges and per-vertex incidence of the component of H = G - removed_edges
// that contains the edge `anchor`.
struct Component {
    std::vector<char> edge_in;
    std::vector<std::vector<int>> incidence;  // within the component
};

Component component_of_edge(const Graph& g, const std::vector<char>& edge_removed, int anchor) {
    Component c;
    c.edge_in.assign(g.edge_count(), 0);
    c.incidence.assign(g.vertex_count(), {});
    std::vector<char> visited(g.vertex_count(), 0);
    std::deque<int> queue{g.edge(anchor).first};
    visited[g.edge(anchor).first] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : g.incident_edges(v)) {
            if (edge_removed[e]) continue;
            if (!c.edge_in[e]) {
                c.edge_in[e] = 1;
                c.incidence[g.edge(e).first].push_back(e);
                c.incidence[g.edge(e).second].push_back(e);
            }
            auto [a, b] = g.edge(e);
            int w = a == v ? b : a;
            if (!visited[w]) {
                visited[w] = 1;
                queue.push_back(w);
            }
        }
    }
    for (auto& inc : c.incidence) std::sort(inc.begin(), inc.end());
    return c;
}

}  // namespace

RestrictedFamily restricted_sfed(const Graph& g, int k, const ElementSet& x_set, int x) {
    require(x_set.kind() == GroundKind::edge && x_set.contains(x), "restricted_sfed: x not in X");
    require(sfed_satisfied(g, x_set), "restricted_sfed: X is not a deletion set");
    auto member = [&](const ElementSet& s) { return sfed_satisfied(g, s); };
    ElementSet base = x_set.without(x);

    std::vector<ElementSet> candidates;
    if (member(base)) {
        candidates.emplace_back(GroundKind::edge);
        return filter_candidates(std::move(candidates), member, k, x_set, x);
    }

    std::vector<char> removed(g.edge_count(), 0);
    for (int e : base) removed[e] = 1;
    Component comp = component_of_edge(g, removed, x);
    auto [u, v] = g.edge(x);

    // Role assignments for the endpoints of x in the star that keeps x:
    // both leaves, or one of them the center with every kept neighbor a leaf.
    auto gamma_minus = [&](int w, int skip_edge) {
        std::vector<int> out;
        for (int e : comp.incidence[w]) {
            if (e != skip_edge) out.push_back(e);
        }
        return out;
    };
    {
        std::vector<int> y = gamma_minus(u, x);
        for (int e : gamma_minus(v, x)) y.push_back(e);
        candidates.push_back(canonicalize(std::move(y), GroundKind::edge));
    }
    auto center_candidate = [&](int leaf, int center) {
        std::vector<int> y = gamma_minus(leaf, x);
        for (int e : comp.incidence[center]) {
            if (e == x) continue;
            auto [a, b] = g.edge(e);
            int w = a == center ? b : a;
            for (int f : gamma_minus(w, e)) y.push_back(f);
        }
        return canonicalize(std::move(y), GroundKind::edge);
    };
    candidates.push_back(center_candidate(u, v));
    candidates.push_back(center_candidate(v, u));

    RestrictedFamily fam = filter_candidates(std::move(candidates), member, k, x_set, x);
    return fam;
}

namespace {

// All minimal transversals of small choice sets, depth-capped at k. The
// recursion branches on the first unhit set; work is counted against `limit`.
void minimal_transversals(const std::vector<std::vector<int>>& sets, int k,
                          std::vector<int>& picks, std::vector<ElementSet>& out,
                          long long& budget) {
    if (--budget < 0) throw Error("restricted_ds: work limit exceeded");
    const std::vector<int>* unhit = nullptr;
    for (const auto& s : sets) {
        bool hit = false;
        for (int w : s) {
            if (std::find(picks.begin(), picks.end(), w) != picks.end()) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            unhit = &s;
            break;
        }
    }
    if (!unhit) {
        out.push_back(canonicalize(picks, GroundKind::vertex));
        return;
    }
    if (static_cast<int>(picks.size()) >= k) return;
    for (int w : *unhit) {
        picks.push_back(w);
        minimal_transversals(sets, k, picks, out, budget);
        picks.pop_back();
    }
}

}  // namespace

RestrictedFamily restricted_ds(const Graph& g, int k, const ElementSet& x_set, int x,
                               long long work_limit) {
    require(x_set.kind() == GroundKind::vertex && x_set.contains(x), "restricted_ds: x not in X");
    require(ds_satisfied(g, x_set), "restricted_ds: X is not a dominating set");
    auto member = [&](const ElementSet& s) { return ds_satisfied(g, s); };
    ElementSet base = x_set.without(x);

    std::vector<char> dominated(g.vertex_count(), 0);
    for (int w : base) {
        dominated[w] = 1;
        for (int z : g.neighbors(w)) dominated[z] = 1;
    }
    std::vector<int> orphans;  // vertices dominated only by x
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (!dominated[w]) orphans.push_back(w);
    }

    std::vector<ElementSet> candidates;
    RestrictedFamily empty_fam;
    empty_fam.source_x_set = x_set;
    empty_fam.source_x = x;
    if (orphans.empty()) {
        candidates.emplace_back(GroundKind::vertex);
        return filter_candidates(std::move(candidates), member, k, x_set, x);
    }

    // Replacement dominators per orphan. An orphan whose only dominator is x
    // makes the whole family empty.
    std::vector<std::vector<int>> choices;
    for (int p : orphans) {
        std::vector<int> opts;
        if (p != x) opts.push_back(p);
        for (int w : g.neighbors(p)) {
            if (w != x) opts.push_back(w);
        }
        std::sort(opts.begin(), opts.end());
        if (opts.empty()) return empty_fam;
        choices.push_back(std::move(opts));
    }
    std::vector<int> picks;
    long long budget = work_limit;
    minimal_transversals(choices, k, picks, candidates, budget);
    return filter_candidates(std::move(candidates), member, k, x_set, x);
}

}  // namespace minenum

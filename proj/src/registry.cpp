#include "minenum/cks.hpp"
#include "minenum/property.hpp"
#include "minenum/seeds.hpp"

namespace minenum {

namespace {

PropertyInstance base_graph_property(std::string name, std::shared_ptr<const Graph> g,
                                     GroundKind kind) {
    PropertyInstance p;
    p.name = std::move(name);
    p.kind = kind;
    p.graph = std::move(g);
    p.ground_size =
        kind == GroundKind::vertex ? p.graph->vertex_count() : p.graph->edge_count();
    return p;
}

}  // namespace

PropertyInstance make_vc_property(std::shared_ptr<const Graph> g) {
    PropertyInstance p = base_graph_property("vc", std::move(g), GroundKind::vertex);
    auto graph = p.graph;
    p.membership = [graph](const ElementSet& s) { return vc_satisfied(*graph, s); };
    p.family_solver = [graph](int k, const ElementSet& x_set, int x) {
        return restricted_vc(*graph, k, x_set, x).members;
    };
    p.seed_strategy = [graph](int k) { return vc_seed(*graph, k); };
    p.seed_factor = 2.0;
    p.output_factor = 3.0;
    return p;
}

PropertyInstance make_bdd_property(std::shared_ptr<const Graph> g, int degree_bound) {
    if (degree_bound < 0) throw Error("bdd: degree bound must be >= 0");
    PropertyInstance p = base_graph_property("bdd", std::move(g), GroundKind::vertex);
    p.degree_bound = degree_bound;
    auto graph = p.graph;
    p.membership = [graph, degree_bound](const ElementSet& s) {
        return bdd_satisfied(*graph, degree_bound, s);
    };
    p.family_solver = [graph, degree_bound](int k, const ElementSet& x_set, int x) {
        return restricted_bdd(*graph, degree_bound, k, x_set, x).members;
    };
    p.seed_strategy = [graph, degree_bound](int k) {
        return bdd_seed(*graph, degree_bound, k);
    };
    p.seed_factor = degree_bound + 2.0;
    p.output_factor = degree_bound + 3.0;
    return p;
}

PropertyInstance make_sfed_property(std::shared_ptr<const Graph> g) {
    PropertyInstance p = base_graph_property("sfed", std::move(g), GroundKind::edge);
    auto graph = p.graph;
    p.membership = [graph](const ElementSet& s) { return sfed_satisfied(*graph, s); };
    p.family_solver = [graph](int k, const ElementSet& x_set, int x) {
        return restricted_sfed(*graph, k, x_set, x).members;
    };
    p.seed_strategy = [graph](int k) { return sfed_seed(*graph, k); };
    p.seed_factor = 3.0;
    p.output_factor = 4.0;
    return p;
}

PropertyInstance make_ds_property(std::shared_ptr<const Graph> g, const PropertyLimits& limits) {
    PropertyInstance p = base_graph_property("ds", std::move(g), GroundKind::vertex);
    auto graph = p.graph;
    long long work_limit = limits.ds_work_limit;
    p.membership = [graph](const ElementSet& s) { return ds_satisfied(*graph, s); };
    p.family_solver = [graph, work_limit](int k, const ElementSet& x_set, int x) {
        return restricted_ds(*graph, k, x_set, x, work_limit).members;
    };
    p.seed_strategy = [graph](int k) { return ds_seed(*graph, k); };
    p.seed_factor = harmonic(p.graph->max_degree() + 1);
    p.output_factor = p.seed_factor + 1;
    return p;
}

PropertyInstance make_eds_property(std::shared_ptr<const Graph> g) {
    PropertyInstance p = base_graph_property("eds", std::move(g), GroundKind::edge);
    auto graph = p.graph;
    p.membership = [graph](const ElementSet& s) { return eds_satisfied(*graph, s); };
    // No restricted solver: the eds traversal generates supergraph arcs
    // directly (type-I / type-II neighbors).
    p.seed_strategy = [graph](int k) { return eds_seed(*graph, k); };
    p.seed_factor = 2.0;
    p.output_factor = 5.0;
    return p;
}

}  // namespace minenum

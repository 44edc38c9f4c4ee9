#include "minenum/randgen.hpp"

#include <algorithm>
#include <set>

namespace minenum {

Graph random_graph(std::mt19937_64& rng, int n, int m) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    std::shuffle(all.begin(), all.end(), rng);
    int take = std::min<int>(m, static_cast<int>(all.size()));
    std::vector<std::pair<int, int>> edges(all.begin(), all.begin() + take);
    std::sort(edges.begin(), edges.end());
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int m) {
    std::set<std::pair<int, int>> chosen;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        int u = order[i], v = order[j];
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<std::pair<int, int>> rest;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!chosen.count({u, v})) rest.emplace_back(u, v);
        }
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    for (const auto& e : rest) {
        if (static_cast<int>(chosen.size()) >= m) break;
        chosen.insert(e);
    }
    std::vector<std::pair<int, int>> edges(chosen.begin(), chosen.end());
    return Graph(n, std::move(edges));
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m, int rank) {
    rank = std::min(rank, n);
    std::vector<std::vector<int>> edges;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    while (static_cast<int>(edges.size()) < m) {
        int size = std::uniform_int_distribution<int>(std::min(2, rank), rank)(rng);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> e(pool.begin(), pool.begin() + size);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace minenum

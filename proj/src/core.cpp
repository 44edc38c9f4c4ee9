#include "minenum/core.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace minenum {

ElementSet::ElementSet(std::vector<int> sorted_unique, GroundKind kind)
    : elems_(std::move(sorted_unique)), kind_(kind) {
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i - 1] >= elems_[i]) {
            throw Error("ElementSet requires strictly ascending identifiers");
        }
    }
}

bool ElementSet::contains(int e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

bool ElementSet::subset_of(const ElementSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
}

ElementSet ElementSet::set_union(const ElementSet& other) const {
    std::vector<int> out;
    out.reserve(elems_.size() + other.elems_.size());
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(out));
    return ElementSet(std::move(out), kind_);
}

ElementSet ElementSet::set_minus(const ElementSet& other) const {
    std::vector<int> out;
    out.reserve(elems_.size());
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
    return ElementSet(std::move(out), kind_);
}

ElementSet ElementSet::with(int e) const {
    std::vector<int> out = elems_;
    auto it = std::lower_bound(out.begin(), out.end(), e);
    if (it == out.end() || *it != e) out.insert(it, e);
    return ElementSet(std::move(out), kind_);
}

ElementSet ElementSet::without(int e) const {
    std::vector<int> out = elems_;
    auto it = std::lower_bound(out.begin(), out.end(), e);
    if (it != out.end() && *it == e) out.erase(it);
    return ElementSet(std::move(out), kind_);
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const {
    // FNV-1a over the element list; the kind never varies within one archive.
    std::size_t h = 1469598103934665603ull;
    for (int e : s.elements()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

ElementSet canonicalize(std::vector<int> raw, GroundKind kind) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return ElementSet(std::move(raw), kind);
}

std::string to_string(const ElementSet& s, int id_offset) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int e : s) {
        if (!first) out << ',';
        out << (e + id_offset);
        first = false;
    }
    out << '}';
    return out.str();
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      adjacency_(vertex_count), incidence_(vertex_count) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        incidence_[u].push_back(static_cast<int>(i));
        incidence_[v].push_back(static_cast<int>(i));
    }
    for (int v = 0; v < vertex_count_; ++v) {
        // Incidence ids ascend already (edges added in id order); sorting the
        // neighbor list keeps both views aligned with ascending iteration.
        std::sort(adjacency_[v].begin(), adjacency_[v].end());
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int id : incidence_[u]) {
        if (edges_[id] == std::make_pair(u, v)) return id;
    }
    return -1;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
    if (vertex_count < 0) throw Error("negative vertex count");
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edge_list.size());
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            throw Error("edge " + std::to_string(i) + ": vertex out of range");
        }
        if (u == v) {
            throw Error("edge " + std::to_string(i) + ": self-loop at vertex " +
                        std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw Error("edge " + std::to_string(i) + ": duplicate edge {" +
                        std::to_string(u) + "," + std::to_string(v) + "}");
        }
        norm.emplace_back(u, v);
    }
    return Graph(vertex_count, std::move(norm));
}

VertexDeletion delete_vertices(const Graph& g, const ElementSet& removed) {
    if (removed.kind() != GroundKind::vertex) {
        throw Error("delete_vertices requires a vertex set");
    }
    if (!removed.empty() &&
        (removed.elements().front() < 0 || removed.elements().back() >= g.vertex_count())) {
        throw Error("vertex identifier out of range");
    }
    std::vector<int> new_id(g.vertex_count(), -1);
    std::vector<int> old_id;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!removed.contains(v)) {
            new_id[v] = static_cast<int>(old_id.size());
            old_id.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> old_edge;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge(i);
        if (new_id[u] >= 0 && new_id[v] >= 0) {
            edges.emplace_back(new_id[u], new_id[v]);
            old_edge.push_back(i);
        }
    }
    return VertexDeletion{Graph(static_cast<int>(old_id.size()), std::move(edges)),
                          std::move(old_id), std::move(new_id), std::move(old_edge)};
}

EdgeDeletion delete_edges(const Graph& g, const ElementSet& removed) {
    if (removed.kind() != GroundKind::edge) {
        throw Error("delete_edges requires an edge set");
    }
    if (!removed.empty() &&
        (removed.elements().front() < 0 || removed.elements().back() >= g.edge_count())) {
        throw Error("edge identifier out of range");
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> old_edge;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!removed.contains(i)) {
            edges.push_back(g.edge(i));
            old_edge.push_back(i);
        }
    }
    return EdgeDeletion{Graph(g.vertex_count(), std::move(edges)), std::move(old_edge)};
}

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges)
    : vertex_count_(vertex_count), hyperedges_(std::move(hyperedges)) {
    for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
        const auto& e = hyperedges_[i];
        if (e.empty()) throw Error("hyperedge " + std::to_string(i) + " is empty");
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= vertex_count_) {
                throw Error("hyperedge " + std::to_string(i) + ": vertex out of range");
            }
            if (j > 0 && e[j - 1] >= e[j]) {
                throw Error("hyperedge " + std::to_string(i) +
                            ": vertices must be strictly ascending");
            }
        }
        rank_ = std::max(rank_, static_cast<int>(e.size()));
    }
}

namespace {

struct LineReader {
    std::istream& in;
    std::string name;
    int line_no = 0;

    // Next significant line split into tokens; skips blanks and '#' comments.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::string tok;
            tokens.clear();
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(name, line_no, what);
    }

    int parse_int(const std::string& tok) const {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) fail("invalid integer '" + tok + "'");
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            fail("invalid integer '" + tok + "'");
        }
    }

    // 1-based in files, 0-based internally.
    int parse_vertex(const std::string& tok, int n) const {
        int v = parse_int(tok);
        if (v < 1 || v > n) fail("vertex " + tok + " out of range 1.." + std::to_string(n));
        return v - 1;
    }
};

}  // namespace

ParsedInstance parse_instance(std::istream& in, const std::string& name) {
    LineReader rd{in, name};
    std::vector<std::string> tok;
    if (!rd.next(tok)) rd.fail("empty instance file");

    ParsedInstance out;
    if (tok[0] == "g") {
        if (tok.size() != 3) rd.fail("expected 'g <n> <m>'");
        int n = rd.parse_int(tok[1]);
        int m = rd.parse_int(tok[2]);
        if (n < 0 || m < 0) rd.fail("negative counts");
        std::vector<std::pair<int, int>> edges;
        std::set<std::pair<int, int>> seen;
        std::vector<int> terminals;
        bool have_terminals = false;
        while (static_cast<int>(edges.size()) < m || !have_terminals) {
            if (!rd.next(tok)) {
                if (static_cast<int>(edges.size()) < m) rd.fail("unexpected end of file: expected more edges");
                break;
            }
            if (tok[0] == "t") {
                if (have_terminals) rd.fail("duplicate terminal line");
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    terminals.push_back(rd.parse_vertex(tok[i], n));
                }
                have_terminals = true;
                continue;
            }
            if (static_cast<int>(edges.size()) >= m) rd.fail("unexpected extra line");
            if (tok.size() != 2) rd.fail("expected edge line 'u v'");
            int u = rd.parse_vertex(tok[0], n);
            int v = rd.parse_vertex(tok[1], n);
            if (u == v) rd.fail("self-loop at vertex " + tok[0]);
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) {
                rd.fail("duplicate edge " + tok[0] + " " + tok[1]);
            }
            edges.emplace_back(key.first, key.second);
        }
        out.graph = Graph(n, std::move(edges));
        if (have_terminals) {
            out.terminals = canonicalize(std::move(terminals), GroundKind::vertex);
        }
    } else if (tok[0] == "h") {
        if (tok.size() != 4) rd.fail("expected 'h <n> <m> <d>'");
        int n = rd.parse_int(tok[1]);
        int m = rd.parse_int(tok[2]);
        int d = rd.parse_int(tok[3]);
        if (n < 0 || m < 0 || d < 0) rd.fail("negative counts");
        std::vector<std::vector<int>> hyperedges;
        while (static_cast<int>(hyperedges.size()) < m) {
            if (!rd.next(tok)) rd.fail("unexpected end of file: expected more hyperedges");
            std::vector<int> e;
            for (const auto& t : tok) e.push_back(rd.parse_vertex(t, n));
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
                rd.fail("repeated vertex in hyperedge");
            }
            if (static_cast<int>(e.size()) > d) {
                rd.fail("hyperedge larger than declared rank " + std::to_string(d));
            }
            hyperedges.push_back(std::move(e));
        }
        out.hypergraph = Hypergraph(n, std::move(hyperedges));
    } else {
        rd.fail("unknown header '" + tok[0] + "' (expected 'g' or 'h')");
    }
    return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_instance(in, path);
}

}  // namespace minenum

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minenum {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input validation failure with a file position attached.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)), line_(line) {}
    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

/// A caller violated a documented operation precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The instance admits no solution at all (e.g. disconnected terminals);
/// rejected when the property is registered.
class InfeasibleInstanceError : public Error {
public:
    using Error::Error;
};

/// Whether identifiers in a set refer to vertices or to edges.
enum class GroundKind { vertex, edge };

/// Canonical subset of the ground set: strictly ascending identifiers plus a
/// kind tag. The ascending representation doubles as the deduplication key
/// used by enumeration archives.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(GroundKind kind) : kind_(kind) {}

    /// Takes an already sorted, duplicate-free list. Throws otherwise.
    ElementSet(std::vector<int> sorted_unique, GroundKind kind);

    const std::vector<int>& elements() const { return elems_; }
    GroundKind kind() const { return kind_; }
    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    bool contains(int e) const;

    bool subset_of(const ElementSet& other) const;
    ElementSet set_union(const ElementSet& other) const;
    ElementSet set_minus(const ElementSet& other) const;
    ElementSet with(int e) const;
    ElementSet without(int e) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const ElementSet& other) const {
        return kind_ == other.kind_ && elems_ == other.elems_;
    }
    bool operator!=(const ElementSet& other) const { return !(*this == other); }
    bool operator<(const ElementSet& other) const { return elems_ < other.elems_; }

private:
    std::vector<int> elems_;
    GroundKind kind_ = GroundKind::vertex;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const;
};

/// Sorts and deduplicates an arbitrary collection into an ElementSet.
ElementSet canonicalize(std::vector<int> raw, GroundKind kind);

std::string to_string(const ElementSet& s, int id_offset = 0);

/// Simple undirected graph over dense 0-based vertices. Edge identity is the
/// index in construction order. No self-loops, no duplicate edges.
/// Immutable after construction; iteration over vertices, neighbors and
/// incident edges is ascending by identifier.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int id) const { return edges_[id]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    /// Edge id for {u, v}, or -1 if absent.
    int find_edge(int u, int v) const;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> incidence_;
};

/// build_graph validates and normalizes an edge list (smaller endpoint
/// first). Rejects out-of-range endpoints, self-loops and duplicates; the
/// message carries the offending pair index.
Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

/// Result of deleting a vertex set: the induced subgraph on the remaining
/// vertices plus the identifier remapping in both directions, so solutions
/// on the reduced graph can be translated back.
struct VertexDeletion {
    Graph graph;
    std::vector<int> old_vertex;  // new id -> original id
    std::vector<int> new_vertex;  // original id -> new id, -1 if deleted
    std::vector<int> old_edge;    // new edge id -> original edge id
};

/// Result of deleting an edge set: same vertex identifiers, surviving edges
/// renumbered densely with the original ids recorded.
struct EdgeDeletion {
    Graph graph;
    std::vector<int> old_edge;  // new edge id -> original edge id
};

VertexDeletion delete_vertices(const Graph& g, const ElementSet& removed);
EdgeDeletion delete_edges(const Graph& g, const ElementSet& removed);

/// Hypergraph with hyperedges stored as strictly ascending vertex lists.
class Hypergraph {
public:
    Hypergraph(int vertex_count, std::vector<std::vector<int>> hyperedges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(hyperedges_.size()); }
    const std::vector<int>& hyperedge(int id) const { return hyperedges_[id]; }
    const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }
    /// Maximum hyperedge size; 0 for an empty edge list.
    int rank() const { return rank_; }

private:
    int vertex_count_ = 0;
    std::vector<std::vector<int>> hyperedges_;
    int rank_ = 0;
};

/// Parsed instance file: exactly one of graph/hypergraph is set. An optional
/// `t` line in graph files lists Steiner terminals.
struct ParsedInstance {
    std::optional<Graph> graph;
    std::optional<Hypergraph> hypergraph;
    std::optional<ElementSet> terminals;
};

/// Text format: comment lines start with '#'. Graphs: `g <n> <m>` then m
/// lines `u v`, 1-based; optionally `t <v1> <v2> ...`. Hypergraphs:
/// `h <n> <m> <d>` then m lines of vertices, 1-based.
ParsedInstance parse_instance(std::istream& in, const std::string& name);
ParsedInstance parse_instance_file(const std::string& path);

}  // namespace minenum

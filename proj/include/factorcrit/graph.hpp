#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <vector>

namespace factorcrit {

/// Subset of the vertices 0..n-1 of some graph.
using VertexSet = boost::dynamic_bitset<>;

VertexSet make_vertex_set(int n, std::initializer_list<int> members);

/// "{0,1,5}" with members ascending.
std::string format_vertex_set(const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitset
/// row per vertex. Rows stay symmetric and loop-free; values are cheap to
/// copy and safe to share between threads once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), VertexSet(static_cast<size_t>(n))) {}

    int order() const { return n_; }

    bool has_edge(int u, int v) const { return rows_[static_cast<size_t>(u)].test(static_cast<size_t>(v)); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return static_cast<int>(rows_[static_cast<size_t>(v)].count()); }

    const VertexSet& neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }

    long long edge_count() const;

    /// Asserts the row invariants (symmetry, no loops). Throws on violation.
    void check_invariants() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

// -- construction primitives -------------------------------------------------

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph with_edge(Graph g, int u, int v);

/// Induced subgraph together with the relabeling it used.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new index -> original vertex
    std::vector<int> new_of_old;  // original vertex -> new index, -1 if deleted
};

InducedSubgraph delete_vertices_mapped(const Graph& g, const VertexSet& s);
Graph delete_vertices(const Graph& g, const VertexSet& s);

// -- queries -------------------------------------------------------------

/// Connected components, each internally connected, sorted by least vertex.
std::vector<VertexSet> components(const Graph& g);

int component_count(const Graph& g);
int odd_component_count(const Graph& g);
int isolated_count(const Graph& g);

int min_degree(const Graph& g);

/// Minimum vertex-cut size; n-1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

bool is_connected(const Graph& g);

/// Adjacency-preserving bijection test by invariant refinement plus
/// backtracking. Meant for small graphs (n up to ~40).
bool is_isomorphic(const Graph& g1, const Graph& g2);

// -- serialization ---------------------------------------------------------

/// graph6, header-less short form only (n <= 62).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

/// "u v" per line; blank lines and '#' comments ignored. Vertex count is
/// max index + 1 unless a larger n is given.
Graph parse_edge_list(const std::string& text, int n_hint = 0);

}  // namespace factorcrit

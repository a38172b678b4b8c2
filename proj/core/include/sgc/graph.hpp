#pragma once

#include "sgc/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgc {

// Simple undirected graph on dense labels 0..n-1.
// Adjacency rows are sorted vectors; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t n) : adj_(n) {}
    // Takes ownership of prepared rows; they must be sorted and symmetric.
    explicit Graph(std::vector<std::vector<Vertex>> rows) : adj_(std::move(rows)) {}

    static Graph from_edges(std::uint32_t n,
                            const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adj_.size()); }
    std::size_t edge_count() const;

    bool has_vertex(Vertex u) const { return u < adj_.size(); }
    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    // Adds the edge if absent, removes it if present.
    void toggle_edge(Vertex u, Vertex v);

    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_.at(u); }
    std::uint32_t degree(Vertex u) const { return static_cast<std::uint32_t>(adj_.at(u).size()); }
    VertexSet neighbor_set(Vertex u) const { return VertexSet(adj_.at(u)); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Exchanges the labels u and v, keeping the edge relation otherwise intact.
    void swap_labels(Vertex u, Vertex v);

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex u) const;
    std::vector<std::vector<Vertex>> adj_;
};

// Toggles every edge/non-edge inside the neighborhood of u.
Graph local_complement(const Graph& g, Vertex u);

// Pivot on the edge uv: toggle all pairs between the three neighborhood
// classes (common, u-only, v-only), then exchange the labels u and v.
// Throws if uv is not an edge.
Graph pivot(const Graph& g, Vertex u, Vertex v);

// Same operation as the triple local complementation g*u*v*u.
// Kept as an independent implementation for cross-checking.
Graph pivot_via_lc(const Graph& g, Vertex u, Vertex v);

// Induced subgraph on V minus {u}; labels above u shift down by one.
Graph delete_vertex(const Graph& g, Vertex u);

// Batch deletion. Returns the residual graph plus the original label of
// every surviving vertex (new label -> old label, ascending).
struct DeletionResult {
    Graph graph;
    std::vector<Vertex> old_of_new;
};
DeletionResult delete_vertices(const Graph& g, const VertexSet& del);

// Induced subgraph on the given label set, relabeled 0..k-1 in ascending
// order of the original labels.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Vertices with an odd number of neighbors in b.
VertexSet odd_neighborhood(const Graph& g, const VertexSet& b);

// Two-coloring when bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

enum class GridKind { Path, Rectangular, Hexagonal, Triangular };

// Deterministic generators, labels (r, c) -> r*cols + c.
// Path uses cols only. Triangular adds the diagonal from the lower-left to
// the upper-right corner of every unit face (rows grow downward, so that is
// the edge (r+1, c)-(r, c+1)). Hexagonal keeps the vertical edge (r, c)-(r+1, c)
// only when r+c is even (brick-wall form of the honeycomb).
Graph generate(GridKind kind, std::uint32_t rows, std::uint32_t cols);

// Isomorphism-invariant digest, exact for n <= 10: upper 16 bits hold n, the
// low 45 bits the lexicographically smallest lower-triangle adjacency bits
// over all vertex orderings. Equal digests imply isomorphic graphs.
std::uint64_t canonical_hash(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

// Induced-subgraph embedding of pattern into host: an injective map taking
// edges to edges and non-edges to non-edges. Returns pattern-vertex -> host
// vertex, or nothing.
std::optional<std::vector<Vertex>> find_induced_embedding(const Graph& pattern,
                                                          const Graph& host);

} // namespace sgc

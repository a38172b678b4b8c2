#pragma once

#include "sgc/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace sgc {

struct OrbitMember {
    Graph graph;  // labeled graph as produced by replaying the pivots
    std::vector<std::pair<Vertex, Vertex>> pivots;  // from the seed, in order
};

struct OrbitIndex {
    std::vector<OrbitMember> members;  // members[0] is the seed
    bool truncated = false;
};

// Breadth-first closure of g under single pivots, deduplicating by
// isomorphism digest (so each member is one labeled representative of its
// class). Needs |V| <= 10. Stops with truncated = true when max_size
// representatives have been collected and more remain.
OrbitIndex pivot_orbit(const Graph& g, std::size_t max_size = 20000);

enum class MinorAnswer { Yes, No, Unknown };

struct PivotMinorWitness {
    std::vector<std::pair<Vertex, Vertex>> pivots;
    std::vector<Vertex> deletions;  // labels valid after the pivot sequence
    std::vector<Vertex> embedding;  // embedding[v of g] = surviving label of h
};

struct MinorResult {
    MinorAnswer answer = MinorAnswer::Unknown;
    std::optional<PivotMinorWitness> witness;
};

// Is g an induced subgraph of some member of h's pivot orbit? Labeled mode
// (up_to_iso = false) demands the identity embedding on labels
// 0..|V(g)|-1. Pivots and deletions both preserve bipartiteness, so a
// bipartite h refutes a non-bipartite g immediately. A truncated orbit
// walk that found nothing answers Unknown.
MinorResult is_pivot_minor(const Graph& g, const Graph& h, bool up_to_iso = true,
                           std::size_t max_orbit = 20000);

// Applies the pivots, then deletes the listed vertices; returns the
// residual with compacted labels. Throws on a non-edge pivot or an invalid
// deletion.
Graph replay_witness(const Graph& h, const PivotMinorWitness& witness);

// Replays the witness on h and checks the residual is exactly the image of
// g under the witness embedding.
bool witness_matches(const Graph& g, const Graph& h, const PivotMinorWitness& witness);

} // namespace sgc

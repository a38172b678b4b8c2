#pragma once

#include "sgc/graph.hpp"
#include "sgc/vertex_set.hpp"

namespace sgc {

// Graph with designated input and output vertex sets. The sets may
// intersect; a vertex in both passes through unmeasured.
struct OpenGraph {
    Graph graph;
    VertexSet inputs;
    VertexSet outputs;
};

} // namespace sgc

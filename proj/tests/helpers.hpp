#pragma once
// Shared fixtures: small-graph enumeration, random states, and a norm-sensitive
// phase-insensitive state comparison used to pin measurement scaling.

#include "sgc/graph.hpp"
#include "sgc/oracle.hpp"
#include "sgc/signed_state.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace sgc::testing {

inline constexpr double kPi = std::numbers::pi;

inline Graph path_graph(Vertex n) { return generate(GridKind::Path, 1, n); }

inline Graph complete_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
    return Graph::from_edges(n, e);
}

inline Graph star_graph(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v < n; ++v) e.push_back({0, v});
    return Graph::from_edges(n, e);
}

// All labeled graphs on n vertices. 2^(n(n-1)/2) of them; keep n small.
inline std::vector<Graph> all_graphs(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) e.push_back(slots[i]);
        out.push_back(Graph::from_edges(n, e));
    }
    return out;
}

inline std::vector<VertexSet> all_subsets(Vertex n) {
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> items;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) items.push_back(v);
        out.push_back(VertexSet(std::move(items)));
    }
    return out;
}

inline Graph random_graph(Vertex n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

inline SignedGraphState random_state(Vertex n, std::mt19937_64& rng) {
    Graph g = random_graph(n, 0.5, rng);
    std::vector<Vertex> marks;
    for (Vertex v = 0; v < n; ++v)
        if (rng() & 1) marks.push_back(v);
    return {std::move(g), VertexSet(std::move(marks))};
}

// Renames labels to 0..k-1. Vertex deletion compacts in ascending order, so
// this identifies a projected oracle state with the rewritten one.
inline StateVector compacted(StateVector sv) {
    std::iota(sv.labels.begin(), sv.labels.end(), Vertex{0});
    return sv;
}

// max_i |b_i - e^{i theta} a_i| with theta chosen from the total overlap.
// Unlike an overlap test this rejects norm mismatches, so the sqrt(2) and 2
// measurement prefactors are actually checked.
inline double phase_distance(const StateVector& a, const StateVector& b) {
    if (a.labels != b.labels || a.amp.size() != b.amp.size()) return 1e9;
    Complex s{0, 0};
    for (std::size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    const Complex phase = std::abs(s) > 1e-15 ? s / std::abs(s) : Complex{1, 0};
    double worst = 0;
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        worst = std::max(worst, std::abs(b.amp[i] - phase * a.amp[i]));
    return worst;
}

inline bool same_ray_same_norm(const StateVector& a, const StateVector& b,
                               double tol = 1e-9) {
    return phase_distance(a, b) < tol;
}

inline StateVector scaled(StateVector sv, double f) {
    for (Complex& a : sv.amp) a *= f;
    return sv;
}

} // namespace sgc::testing

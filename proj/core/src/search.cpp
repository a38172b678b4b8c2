#include "sgc/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sgc {

namespace {

// Exact labeled-adjacency key: members that differ only by relabeling stay distinct.
std::string adjacency_key(const Graph& g) {
    std::string key;
    for (const auto& [u, v] : g.edges()) {
        key.append(reinterpret_cast<const char*>(&u), sizeof(u));
        key.append(reinterpret_cast<const char*>(&v), sizeof(v));
    }
    return key;
}

} // namespace

OrbitIndex pivot_orbit(const Graph& g, std::size_t max_size) {
    if (max_size == 0) throw std::invalid_argument("orbit bound must be positive");
    OrbitIndex orbit;
    std::unordered_set<std::string> seen;
    seen.insert(adjacency_key(g));
    orbit.members.push_back({g, {}});
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
        // edges() is copied up front: members may reallocate as we append
        const auto edges = orbit.members[i].graph.edges();
        for (const auto& [u, v] : edges) {
            Graph next = pivot(orbit.members[i].graph, u, v);
            std::string key = adjacency_key(next);
            if (!seen.insert(std::move(key)).second) continue;
            if (orbit.members.size() >= max_size) {
                orbit.truncated = true;
                return orbit;
            }
            OrbitMember m{std::move(next), orbit.members[i].pivots};
            m.pivots.push_back({u, v});
            orbit.members.push_back(std::move(m));
        }
    }
    return orbit;
}

namespace {

std::vector<Vertex> complement_of(const std::vector<Vertex>& image, Vertex n) {
    std::vector<char> hit(n, 0);
    for (Vertex v : image) hit[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (!hit[v]) out.push_back(v);
    return out;
}

} // namespace

MinorResult is_pivot_minor(const Graph& g, const Graph& h, bool up_to_iso,
                           std::size_t max_orbit) {
    const Vertex ng = g.vertex_count();
    const Vertex nh = h.vertex_count();
    if (ng > nh) return {MinorAnswer::No, std::nullopt};
    if (ng == 0) {
        PivotMinorWitness w;
        for (Vertex v = 0; v < nh; ++v) w.deletions.push_back(v);
        return {MinorAnswer::Yes, std::move(w)};
    }
    if (is_bipartite(h) && !is_bipartite(g)) return {MinorAnswer::No, std::nullopt};

    OrbitIndex orbit = pivot_orbit(h, max_orbit);
    for (const OrbitMember& m : orbit.members) {
        if (!up_to_iso) {
            bool match = true;
            for (Vertex u = 0; u < ng && match; ++u)
                for (Vertex v = u + 1; v < ng; ++v)
                    if (m.graph.has_edge(u, v) != g.has_edge(u, v)) {
                        match = false;
                        break;
                    }
            if (!match) continue;
            PivotMinorWitness w;
            w.pivots = m.pivots;
            for (Vertex v = ng; v < nh; ++v) w.deletions.push_back(v);
            for (Vertex v = 0; v < ng; ++v) w.embedding.push_back(v);
            return {MinorAnswer::Yes, std::move(w)};
        }
        if (auto emb = find_induced_embedding(g, m.graph)) {
            PivotMinorWitness w;
            w.pivots = m.pivots;
            w.deletions = complement_of(*emb, nh);
            w.embedding = std::move(*emb);
            return {MinorAnswer::Yes, std::move(w)};
        }
    }
    if (orbit.truncated) return {MinorAnswer::Unknown, std::nullopt};
    return {MinorAnswer::No, std::nullopt};
}

Graph replay_witness(const Graph& h, const PivotMinorWitness& witness) {
    Graph cur = h;
    for (const auto& [u, v] : witness.pivots) {
        if (!cur.has_edge(u, v))
            throw std::invalid_argument("witness pivot (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge");
        cur = pivot(cur, u, v);
    }
    std::vector<Vertex> dels = witness.deletions;
    std::sort(dels.begin(), dels.end());
    if (std::adjacent_find(dels.begin(), dels.end()) != dels.end())
        throw std::invalid_argument("witness deletes a vertex twice");
    for (Vertex v : dels)
        if (v >= cur.vertex_count())
            throw std::invalid_argument("witness deletes a missing vertex");
    return delete_vertices(cur, VertexSet(dels)).graph;
}

bool witness_matches(const Graph& g, const Graph& h, const PivotMinorWitness& witness) {
    const Vertex ng = g.vertex_count();
    if (witness.embedding.size() != ng) return false;
    if (witness.deletions.size() + ng != h.vertex_count()) return false;

    Graph cur = h;
    try {
        for (const auto& [u, v] : witness.pivots) cur = pivot(cur, u, v);
    } catch (const std::exception&) {
        return false;
    }
    std::vector<char> deleted(h.vertex_count(), 0);
    for (Vertex v : witness.deletions) {
        if (v >= h.vertex_count() || deleted[v]) return false;
        deleted[v] = 1;
    }
    std::vector<char> used(h.vertex_count(), 0);
    for (Vertex v : witness.embedding) {
        if (v >= h.vertex_count() || deleted[v] || used[v]) return false;
        used[v] = 1;
    }
    for (Vertex u = 0; u < ng; ++u)
        for (Vertex v = u + 1; v < ng; ++v)
            if (cur.has_edge(witness.embedding[u], witness.embedding[v]) != g.has_edge(u, v))
                return false;
    return true;
}

} // namespace sgc

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sgc {

using Vertex = std::uint32_t;

// Sorted set of vertex labels. Kept sorted and duplicate-free at all times.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> init) : v_(init) { normalize(); }
    explicit VertexSet(std::vector<Vertex> items) : v_(std::move(items)) { normalize(); }

    bool contains(Vertex u) const {
        return std::binary_search(v_.begin(), v_.end(), u);
    }
    void insert(Vertex u) {
        auto it = std::lower_bound(v_.begin(), v_.end(), u);
        if (it == v_.end() || *it != u) v_.insert(it, u);
    }
    void erase(Vertex u) {
        auto it = std::lower_bound(v_.begin(), v_.end(), u);
        if (it != v_.end() && *it == u) v_.erase(it);
    }
    // Membership flip; the workhorse for symmetric-difference updates.
    void toggle(Vertex u) {
        auto it = std::lower_bound(v_.begin(), v_.end(), u);
        if (it != v_.end() && *it == u) v_.erase(it);
        else v_.insert(it, u);
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<Vertex>& items() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }
    std::vector<Vertex> v_;
};

inline VertexSet sym_diff(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return VertexSet(std::move(out));
}

} // namespace sgc

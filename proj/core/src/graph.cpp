#include "sgc/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>

namespace sgc {

Graph Graph::from_edges(std::uint32_t n,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.size();
    return total / 2;
}

void Graph::check_vertex(Vertex u) const {
    if (u >= adj_.size())
        throw std::out_of_range("unknown vertex " + std::to_string(u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    auto ins = [](std::vector<Vertex>& row, Vertex w) {
        auto it = std::lower_bound(row.begin(), row.end(), w);
        if (it == row.end() || *it != w) row.insert(it, w);
    };
    ins(adj_[u], v);
    ins(adj_[v], u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto del = [](std::vector<Vertex>& row, Vertex w) {
        auto it = std::lower_bound(row.begin(), row.end(), w);
        if (it != row.end() && *it == w) row.erase(it);
    };
    del(adj_[u], v);
    del(adj_[v], u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    if (has_edge(u, v)) remove_edge(u, v);
    else add_edge(u, v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::swap_labels(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    std::swap(adj_[u], adj_[v]);
    auto fix = [&](std::vector<Vertex>& row) {
        bool changed = false;
        for (Vertex& w : row) {
            if (w == u) { w = v; changed = true; }
            else if (w == v) { w = u; changed = true; }
        }
        if (changed) std::sort(row.begin(), row.end());
    };
    fix(adj_[u]);
    fix(adj_[v]);
    // Rows of vertices adjacent to exactly one of u, v need their entry swapped.
    std::vector<Vertex> touched;
    touched.reserve(adj_[u].size() + adj_[v].size());
    for (Vertex w : adj_[u]) if (w != u && w != v) touched.push_back(w);
    for (Vertex w : adj_[v]) if (w != u && w != v) touched.push_back(w);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (Vertex w : touched) fix(adj_[w]);
}

Graph local_complement(const Graph& g, Vertex u) {
    if (!g.has_vertex(u)) throw std::out_of_range("unknown vertex");
    Graph h = g;
    const auto& nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            h.toggle_edge(nb[i], nb[j]);
    return h;
}

Graph pivot(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("pivot requires an edge");
    VertexSet nu = g.neighbor_set(u);
    VertexSet nv = g.neighbor_set(v);
    VertexSet common = set_intersect(nu, nv);
    VertexSet only_u = set_minus(set_minus(nu, nv), VertexSet{v});
    VertexSet only_v = set_minus(set_minus(nv, nu), VertexSet{u});
    Graph h = g;
    auto toggle_between = [&h](const VertexSet& a, const VertexSet& b) {
        for (Vertex x : a)
            for (Vertex y : b) h.toggle_edge(x, y);
    };
    toggle_between(only_u, only_v);
    toggle_between(only_u, common);
    toggle_between(only_v, common);
    h.swap_labels(u, v);
    return h;
}

Graph pivot_via_lc(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("pivot requires an edge");
    return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph delete_vertex(const Graph& g, Vertex u) {
    if (!g.has_vertex(u)) throw std::out_of_range("unknown vertex");
    VertexSet keep;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (w != u) keep.insert(w);
    return induced_subgraph(g, keep);
}

DeletionResult delete_vertices(const Graph& g, const VertexSet& del) {
    std::vector<Vertex> old_of_new;
    old_of_new.reserve(g.vertex_count() - del.size());
    std::vector<Vertex> new_of_old(g.vertex_count(), UINT32_MAX);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (!del.contains(w)) {
            new_of_old[w] = static_cast<Vertex>(old_of_new.size());
            old_of_new.push_back(w);
        }
    }
    Graph h(static_cast<std::uint32_t>(old_of_new.size()));
    for (Vertex w : old_of_new)
        for (Vertex x : g.neighbors(w))
            if (new_of_old[x] != UINT32_MAX && w < x)
                h.add_edge(new_of_old[w], new_of_old[x]);
    return {std::move(h), std::move(old_of_new)};
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    VertexSet del;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (!keep.contains(w)) del.insert(w);
    return delete_vertices(g, del).graph;
}

VertexSet odd_neighborhood(const Graph& g, const VertexSet& b) {
    std::vector<std::uint8_t> parity(g.vertex_count(), 0);
    for (Vertex u : b) {
        if (!g.has_vertex(u)) throw std::out_of_range("unknown vertex");
        for (Vertex w : g.neighbors(u)) parity[w] ^= 1;
    }
    std::vector<Vertex> out;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (parity[w]) out.push_back(w);
    return VertexSet(std::move(out));
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

Graph generate(GridKind kind, std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("grid dimensions must be positive");
    if (kind == GridKind::Path) {
        Graph g(cols);
        for (Vertex c = 0; c + 1 < cols; ++c) g.add_edge(c, c + 1);
        return g;
    }
    Graph g(rows * cols);
    auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
    for (Vertex r = 0; r < rows; ++r)
        for (Vertex c = 0; c + 1 < cols; ++c)
            g.add_edge(id(r, c), id(r, c + 1));
    for (Vertex r = 0; r + 1 < rows; ++r)
        for (Vertex c = 0; c < cols; ++c) {
            if (kind == GridKind::Hexagonal && (r + c) % 2 != 0) continue;
            g.add_edge(id(r, c), id(r + 1, c));
        }
    if (kind == GridKind::Triangular)
        for (Vertex r = 0; r + 1 < rows; ++r)
            for (Vertex c = 0; c + 1 < cols; ++c)
                g.add_edge(id(r + 1, c), id(r, c + 1));
    return g;
}

namespace {

// Branch-and-bound search for the lexicographically smallest lower-triangle
// adjacency bit string over all vertex orderings compatible with the stable
// coloring. Exact for n <= 10 (45 bits fit one word).
struct CanonicalSearch {
    std::uint32_t n = 0;
    std::array<std::uint16_t, 10> row{};
    std::vector<int> color;
    std::vector<int> color_seq;
    std::uint64_t best = ~0ULL;
    std::vector<std::uint64_t> best_prefix;
    std::array<Vertex, 10> placed{};
    std::uint32_t used_mask = 0;

    void refine_colors(const Graph& g) {
        color.assign(n, 0);
        for (Vertex u = 0; u < n; ++u) color[u] = static_cast<int>(g.degree(u));
        normalize_colors();
        for (;;) {
            std::vector<std::pair<std::vector<int>, Vertex>> keys(n);
            for (Vertex u = 0; u < n; ++u) {
                std::vector<int> key;
                key.push_back(color[u]);
                std::vector<int> nb;
                for (Vertex w = 0; w < n; ++w)
                    if (row[u] & (1u << w)) nb.push_back(color[w]);
                std::sort(nb.begin(), nb.end());
                key.insert(key.end(), nb.begin(), nb.end());
                keys[u] = {std::move(key), u};
            }
            auto sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(n);
            int c = 0;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
                next[sorted[i].second] = c;
            }
            if (next == color) break;
            color = std::move(next);
        }
        color_seq.clear();
        for (Vertex u = 0; u < n; ++u) color_seq.push_back(color[u]);
        std::sort(color_seq.begin(), color_seq.end());
    }

    void normalize_colors() {
        std::vector<int> vals(color);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (auto& c : color)
            c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
    }

    void search(std::uint32_t depth, std::uint64_t acc) {
        if (depth == n) {
            if (acc < best) {
                best = acc;
                for (std::uint32_t k = 0; k <= n; ++k) best_prefix[k] = prefix_of(acc, k);
            }
            return;
        }
        int want = color_seq[depth];
        std::uint32_t twin_seen = 0;
        for (Vertex x = 0; x < n; ++x) {
            if (used_mask & (1u << x)) continue;
            if (color[x] != want) continue;
            if (twin_seen & (1u << x)) continue;
            // Skip later members of each twin pair; exchanging twins is an
            // automorphism, so one representative suffices.
            for (Vertex y = x + 1; y < n; ++y) {
                if (used_mask & (1u << y)) continue;
                if (color[y] != color[x]) continue;
                std::uint16_t mask = static_cast<std::uint16_t>(~((1u << x) | (1u << y)));
                if ((row[x] & mask) == (row[y] & mask)) twin_seen |= (1u << y);
            }
            std::uint64_t bits = 0;
            for (std::uint32_t j = 0; j < depth; ++j)
                bits = (bits << 1) | ((row[x] >> placed[j]) & 1u);
            std::uint64_t next_acc = (acc << depth) | bits;
            // best_prefix tightens as leaves improve; ties must still descend.
            if (next_acc > best_prefix[depth + 1]) continue;
            placed[depth] = x;
            used_mask |= (1u << x);
            search(depth + 1, next_acc);
            used_mask &= ~(1u << x);
        }
    }

    std::uint64_t prefix_of(std::uint64_t acc, std::uint32_t k) const {
        // acc holds the bits of all n placed rows; a prefix of k rows has
        // k(k-1)/2 bits, sitting above the remaining rows' bits.
        std::uint32_t total_bits = n * (n - 1) / 2;
        std::uint32_t prefix_bits = k * (k - 1) / 2;
        return acc >> (total_bits - prefix_bits);
    }
};

} // namespace

std::uint64_t canonical_hash(const Graph& g) {
    std::uint32_t n = g.vertex_count();
    if (n > 10)
        throw std::invalid_argument("canonical_hash limited to n <= 10");
    if (n == 0) return 0;
    CanonicalSearch cs;
    cs.n = n;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.neighbors(u)) cs.row[u] |= static_cast<std::uint16_t>(1u << w);
    cs.refine_colors(g);
    cs.best_prefix.assign(n + 1, ~0ULL);
    for (std::uint32_t k = 0; k <= n; ++k) {
        std::uint32_t bits = k * (k - 1) / 2;
        cs.best_prefix[k] = bits >= 64 ? ~0ULL : ((bits == 0) ? 0 : ((1ULL << bits) - 1));
    }
    // Seed the bound with the identity ordering so pruning is active from the start.
    {
        std::uint64_t acc = 0;
        for (std::uint32_t k = 0; k < n; ++k) {
            std::uint64_t bits = 0;
            for (std::uint32_t j = 0; j < k; ++j)
                bits = (bits << 1) | ((cs.row[k] >> j) & 1u);
            acc = (acc << k) | bits;
        }
        // The identity ordering may not respect the color sequence; use it only
        // when it does, otherwise leave the bound at all-ones.
        bool color_ok = true;
        for (std::uint32_t k = 0; k < n; ++k)
            if (cs.color[k] != cs.color_seq[k]) { color_ok = false; break; }
        if (color_ok) {
            cs.best = acc;
            for (std::uint32_t k = 0; k <= n; ++k) cs.best_prefix[k] = cs.prefix_of(acc, k);
        }
    }
    cs.search(0, 0);
    return (static_cast<std::uint64_t>(n) << 48) | cs.best;
}

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    return canonical_hash(g) == canonical_hash(h);
}

namespace {

struct EmbeddingSearch {
    const Graph* pattern;
    const Graph* host;
    std::vector<Vertex> order;       // pattern vertices, connectivity-first
    std::vector<Vertex> map;         // pattern -> host, UINT32_MAX when unset
    std::vector<bool> host_used;

    bool run() {
        return place(0);
    }

    bool place(std::size_t k) {
        if (k == order.size()) return true;
        Vertex p = order[k];
        for (Vertex h = 0; h < host->vertex_count(); ++h) {
            if (host_used[h]) continue;
            if (host->degree(h) < pattern->degree(p)) continue;
            bool ok = true;
            for (Vertex q = 0; q < pattern->vertex_count(); ++q) {
                if (map[q] == UINT32_MAX) continue;
                bool pe = pattern->has_edge(p, q);
                bool he = host->has_edge(h, map[q]);
                if (pe != he) { ok = false; break; }
            }
            if (!ok) continue;
            map[p] = h;
            host_used[h] = true;
            if (place(k + 1)) return true;
            host_used[h] = false;
            map[p] = UINT32_MAX;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Vertex>> find_induced_embedding(const Graph& pattern,
                                                          const Graph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    EmbeddingSearch es;
    es.pattern = &pattern;
    es.host = &host;
    es.map.assign(pattern.vertex_count(), UINT32_MAX);
    es.host_used.assign(host.vertex_count(), false);
    // Order pattern vertices by BFS from the highest-degree vertex so each
    // placement is constrained by already-placed neighbors.
    std::vector<bool> seen(pattern.vertex_count(), false);
    std::vector<Vertex> by_degree(pattern.vertex_count());
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    for (Vertex s : by_degree) {
        if (seen[s]) continue;
        std::deque<Vertex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            es.order.push_back(u);
            for (Vertex w : pattern.neighbors(u))
                if (!seen[w]) { seen[w] = true; queue.push_back(w); }
        }
    }
    if (es.run()) return es.map;
    return std::nullopt;
}

} // namespace sgc

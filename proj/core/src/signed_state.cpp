#include "sgc/signed_state.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace sgc {

namespace {

// Sorted-vector helpers local to the rewrite engine.
std::vector<Vertex> vec_minus_one(const std::vector<Vertex>& a, Vertex x) {
    std::vector<Vertex> r;
    r.reserve(a.size());
    for (Vertex w : a)
        if (w != x) r.push_back(w);
    return r;
}

std::vector<Vertex> vec_intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<Vertex> vec_minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

VertexSet relabel_after_delete(const VertexSet& s, const std::vector<Vertex>& deleted_sorted) {
    VertexSet out;
    for (Vertex w : s) {
        if (std::binary_search(deleted_sorted.begin(), deleted_sorted.end(), w)) continue;
        auto shift = std::upper_bound(deleted_sorted.begin(), deleted_sorted.end(), w) -
                     deleted_sorted.begin();
        out.insert(static_cast<Vertex>(w - shift));
    }
    return out;
}

} // namespace

SignedGraphState apply_pauli(const SignedGraphState& st, const PauliWord& p) {
    for (Vertex w : p.x)
        if (!st.graph.has_vertex(w)) throw std::invalid_argument("pauli X support out of range");
    for (Vertex w : p.z)
        if (!st.graph.has_vertex(w)) throw std::invalid_argument("pauli Z support out of range");
    VertexSet sign = sym_diff(st.sign, p.z);
    sign = sym_diff(sign, odd_neighborhood(st.graph, p.x));
    return {st.graph, std::move(sign)};
}

SignedGraphState apply_lc_op(const SignedGraphState& st, Vertex u) {
    if (!st.graph.has_vertex(u)) throw std::invalid_argument("lc vertex out of range");
    VertexSet sign = st.sign;
    if (st.sign.contains(u)) sign = sym_diff(sign, st.graph.neighbor_set(u));
    return {local_complement(st.graph, u), std::move(sign)};
}

SignedGraphState apply_hadamard_pair(const SignedGraphState& st, Vertex u, Vertex v) {
    if (!st.graph.has_edge(u, v)) throw std::invalid_argument("hadamard pair requires an edge");
    const VertexSet nu = st.graph.neighbor_set(u);
    const VertexSet nv = st.graph.neighbor_set(v);
    const bool mu = st.sign.contains(u);
    const bool mv = st.sign.contains(v);

    VertexSet sign = st.sign;
    sign.erase(u);
    sign.erase(v);
    // A single mark rides the label swap to the other endpoint and flips that
    // endpoint's private neighbors; common neighbors flip only when the two
    // endpoints agree.
    VertexSet t;
    if (!mu && !mv) t = set_intersect(nu, nv);
    else if (mu && !mv) { t = set_minus(nv, nu); t.erase(u); t.insert(v); }
    else if (!mu && mv) { t = set_minus(nu, nv); t.erase(v); t.insert(u); }
    else t = set_union(nu, nv);
    sign = sym_diff(sign, t);

    return {pivot(st.graph, u, v), std::move(sign)};
}

SignedGraphState measure_z(const SignedGraphState& st, Vertex u, int s) {
    if (!st.graph.has_vertex(u)) throw std::invalid_argument("measured vertex out of range");
    VertexSet sign = st.sign;
    sign.erase(u);
    if (s) sign = sym_diff(sign, st.graph.neighbor_set(u));
    return {delete_vertex(st.graph, u), relabel_after_delete(sign, {u})};
}

SignedGraphState measure_x_pair(const SignedGraphState& st, Vertex u, Vertex v,
                                int outcome_u, int outcome_v) {
    if (!st.graph.has_edge(u, v)) throw std::invalid_argument("x pair requires an edge");
    const std::vector<Vertex>& nu_row = st.graph.neighbors(u);
    const std::vector<Vertex>& nv_row = st.graph.neighbors(v);
    const bool mu = st.sign.contains(u);
    const bool mv = st.sign.contains(v);

    const std::vector<Vertex> nu = vec_minus_one(nu_row, v);
    const std::vector<Vertex> nv = vec_minus_one(nv_row, u);
    const std::vector<Vertex> shared = vec_intersect(nu, nv);

    VertexSet sign = st.sign;
    sign.erase(u);
    sign.erase(v);
    sign = sym_diff(sign, VertexSet(shared));
    if ((outcome_v ^ (mv ? 1 : 0)) & 1) sign = sym_diff(sign, VertexSet(nu));
    if ((outcome_u ^ (mu ? 1 : 0)) & 1) sign = sym_diff(sign, VertexSet(nv));

    // Pivot toggles, then drop both endpoints; the label swap would be erased
    // by the deletions, so it is skipped.
    Graph g = st.graph;
    const std::vector<Vertex> a = vec_minus(nu, nv);
    const std::vector<Vertex> b = vec_minus(nv, nu);
    for (Vertex x : a)
        for (Vertex y : b) g.toggle_edge(x, y);
    for (Vertex x : a)
        for (Vertex y : shared) g.toggle_edge(x, y);
    for (Vertex x : b)
        for (Vertex y : shared) g.toggle_edge(x, y);

    std::vector<Vertex> dead{std::min(u, v), std::max(u, v)};
    auto del = delete_vertices(g, VertexSet(dead));
    return {std::move(del.graph), relabel_after_delete(sign, dead)};
}

IsolatedXResult measure_x_isolated(const SignedGraphState& st, Vertex u) {
    if (!st.graph.has_vertex(u)) throw std::invalid_argument("measured vertex out of range");
    if (st.graph.degree(u) != 0)
        throw std::invalid_argument("single X measurement needs an isolated vertex");
    const int outcome = st.sign.contains(u) ? 1 : 0;
    VertexSet sign = st.sign;
    sign.erase(u);
    return {outcome, {delete_vertex(st.graph, u), relabel_after_delete(sign, {u})}};
}

ReplayResult replay_plan(const SignedGraphState& st, const VertexSet& x_set,
                         const VertexSet& z_set, OutcomeSource& outcomes,
                         PairStrategy strategy) {
    const Vertex n = st.graph.vertex_count();
    for (Vertex v : x_set)
        if (v >= n) throw std::invalid_argument("x vertex out of range");
    for (Vertex v : z_set)
        if (v >= n) throw std::invalid_argument("z vertex out of range");
    if (!set_intersect(x_set, z_set).empty())
        throw std::invalid_argument("x and z sets overlap");

    ReplayResult out;

    // Z phase. The Z rule never reads the measured vertex's own sign bit, so
    // the deletions commute with the sign toggles and batch into one pass
    // over the starting graph.
    std::vector<char> sign_bits(n, 0);
    for (Vertex v : st.sign) sign_bits[v] = 1;
    for (Vertex u : z_set) {
        const int s = outcomes.next();
        out.schedule.push_back({ScheduleStep::Op::Z, {u}, {s}});
        if (s)
            for (Vertex w : st.graph.neighbors(u)) sign_bits[w] ^= 1;
    }

    auto del = delete_vertices(st.graph, z_set);
    std::vector<std::vector<Vertex>> adj;
    adj.reserve(del.graph.vertex_count());
    for (Vertex i = 0; i < del.graph.vertex_count(); ++i) adj.push_back(del.graph.neighbors(i));
    const std::vector<Vertex> orig = std::move(del.old_of_new);  // strictly increasing
    const Vertex m = static_cast<Vertex>(orig.size());

    std::vector<char> sign(m, 0), xflag(m, 0), alive(m, 1);
    for (Vertex i = 0; i < m; ++i) {
        sign[i] = sign_bits[orig[i]];
        xflag[i] = x_set.contains(orig[i]) ? 1 : 0;
    }

    auto row_has = [&](Vertex i, Vertex j) {
        return std::binary_search(adj[i].begin(), adj[i].end(), j);
    };
    auto row_toggle = [&](Vertex i, Vertex j) {
        auto it = std::lower_bound(adj[i].begin(), adj[i].end(), j);
        if (it != adj[i].end() && *it == j) adj[i].erase(it);
        else adj[i].insert(it, j);
        auto jt = std::lower_bound(adj[j].begin(), adj[j].end(), i);
        if (jt != adj[j].end() && *jt == i) adj[j].erase(jt);
        else adj[j].insert(jt, i);
    };

    // Candidate X-X edges. orig is increasing, so ordering by current index
    // matches ordering by starting-graph label.
    std::set<std::pair<Vertex, Vertex>> cand;
    for (Vertex i = 0; i < m; ++i) {
        if (!xflag[i]) continue;
        for (Vertex j : adj[i])
            if (j > i && xflag[j]) cand.insert({i, j});
    }

    while (!cand.empty()) {
        const auto [a, b] =
            strategy == PairStrategy::LowestEdge ? *cand.begin() : *cand.rbegin();
        const int oa = outcomes.next();
        const int ob = outcomes.next();
        out.schedule.push_back({ScheduleStep::Op::XPair, {orig[a], orig[b]}, {oa, ob}});

        const std::vector<Vertex> na = vec_minus_one(adj[a], b);
        const std::vector<Vertex> nb = vec_minus_one(adj[b], a);
        const std::vector<Vertex> shared = vec_intersect(na, nb);
        const std::vector<Vertex> ca = vec_minus(na, nb);
        const std::vector<Vertex> cb = vec_minus(nb, na);

        for (Vertex w : shared) sign[w] ^= 1;
        if ((ob ^ sign[b]) & 1)
            for (Vertex w : na) sign[w] ^= 1;
        if ((oa ^ sign[a]) & 1)
            for (Vertex w : nb) sign[w] ^= 1;

        for (Vertex x : ca)
            for (Vertex y : cb) row_toggle(x, y);
        for (Vertex x : ca)
            for (Vertex y : shared) row_toggle(x, y);
        for (Vertex x : cb)
            for (Vertex y : shared) row_toggle(x, y);

        for (Vertex w : adj[a]) {
            auto it = std::lower_bound(adj[w].begin(), adj[w].end(), a);
            adj[w].erase(it);
            cand.erase({std::min(a, w), std::max(a, w)});
        }
        for (Vertex w : adj[b]) {
            auto it = std::lower_bound(adj[w].begin(), adj[w].end(), b);
            adj[w].erase(it);
            cand.erase({std::min(b, w), std::max(b, w)});
        }
        adj[a].clear();
        adj[b].clear();
        alive[a] = alive[b] = 0;
        sign[a] = sign[b] = 0;

        // Only adjacency between former neighbors of a or b changed.
        std::vector<Vertex> touched;
        std::set_union(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(touched));
        touched = vec_minus(touched, {std::min(a, b), std::max(a, b)});
        for (std::size_t i = 0; i < touched.size(); ++i)
            for (std::size_t j = i + 1; j < touched.size(); ++j) {
                const Vertex x = touched[i], y = touched[j];
                cand.erase({x, y});
                if (xflag[x] && xflag[y] && row_has(x, y)) cand.insert({x, y});
            }
    }

    for (Vertex i = 0; i < m; ++i) {
        if (!alive[i] || !xflag[i]) continue;
        if (!adj[i].empty())
            throw std::runtime_error(
                "plan leaves a lone X vertex with neighbors; the result is not a "
                "signed graph state");
        out.schedule.push_back({ScheduleStep::Op::XIso, {orig[i]}, {sign[i]}});
        alive[i] = 0;
        sign[i] = 0;
    }

    std::vector<Vertex> rank(m, 0);
    Vertex kept = 0;
    for (Vertex i = 0; i < m; ++i)
        if (alive[i]) rank[i] = kept++;
    std::vector<std::vector<Vertex>> rows(kept);
    VertexSet final_sign;
    for (Vertex i = 0; i < m; ++i) {
        if (!alive[i]) continue;
        std::vector<Vertex> row;
        row.reserve(adj[i].size());
        for (Vertex w : adj[i]) row.push_back(rank[w]);
        rows[rank[i]] = std::move(row);
        if (sign[i]) final_sign.insert(rank[i]);
        out.old_of_new.push_back(orig[i]);
    }
    out.state = {Graph(std::move(rows)), std::move(final_sign)};
    return out;
}

} // namespace sgc

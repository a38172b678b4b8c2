#include "sgc/pattern.hpp"

#include <algorithm>
#include <numbers>
#include <set>
#include <stdexcept>

namespace sgc {

namespace {
constexpr double kPi = std::numbers::pi;
}

Pattern compose(const Pattern& a, const Pattern& b, const std::map<Vertex, Vertex>& iface,
                std::vector<Vertex>* b_label_map) {
    const Vertex na = a.og.graph.vertex_count();
    const Vertex nb = b.og.graph.vertex_count();

    if (iface.size() != b.og.inputs.size() || iface.size() != a.og.outputs.size())
        throw std::invalid_argument("interface must pair all inputs of b with all outputs of a");
    std::set<Vertex> seen_out;
    for (const auto& [bi, ao] : iface) {
        if (!b.og.inputs.contains(bi))
            throw std::invalid_argument("interface key is not an input of b");
        if (!a.og.outputs.contains(ao))
            throw std::invalid_argument("interface value is not an output of a");
        if (!seen_out.insert(ao).second)
            throw std::invalid_argument("interface reuses an output of a");
    }

    std::vector<Vertex> map_b(nb, 0);
    Vertex next = na;
    for (Vertex v = 0; v < nb; ++v) {
        auto it = iface.find(v);
        map_b[v] = it != iface.end() ? it->second : next++;
    }

    std::vector<std::vector<Vertex>> rows(next);
    for (Vertex v = 0; v < na; ++v) rows[v] = a.og.graph.neighbors(v);
    Graph g(std::move(rows));
    for (const auto& [u, v] : b.og.graph.edges()) g.toggle_edge(map_b[u], map_b[v]);

    VertexSet outputs;
    for (Vertex v : b.og.outputs) outputs.insert(map_b[v]);

    Pattern out{{std::move(g), a.og.inputs, std::move(outputs)}, a.plan};
    // An X correction pending on a glued output rides through b's edges at
    // that vertex, leaving a Z on each far endpoint.
    std::map<Vertex, Vertex> rev;
    for (const auto& [bi, ao] : iface) rev[ao] = bi;
    for (PlanEntry& e : out.plan) {
        const std::size_t fixed = e.byproducts.size();
        for (std::size_t i = 0; i < fixed; ++i) {
            const ByproductRule r = e.byproducts[i];
            auto it = rev.find(r.target);
            if (!r.x || it == rev.end()) continue;
            for (Vertex w : b.og.graph.neighbors(it->second)) {
                const Vertex t = map_b[w];
                auto hit = std::find_if(e.byproducts.begin(), e.byproducts.end(),
                                        [t](const ByproductRule& q) { return q.target == t; });
                if (hit != e.byproducts.end()) hit->z = !hit->z;
                else e.byproducts.push_back({t, false, true});
            }
        }
    }
    for (const PlanEntry& e : b.plan) {
        PlanEntry m{map_b[e.vertex], e.angle, e.byproducts};
        for (ByproductRule& r : m.byproducts) r.target = map_b[r.target];
        out.plan.push_back(std::move(m));
    }
    if (b_label_map) *b_label_map = std::move(map_b);
    return out;
}

Pattern tensor_pattern(const Pattern& a, const Pattern& b) {
    const Vertex na = a.og.graph.vertex_count();
    const Vertex nb = b.og.graph.vertex_count();
    std::vector<std::vector<Vertex>> rows(na + nb);
    for (Vertex v = 0; v < na; ++v) rows[v] = a.og.graph.neighbors(v);
    for (Vertex v = 0; v < nb; ++v) {
        rows[na + v] = b.og.graph.neighbors(v);
        for (Vertex& w : rows[na + v]) w += na;
    }
    VertexSet inputs = a.og.inputs;
    VertexSet outputs = a.og.outputs;
    for (Vertex v : b.og.inputs) inputs.insert(na + v);
    for (Vertex v : b.og.outputs) outputs.insert(na + v);

    Pattern out{{Graph(std::move(rows)), std::move(inputs), std::move(outputs)}, a.plan};
    for (const PlanEntry& e : b.plan) {
        PlanEntry m{e.vertex + na, e.angle, e.byproducts};
        for (ByproductRule& r : m.byproducts) r.target += na;
        out.plan.push_back(std::move(m));
    }
    return out;
}

Pattern wire_pattern(Vertex n) {
    if (n < 2) throw std::invalid_argument("wire needs at least two vertices");
    Graph g = generate(GridKind::Path, 1, n);
    Pattern p{{std::move(g), VertexSet{{0}}, VertexSet{{n - 1}}}, {}};
    for (Vertex i = 0; i + 1 < n; ++i) {
        // X on the carrier, commuted through the pre-applied edge beyond it.
        std::vector<ByproductRule> rules{{i + 1, true, false}};
        if (i + 2 < n) rules.push_back({i + 2, false, true});
        p.plan.push_back({i, kPi / 2, std::move(rules)});
    }
    return p;
}

Pattern cz_pattern() {
    Graph g = Graph::from_edges(2, {{0, 1}});
    return {{std::move(g), VertexSet{{0, 1}}, VertexSet{{0, 1}}}, {}};
}

Pattern rotation_pattern(double alpha) {
    Graph g = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    Pattern p{{std::move(g), VertexSet{{0}}, VertexSet{{2}}}, {}};
    p.plan.push_back({0, kPi / 2, {{1, true, false}, {2, false, true}}});
    p.plan.push_back({1, alpha - kPi / 2, {{2, true, true}}});
    return p;
}

AdaptedAngle adapt_angle(const PauliFrame& frame, Vertex u, double alpha) {
    const auto [x, z] = frame.get(u);
    if (!x && !z) return {alpha, 0};
    if (!x && z) return {-alpha, 0};
    if (x && !z) return {kPi - alpha, 0};
    return {kPi + alpha, 0};
}

SimulationResult simulate_pattern(const Pattern& p, const StateVector& psi_in,
                                  OutcomeSource& outcomes) {
    const Vertex n = p.og.graph.vertex_count();
    std::set<Vertex> measured;
    for (const PlanEntry& e : p.plan) {
        if (e.vertex >= n) throw std::invalid_argument("plan vertex out of range");
        if (!measured.insert(e.vertex).second)
            throw std::invalid_argument("plan measures a vertex twice");
        if (p.og.outputs.contains(e.vertex))
            throw std::invalid_argument("plan measures an output");
    }
    if (measured.size() + p.og.outputs.size() != n)
        throw std::invalid_argument("plan must measure every non-output vertex");

    SimulationResult res{entangling_map(p.og, psi_in), {}, {}};
    for (const PlanEntry& e : p.plan) {
        const AdaptedAngle ad = adapt_angle(res.frame, e.vertex, e.angle);
        res.frame.clear(e.vertex);
        const int s = outcomes.next();
        MeasureResult mr = measure_angle(res.output, e.vertex, ad.angle, s);
        if (!mr.post)
            throw std::runtime_error("zero-probability branch; correction bookkeeping is wrong");
        res.output = std::move(*mr.post);
        res.transcript.push_back({e.vertex, ad.angle, s});
        if ((s ^ ad.outcome_flip) & 1) {
            for (const ByproductRule& r : e.byproducts) {
                if (r.x) res.frame.toggle_x(r.target);
                if (r.z) res.frame.toggle_z(r.target);
            }
        }
    }
    return res;
}

StateVector apply_frame(const StateVector& sv, const PauliFrame& frame) {
    StateVector out = sv;
    for (const auto& [v, xz] : frame.items()) {
        if (xz.second) out = apply_gate(out, Gate::z(v));
        if (xz.first) out = apply_gate(out, Gate::x(v));
    }
    return out;
}

} // namespace sgc

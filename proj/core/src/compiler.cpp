#include "sgc/compiler.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace sgc {

Circuit prep_circuit(const Graph& g) {
    Circuit c{g.vertex_count(), {}};
    for (const auto& [u, v] : g.edges()) c.gates.push_back(CircuitGate::cz(u, v));
    return c;
}

namespace {

// Swap of wires k, k+1 as three H-conjugated CZs. Every wire sees an even
// number of H gates, which keeps each wire path's edge count even.
void emit_adjacent_swap(std::vector<CircuitGate>& out, std::uint32_t k) {
    const std::uint32_t u = k, v = k + 1;
    out.push_back(CircuitGate::h(v));
    out.push_back(CircuitGate::cz(u, v));
    out.push_back(CircuitGate::h(v));
    out.push_back(CircuitGate::h(u));
    out.push_back(CircuitGate::cz(u, v));
    out.push_back(CircuitGate::h(u));
    out.push_back(CircuitGate::h(v));
    out.push_back(CircuitGate::cz(u, v));
    out.push_back(CircuitGate::h(v));
}

void route_pair(std::vector<CircuitGate>& out, std::uint32_t a, std::uint32_t b,
                CircuitGate::Kind kind) {
    for (std::uint32_t k = b - 1; k > a; --k) emit_adjacent_swap(out, k);
    if (kind == CircuitGate::Kind::CZ) out.push_back(CircuitGate::cz(a, a + 1));
    else emit_adjacent_swap(out, a);
    for (std::uint32_t k = a + 1; k < b; ++k) emit_adjacent_swap(out, k);
}

} // namespace

Circuit planarize(const Circuit& c) {
    Circuit out{c.wires, {}};
    for (const CircuitGate& g : c.gates) {
        switch (g.kind) {
            case CircuitGate::Kind::H:
                if (g.a >= c.wires) throw std::invalid_argument("wire out of range");
                out.gates.push_back(g);
                break;
            case CircuitGate::Kind::CZ:
            case CircuitGate::Kind::Swap: {
                const auto [a, b] = std::minmax(g.a, g.b);
                if (b >= c.wires || a == b)
                    throw std::invalid_argument("two-wire gate needs two distinct wires");
                route_pair(out.gates, a, b, g.kind);
                break;
            }
        }
    }
    return out;
}

namespace {

enum class Cell : unsigned char { Id, H, CzU, CzL, Cont };

void append_tile_coords(std::vector<std::pair<std::uint32_t, std::uint32_t>>& path,
                        TileKind kind, std::uint32_t wr, std::uint32_t c0) {
    auto put = [&](std::uint32_t dr, std::uint32_t dc) { path.push_back({wr - dr, c0 + dc}); };
    switch (kind) {
        case TileKind::Start:
        case TileKind::H:
            put(0, 0); put(0, 1); put(1, 2); put(1, 3); put(0, 3);
            break;
        case TileKind::Id:
            put(0, 0); put(0, 1); put(0, 2); put(0, 3);
            break;
        case TileKind::CzUpper:
            put(0, 0); put(0, 1); put(1, 2); put(1, 3); put(0, 3);
            put(0, 4);  // bridge vertex
            put(1, 5); put(1, 6); put(1, 7); put(0, 7);
            break;
        case TileKind::CzLower:
            put(0, 0); put(0, 1); put(0, 2); put(1, 3); put(2, 3);
            put(3, 4);  // bridge vertex
            put(3, 5); put(2, 5); put(1, 5); put(0, 5); put(0, 6); put(0, 7);
            break;
    }
}

} // namespace

GridLayout layout(const Circuit& planar) {
    const std::uint32_t n = planar.wires;
    if (n == 0) throw std::invalid_argument("layout needs at least one wire");

    // Gate layers after the start column. An H run over distinct wires
    // shares one column; a CZ takes two.
    std::vector<std::map<std::uint32_t, Cell>> plan;
    std::vector<char> h_batch;
    for (const CircuitGate& g : planar.gates) {
        if (g.kind == CircuitGate::Kind::H) {
            if (g.a >= n) throw std::invalid_argument("wire out of range");
            if (!plan.empty() && h_batch.back() && !plan.back().count(g.a)) {
                plan.back()[g.a] = Cell::H;
            } else {
                plan.push_back({{g.a, Cell::H}});
                h_batch.push_back(1);
            }
        } else if (g.kind == CircuitGate::Kind::CZ) {
            if (g.b != g.a + 1 || g.b >= n)
                throw std::invalid_argument("layout needs nearest-neighbour CZ gates");
            plan.push_back({{g.a, Cell::CzU}, {g.b, Cell::CzL}});
            h_batch.push_back(0);
            plan.push_back({{g.a, Cell::Cont}, {g.b, Cell::Cont}});
            h_batch.push_back(0);
        } else {
            throw std::invalid_argument("layout does not accept swap gates");
        }
    }

    GridLayout lay;
    lay.wires = n;
    lay.layers = 1 + static_cast<std::uint32_t>(plan.size());
    lay.rows = 4 * n;
    lay.cols = 4 * lay.layers;

    std::vector<Vertex> x_labels, z_labels;
    std::vector<char> on_path(static_cast<std::size_t>(lay.rows) * lay.cols, 0);
    auto label = [&](std::uint32_t r, std::uint32_t c) {
        return static_cast<Vertex>(r * lay.cols + c);
    };

    for (std::uint32_t w = 0; w < n; ++w) {
        const std::uint32_t wr = 4 * w + 3;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> path;
        append_tile_coords(path, TileKind::Start, wr, 0);
        lay.tiles.push_back({w, 0, TileKind::Start});
        std::uint32_t layer = 1;
        while (layer < lay.layers) {
            Cell cell = Cell::Id;
            const auto& col = plan[layer - 1];
            if (auto it = col.find(w); it != col.end()) cell = it->second;
            TileKind kind = TileKind::Id;
            std::uint32_t width = 1;
            switch (cell) {
                case Cell::Id: kind = TileKind::Id; break;
                case Cell::H: kind = TileKind::H; break;
                case Cell::CzU: kind = TileKind::CzUpper; width = 2; break;
                case Cell::CzL: kind = TileKind::CzLower; width = 2; break;
                case Cell::Cont:
                    throw std::logic_error("dangling tile continuation");
            }
            append_tile_coords(path, kind, wr, 4 * layer);
            lay.tiles.push_back({w, layer, kind});
            layer += width;
        }
        for (std::size_t i = 0; i < path.size(); ++i) {
            const Vertex lbl = label(path[i].first, path[i].second);
            on_path[lbl] = 1;
            if (i + 1 < path.size()) x_labels.push_back(lbl);
        }
        lay.outputs.push_back(label(path.back().first, path.back().second));
    }

    for (Vertex v = 0; v < static_cast<Vertex>(on_path.size()); ++v)
        if (!on_path[v]) z_labels.push_back(v);
    lay.x_set = VertexSet(std::move(x_labels));
    lay.z_set = VertexSet(std::move(z_labels));
    return lay;
}

GridCompilation compile_graph(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    GridCompilation comp;
    comp.grid = layout(planarize(prep_circuit(g)));
    for (std::uint32_t w = 0; w < n; ++w) comp.output_map.push_back(w);
    OutcomeSource zero = OutcomeSource::zero();
    VerifyResult chk = verify(comp, g, zero, true);
    if (!chk.ok) throw std::logic_error("compiled layout failed its self-check: " + chk.message);
    comp.schedule = std::move(chk.schedule);
    return comp;
}

VerifyResult verify(const GridCompilation& comp, const Graph& g, OutcomeSource& outcomes,
                    bool expect_empty_sign) {
    VerifyResult res;
    const GridLayout& L = comp.grid;
    const std::uint32_t n = g.vertex_count();
    if (L.wires != n || comp.output_map.size() != n) {
        res.message = "wire count does not match the target graph";
        return res;
    }
    if (L.rows != 4 * L.wires || L.cols != 4 * L.layers) {
        res.message = "grid dimensions are inconsistent";
        return res;
    }
    {
        std::vector<char> seen(n, 0);
        for (std::uint32_t v : comp.output_map) {
            if (v >= n || seen[v]) {
                res.message = "output map is not a permutation";
                return res;
            }
            seen[v] = 1;
        }
    }

    SignedGraphState start{generate(GridKind::Triangular, L.rows, L.cols), {}};
    ReplayResult rep;
    try {
        rep = replay_plan(start, L.x_set, L.z_set, outcomes);
    } catch (const std::exception& e) {
        res.message = e.what();
        return res;
    }
    res.schedule = std::move(rep.schedule);

    std::vector<Vertex> expect = L.outputs;
    std::sort(expect.begin(), expect.end());
    if (rep.old_of_new != expect) {
        for (std::size_t i = 0; i < std::max(rep.old_of_new.size(), expect.size()); ++i) {
            const bool have = i < rep.old_of_new.size();
            const bool want = i < expect.size();
            if (!have || !want || rep.old_of_new[i] != expect[i]) {
                res.message = "survivor set diverges at position " + std::to_string(i) +
                              ": replay kept " +
                              (have ? std::to_string(rep.old_of_new[i]) : std::string("nothing")) +
                              ", layout expects " +
                              (want ? std::to_string(expect[i]) : std::string("nothing"));
                return res;
            }
        }
    }

    // outputs[w] increases with w, so survivor rank r sits on wire r
    for (Vertex r = 0; r < n; ++r) {
        for (Vertex r2 = r + 1; r2 < n; ++r2) {
            const bool have = rep.state.graph.has_edge(r, r2);
            const bool want = g.has_edge(comp.output_map[r], comp.output_map[r2]);
            if (have != want) {
                res.message = "edge (" + std::to_string(comp.output_map[r]) + "," +
                              std::to_string(comp.output_map[r2]) + ") is " +
                              (have ? "present" : "absent") + " in the residual but " +
                              (want ? "present" : "absent") + " in the target";
                return res;
            }
        }
    }

    res.sign = rep.state.sign;
    if (expect_empty_sign && !res.sign.empty()) {
        res.message = "residual sign is not empty (first marked wire " +
                      std::to_string(*res.sign.begin()) + ")";
        return res;
    }
    res.ok = true;
    return res;
}

} // namespace sgc

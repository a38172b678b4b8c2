#pragma once

#include "sgc/graph.hpp"
#include "sgc/signed_state.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sgc {

// Wire circuit over {H, CZ, Swap}; wires are 0-based.
struct CircuitGate {
    enum class Kind { H, CZ, Swap };
    Kind kind;
    std::uint32_t a = 0;
    std::uint32_t b = 0;  // second wire for CZ and Swap

    static CircuitGate h(std::uint32_t w) { return {Kind::H, w, 0}; }
    static CircuitGate cz(std::uint32_t x, std::uint32_t y) { return {Kind::CZ, x, y}; }
    static CircuitGate swap(std::uint32_t x, std::uint32_t y) { return {Kind::Swap, x, y}; }

    bool operator==(const CircuitGate&) const = default;
};

struct Circuit {
    std::uint32_t wires = 0;
    std::vector<CircuitGate> gates;
};

// One CZ per edge of g, ascending; applied to |+>^n this prepares the
// (unsigned) graph state of g.
Circuit prep_circuit(const Graph& g);

// Rewrites every gate so two-wire gates act on neighbouring wires only:
// a distant pair is routed together with H/CZ swap conga lines and routed
// back, so wire positions are restored and the unitary is preserved.
// Output gates are H and nearest-neighbour CZ exclusively.
Circuit planarize(const Circuit& c);

enum class TileKind { Start, Id, H, CzUpper, CzLower };

// Tile occupying one wire band and one layer column; Cz tiles span the
// named layer and the next one.
struct TilePlacement {
    std::uint32_t wire = 0;
    std::uint32_t layer = 0;
    TileKind kind = TileKind::Id;

    bool operator==(const TilePlacement&) const = default;
};

// Triangular-grid measurement layout: rows = 4*wires, cols = 4*layers.
// Wire w follows a bold path inside rows 4w..4w+3 ending at its output
// vertex; x_set is the path minus outputs, z_set is everything else.
struct GridLayout {
    std::uint32_t wires = 0;
    std::uint32_t layers = 0;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<TilePlacement> tiles;  // sorted by (wire, layer)
    VertexSet x_set;
    VertexSet z_set;
    std::vector<Vertex> outputs;  // outputs[w] = grid label of wire w's output
};

// Requires a planarized circuit (H / nearest-neighbour CZ only).
GridLayout layout(const Circuit& planar);

struct GridCompilation {
    GridLayout grid;
    std::vector<std::uint32_t> output_map;   // output_map[w] = vertex of g on wire w
    std::vector<ScheduleStep> schedule;      // all-zero-outcome replay certificate
};

// Embeds g as the residual of measuring a triangular grid: builds the CZ
// prep circuit, planarizes, lays out tiles, and replays the all-zero
// schedule, checking the residual is exactly (g, empty sign).
GridCompilation compile_graph(const Graph& g);

struct VerifyResult {
    bool ok = false;
    std::string message;  // empty on success, else the first divergence
    VertexSet sign;       // residual sign (labels = wire index)
    std::vector<ScheduleStep> schedule;
};

// Replays the layout's measurement plan on the fresh grid with the given
// outcomes and checks the residual graph equals g under output_map. With
// expect_empty_sign the residual sign must also vanish.
VerifyResult verify(const GridCompilation& comp, const Graph& g, OutcomeSource& outcomes,
                    bool expect_empty_sign = false);

} // namespace sgc

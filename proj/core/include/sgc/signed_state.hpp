#pragma once

#include "sgc/graph.hpp"
#include "sgc/vertex_set.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace sgc {

// Z_sign |G>, a complete description of the state up to global phase.
struct SignedGraphState {
    Graph graph;
    VertexSet sign;

    bool operator==(const SignedGraphState&) const = default;
};

// i^d X_x Z_z. The phase exponent is carried for completeness; the rewrite
// rules discard global phase.
struct PauliWord {
    VertexSet x;
    VertexSet z;
    int phase_exponent = 0;
};

// Measurement outcome supply. Zero always answers 0, Random flips a fair
// coin per query from a seeded generator, Forced replays a fixed bit string
// and throws when exhausted.
class OutcomeSource {
public:
    static OutcomeSource zero() { return OutcomeSource(Mode::Zero, 0, {}); }
    static OutcomeSource random(std::uint64_t seed) { return OutcomeSource(Mode::Random, seed, {}); }
    static OutcomeSource forced(std::vector<int> bits) {
        return OutcomeSource(Mode::Forced, 0, std::move(bits));
    }

    int next() {
        switch (mode_) {
            case Mode::Zero: return 0;
            case Mode::Random: return static_cast<int>(rng_() & 1u);
            case Mode::Forced:
                if (pos_ >= bits_.size())
                    throw std::out_of_range("forced outcome string exhausted");
                return bits_[pos_++];
        }
        return 0;
    }

private:
    enum class Mode { Zero, Random, Forced };
    OutcomeSource(Mode m, std::uint64_t seed, std::vector<int> bits)
        : mode_(m), rng_(seed), bits_(std::move(bits)) {}
    Mode mode_;
    std::mt19937_64 rng_;
    std::vector<int> bits_;
    std::size_t pos_ = 0;
};

// Graph unchanged; sign becomes S (Δ) z (Δ) Odd(x). Phase discarded.
SignedGraphState apply_pauli(const SignedGraphState& st, const PauliWord& p);

// One local complementation step: graph becomes G*u; the sign picks up N(u)
// when u is marked.
SignedGraphState apply_lc_op(const SignedGraphState& st, Vertex u);

// H on both endpoints of the edge uv: graph becomes the pivot, the sign
// follows the four-case table keyed on {u, v} membership. Complements of
// neighborhoods are taken in the full vertex set.
SignedGraphState apply_hadamard_pair(const SignedGraphState& st, Vertex u, Vertex v);

// Z-measurement = vertex deletion; outcome 1 toggles the sign by N(u).
// Labels above u shift down by one.
SignedGraphState measure_z(const SignedGraphState& st, Vertex u, int s);

// X-measurement of both endpoints of the edge uv: pivot, delete both.
// outcome_u toggles the sign by N(v)-u, outcome_v by N(u)-v (each relative
// to the endpoint's own marker), and N(u)&N(v) toggles unconditionally.
SignedGraphState measure_x_pair(const SignedGraphState& st, Vertex u, Vertex v,
                                int outcome_u, int outcome_v);

// X-measurement of an isolated vertex. The outcome is forced: 1 exactly
// when u is marked. A non-isolated single X-measurement leaves the signed
// graph state formalism and is rejected.
struct IsolatedXResult {
    int outcome;
    SignedGraphState state;
};
IsolatedXResult measure_x_isolated(const SignedGraphState& st, Vertex u);

enum class PairStrategy { LowestEdge, HighestEdge };

struct ScheduleStep {
    enum class Op { Z, XPair, XIso };
    Op op;
    std::vector<Vertex> vertices;  // labels of the starting graph
    std::vector<int> outcomes;
};

struct ReplayResult {
    SignedGraphState state;          // compacted labels
    std::vector<Vertex> old_of_new;  // surviving labels of the starting graph
    std::vector<ScheduleStep> schedule;
};

// Measures z_set in ascending label order, then repeatedly X-measures an
// edge inside x_set (chosen by strategy over starting-graph labels), then
// X-measures the remaining isolated x vertices. A leftover non-isolated X
// vertex means the plan has no signed-graph-state result and throws.
ReplayResult replay_plan(const SignedGraphState& st, const VertexSet& x_set,
                         const VertexSet& z_set, OutcomeSource& outcomes,
                         PairStrategy strategy = PairStrategy::LowestEdge);

} // namespace sgc

#pragma once

#include "sgc/graph.hpp"
#include "sgc/open_graph.hpp"
#include "sgc/vertex_set.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace sgc {

using Complex = std::complex<double>;

// Tolerances: equivalence assertions vs internal self-consistency.
inline constexpr double kEqTol = 1e-9;
inline constexpr double kSelfTol = 1e-12;

// Dense state vector over labeled qubits. The qubit at position 0 of
// `labels` owns the most significant bit of the amplitude index.
struct StateVector {
    std::vector<Vertex> labels;
    std::vector<Complex> amp;

    std::size_t qubit_count() const { return labels.size(); }
    std::size_t position_of(Vertex label) const;
};

enum class GateKind { H, X, Z, SqrtX, SqrtXDag, SqrtZ, SqrtZDag, CZ, P, Swap };

// One- or two-qubit gate by label. P carries the reflection angle of
// cos(angle/2)X + sin(angle/2)Z.
struct Gate {
    GateKind kind;
    Vertex a;
    Vertex b = 0;
    double angle = 0.0;

    static Gate h(Vertex u) { return {GateKind::H, u}; }
    static Gate x(Vertex u) { return {GateKind::X, u}; }
    static Gate z(Vertex u) { return {GateKind::Z, u}; }
    static Gate sqrt_x(Vertex u) { return {GateKind::SqrtX, u}; }
    static Gate sqrt_x_dag(Vertex u) { return {GateKind::SqrtXDag, u}; }
    static Gate sqrt_z(Vertex u) { return {GateKind::SqrtZ, u}; }
    static Gate sqrt_z_dag(Vertex u) { return {GateKind::SqrtZDag, u}; }
    static Gate cz(Vertex u, Vertex v) { return {GateKind::CZ, u, v}; }
    static Gate p(Vertex u, double alpha) { return {GateKind::P, u, 0, alpha}; }
    static Gate swap(Vertex u, Vertex v) { return {GateKind::Swap, u, v}; }
};

// 2x2 matrix of a one-qubit kind, row-major.
std::array<Complex, 4> gate_matrix(GateKind kind, double angle = 0.0);

StateVector make_state(std::vector<Vertex> labels, std::vector<Complex> amp);
// Computational basis state; bit for position p is (bits >> (k-1-p)) & 1.
StateVector basis_state(std::vector<Vertex> labels, std::uint64_t bits);
StateVector plus_state(std::vector<Vertex> labels);

// Z_sign CZ_E |+>^n on labels 0..n-1 with the positive-amplitude phase
// convention <0...0|G> = 2^{-n/2}.
StateVector build_graph_state(const Graph& g, const VertexSet& sign = {});

StateVector apply_gate(const StateVector& sv, const Gate& gate);

double norm(const StateVector& sv);
StateVector normalized(const StateVector& sv);

// <a|b>; requires identical label order.
Complex overlap(const StateVector& a, const StateVector& b);
// |<a|b>| > 1 - 1e-9 for unit vectors.
bool equal_up_to_phase(const StateVector& a, const StateVector& b);

// Tensor product; label lists concatenate.
StateVector tensor(const StateVector& a, const StateVector& b);

// Reorders the label list (same set) by permuting amplitude bits.
StateVector permute_labels(const StateVector& sv, const std::vector<Vertex>& new_labels);

// Measurement in the basis {cos(a/2)|0>+sin(a/2)|1>, sin(a/2)|0>-cos(a/2)|1>}.
// The measured qubit is removed from the post-state. A branch below the
// self-consistency tolerance reports no post-state.
struct MeasureResult {
    double probability;
    std::optional<StateVector> post;
};
MeasureResult measure_angle(const StateVector& sv, Vertex label, double alpha, int s);

// Unnormalized projection <s_label| sv, qubit removed. Norm^2 is the
// branch probability.
StateVector project_angle(const StateVector& sv, Vertex label, double alpha, int s);

// Adjoins every non-input vertex in |+>, applies CZ per edge of the open
// graph. Input state must carry exactly the input labels (ascending).
StateVector entangling_map(const OpenGraph& og, const StateVector& psi_in);

} // namespace sgc

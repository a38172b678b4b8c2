#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "sgc/open_graph.hpp"
#include "sgc/oracle.hpp"

#include <random>

using namespace sgc;
using namespace sgc::testing;

namespace {

StateVector random_vec(const std::vector<Vertex>& labels, std::mt19937_64& rng) {
    std::vector<Complex> amp(std::size_t{1} << labels.size());
    for (Complex& a : amp)
        a = {static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
             static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5};
    StateVector sv = make_state(labels, std::move(amp));
    return normalized(sv);
}

double norm2_of(const StateVector& sv) { return norm(sv) * norm(sv); }

} // namespace

TEST_CASE("basis and plus states") {
    StateVector z = basis_state({0, 1}, 0b10);
    CHECK(z.amp[2] == Complex{1, 0});
    CHECK(std::abs(z.amp[0]) + std::abs(z.amp[1]) + std::abs(z.amp[3]) == 0.0);

    StateVector p = plus_state({0, 1, 2});
    for (const Complex& a : p.amp)
        CHECK(std::abs(a - Complex{1.0 / std::sqrt(8.0), 0}) < 1e-12);
}

TEST_CASE("qubit labels index amplitudes with the first label as top bit") {
    // flip only label 0 of {0,1}: amplitude moves from 00 to 10
    StateVector sv = apply_gate(basis_state({0, 1}, 0), Gate::x(0));
    CHECK(std::abs(sv.amp[2] - Complex{1, 0}) < 1e-12);
    StateVector sw = apply_gate(basis_state({0, 1}, 0), Gate::x(1));
    CHECK(std::abs(sw.amp[1] - Complex{1, 0}) < 1e-12);
}

TEST_CASE("all gate matrices are unitary") {
    using K = GateKind;
    for (K k : {K::H, K::X, K::Z, K::SqrtX, K::SqrtXDag, K::SqrtZ, K::SqrtZDag}) {
        auto m = gate_matrix(k); // row major: m[0] m[1] / m[2] m[3]
        CHECK(std::abs(std::norm(m[0]) + std::norm(m[1]) - 1.0) < 1e-12);
        CHECK(std::abs(std::norm(m[2]) + std::norm(m[3]) - 1.0) < 1e-12);
        CHECK(std::abs(std::conj(m[0]) * m[2] + std::conj(m[1]) * m[3]) < 1e-12);
    }
}

TEST_CASE("square roots compose to their Pauli") {
    std::mt19937_64 rng(3);
    StateVector psi = random_vec({0}, rng);
    StateVector a = apply_gate(apply_gate(psi, Gate::sqrt_x(0)), Gate::sqrt_x(0));
    CHECK(same_ray_same_norm(a, apply_gate(psi, Gate::x(0))));
    StateVector b = apply_gate(apply_gate(psi, Gate::sqrt_z(0)), Gate::sqrt_z(0));
    CHECK(same_ray_same_norm(b, apply_gate(psi, Gate::z(0))));
    // dagger pairs cancel
    StateVector c = apply_gate(apply_gate(psi, Gate::sqrt_x(0)), Gate::sqrt_x_dag(0));
    CHECK(phase_distance(c, psi) < 1e-12);
    StateVector d = apply_gate(apply_gate(psi, Gate::sqrt_z(0)), Gate::sqrt_z_dag(0));
    CHECK(phase_distance(d, psi) < 1e-12);
}

TEST_CASE("cz is symmetric and order independent") {
    std::mt19937_64 rng(4);
    StateVector psi = random_vec({0, 1, 2}, rng);
    CHECK(phase_distance(apply_gate(psi, Gate::cz(0, 2)), apply_gate(psi, Gate::cz(2, 0))) <
          1e-12);
    StateVector a = apply_gate(apply_gate(psi, Gate::cz(0, 1)), Gate::cz(1, 2));
    StateVector b = apply_gate(apply_gate(psi, Gate::cz(1, 2)), Gate::cz(0, 1));
    CHECK(phase_distance(a, b) < 1e-12);
}

TEST_CASE("swap exchanges amplitudes") {
    StateVector sv = apply_gate(basis_state({0, 1}, 0b10), Gate::swap(0, 1));
    CHECK(std::abs(sv.amp[1] - Complex{1, 0}) < 1e-12);
}

TEST_CASE("graph state amplitudes count edges inside the support") {
    // two vertices, one edge: signs + + + -
    StateVector p2 = build_graph_state(path_graph(2));
    std::vector<double> want2{0.5, 0.5, 0.5, -0.5};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(p2.amp[i] - Complex{want2[i], 0}) < 1e-12);

    // path on three vertices
    StateVector p3 = build_graph_state(path_graph(3));
    const double a = 1.0 / std::sqrt(8.0);
    std::vector<double> want3{a, a, a, -a, a, a, -a, a};
    for (int i = 0; i < 8; ++i) CHECK(std::abs(p3.amp[i] - Complex{want3[i], 0}) < 1e-12);
}

TEST_CASE("sign marks flip amplitudes on their bit") {
    StateVector sv = build_graph_state(path_graph(2), VertexSet{0});
    std::vector<double> want{0.5, 0.5, -0.5, 0.5};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(sv.amp[i] - Complex{want[i], 0}) < 1e-12);
}

TEST_CASE("graph state equals CZ circuit on plus states") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(5, 0.5, rng);
        StateVector direct = build_graph_state(g);
        StateVector circuit = plus_state({0, 1, 2, 3, 4});
        for (const auto& [u, v] : g.edges()) circuit = apply_gate(circuit, Gate::cz(u, v));
        CHECK(phase_distance(direct, circuit) < 1e-12);
    }
}

TEST_CASE("angle measurement interpolates Z to X") {
    // outcome 0 at angle 0 projects onto |0>
    StateVector zero = basis_state({0}, 0);
    MeasureResult mz = measure_angle(zero, 0, 0.0, 0);
    CHECK(mz.probability == doctest::Approx(1.0));
    MeasureResult mz1 = measure_angle(zero, 0, 0.0, 1);
    CHECK(mz1.probability == doctest::Approx(0.0));
    CHECK_FALSE(mz1.post.has_value());

    // outcome 0 at pi/2 projects onto |+>
    StateVector plus = plus_state({0});
    MeasureResult mx = measure_angle(plus, 0, kPi / 2, 0);
    CHECK(mx.probability == doctest::Approx(1.0));

    // on |+> the outcome-0 weight is (1+sin a)/2
    for (double a : {0.0, 0.3, kPi / 3, 2.9}) {
        MeasureResult m = measure_angle(plus, 0, a, 0);
        CHECK(m.probability == doctest::Approx((1 + std::sin(a)) / 2));
    }
}

TEST_CASE("projection rows are cos sin and sin minus cos") {
    const double a = 0.7;
    StateVector sv = basis_state({0}, 0);
    StateVector p0 = project_angle(sv, 0, a, 0);
    StateVector p1 = project_angle(sv, 0, a, 1);
    CHECK(std::abs(p0.amp[0] - Complex{std::cos(a / 2), 0}) < 1e-12);
    CHECK(std::abs(p1.amp[0] - Complex{std::sin(a / 2), 0}) < 1e-12);
    StateVector one = basis_state({0}, 1);
    CHECK(std::abs(project_angle(one, 0, a, 0).amp[0] - Complex{std::sin(a / 2), 0}) < 1e-12);
    CHECK(std::abs(project_angle(one, 0, a, 1).amp[0] - Complex{-std::cos(a / 2), 0}) < 1e-12);
}

TEST_CASE("projection removes the measured label and keeps the rest") {
    std::mt19937_64 rng(8);
    StateVector psi = random_vec({0, 1, 2}, rng);
    StateVector p = project_angle(psi, 1, 0.3, 0);
    CHECK(p.labels == std::vector<Vertex>{0, 2});
    // both branches together preserve the norm
    StateVector q = project_angle(psi, 1, 0.3, 1);
    CHECK(norm2_of(p) + norm2_of(q) == doctest::Approx(norm2_of(psi)));
}

TEST_CASE("overlap demands matching labels") {
    CHECK_THROWS_AS(overlap(plus_state({0, 1}), plus_state({1, 0})),
                    std::invalid_argument);
}

TEST_CASE("tensor and label permutation round trip") {
    std::mt19937_64 rng(9);
    StateVector a = random_vec({0}, rng);
    StateVector b = random_vec({1, 2}, rng);
    StateVector ab = tensor(a, b);
    CHECK(ab.labels == std::vector<Vertex>{0, 1, 2});

    StateVector moved = permute_labels(ab, {2, 0, 1});
    CHECK(moved.labels == std::vector<Vertex>{2, 0, 1});
    StateVector back = permute_labels(moved, {0, 1, 2});
    CHECK(phase_distance(back, ab) < 1e-12);
}

TEST_CASE("entangling map grafts the open graph onto the input") {
    // single input feeding one fresh vertex over one edge
    OpenGraph og{path_graph(2), VertexSet{0}, VertexSet{1}};
    StateVector in_plus = plus_state({0});
    StateVector got = entangling_map(og, in_plus);
    CHECK(phase_distance(got, build_graph_state(path_graph(2))) < 1e-12);

    // |1> input picks up the phase on the joint support
    StateVector in_one = basis_state({0}, 1);
    StateVector want = apply_gate(tensor(in_one, plus_state({1})), Gate::cz(0, 1));
    CHECK(phase_distance(entangling_map(og, in_one), want) < 1e-12);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "sgc/pattern.hpp"

#include <cmath>
#include <random>

using namespace sgc;
using namespace sgc::testing;

namespace {

StateVector random_qubit(Vertex label, std::mt19937_64& rng) {
    auto coin = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
    std::vector<Complex> amp{{coin(), coin()}, {coin(), coin()}};
    return normalized(make_state({label}, std::move(amp)));
}

// cos(a/2) X + sin(a/2) Z
StateVector half_angle_reflection(const StateVector& psi, double a) {
    const double c = std::cos(a / 2), s = std::sin(a / 2);
    StateVector out = psi;
    out.amp[0] = s * psi.amp[0] + c * psi.amp[1];
    out.amp[1] = c * psi.amp[0] - s * psi.amp[1];
    return out;
}

StateVector renamed(StateVector sv, std::vector<Vertex> labels) {
    sv.labels = std::move(labels);
    return sv;
}

} // namespace

TEST_CASE("pauli frame toggles and prunes") {
    PauliFrame f;
    CHECK(f.get(3) == std::pair<bool, bool>{false, false});
    f.toggle_x(3);
    CHECK(f.get(3) == std::pair<bool, bool>{true, false});
    f.toggle_z(3);
    CHECK(f.get(3) == std::pair<bool, bool>{true, true});
    f.toggle_x(3);
    f.toggle_z(3);
    CHECK(f.items().empty());
    f.toggle_z(1);
    f.clear(1);
    CHECK(f.items().empty());
}

TEST_CASE("angle adaptation against the pending frame") {
    const double a = 0.6;
    PauliFrame f;
    AdaptedAngle none = adapt_angle(f, 0, a);
    CHECK(none.angle == doctest::Approx(a));
    CHECK(none.outcome_flip == 0);

    f.toggle_z(0);
    AdaptedAngle z = adapt_angle(f, 0, a);
    CHECK(z.angle == doctest::Approx(-a));
    CHECK(z.outcome_flip == 0);

    f.toggle_z(0);
    f.toggle_x(0);
    AdaptedAngle x = adapt_angle(f, 0, a);
    CHECK(x.angle == doctest::Approx(kPi - a));
    CHECK(x.outcome_flip == 0);

    f.toggle_z(0);
    AdaptedAngle xz = adapt_angle(f, 0, a);
    CHECK(xz.angle == doctest::Approx(kPi + a));
    CHECK(xz.outcome_flip == 0);
}

TEST_CASE("wire pattern carries the state across, one reflection per edge") {
    std::mt19937_64 rng(21);
    for (Vertex n : {Vertex{2}, Vertex{3}, Vertex{4}, Vertex{5}}) {
        const Pattern p = wire_pattern(n);
        CHECK(p.og.graph == path_graph(n));
        CHECK(p.og.inputs == VertexSet{0});
        CHECK(p.og.outputs == VertexSet{n - 1});

        StateVector in = random_qubit(0, rng);
        StateVector want = in;
        for (Vertex k = 0; k + 1 < n; ++k) want = apply_gate(want, Gate::h(0));
        want = renamed(want, {static_cast<Vertex>(n - 1)});

        // every outcome branch agrees once the frame is applied
        const int branches = 1 << (n - 1);
        for (int mask = 0; mask < branches; ++mask) {
            std::vector<int> bits;
            for (Vertex k = 0; k + 1 < n; ++k) bits.push_back(mask >> k & 1);
            OutcomeSource src = OutcomeSource::forced(bits);
            SimulationResult res = simulate_pattern(p, in, src);
            CHECK(phase_distance(apply_frame(res.output, res.frame), want) < 1e-9);
        }
    }
}

TEST_CASE("rotation pattern implements the half angle reflection") {
    std::mt19937_64 rng(22);
    for (double a : {0.0, kPi / 6, kPi / 4, kPi / 2, 0.7, 2.3}) {
        const Pattern p = rotation_pattern(a);
        StateVector in = random_qubit(0, rng);
        StateVector want = renamed(half_angle_reflection(in, a), {2});
        for (int mask = 0; mask < 4; ++mask) {
            OutcomeSource src = OutcomeSource::forced({mask & 1, mask >> 1});
            SimulationResult res = simulate_pattern(p, in, src);
            CHECK(phase_distance(apply_frame(res.output, res.frame), want) < 1e-9);
        }
    }
}

TEST_CASE("cz pattern applies the controlled phase") {
    std::mt19937_64 rng(23);
    const Pattern p = cz_pattern();
    StateVector in = tensor(random_qubit(0, rng), random_qubit(1, rng));
    OutcomeSource src = OutcomeSource::zero();
    SimulationResult res = simulate_pattern(p, in, src);
    CHECK(res.transcript.empty());
    CHECK(res.frame.items().empty());
    CHECK(phase_distance(res.output, apply_gate(in, Gate::cz(0, 1))) < 1e-12);
}

TEST_CASE("composing two wires gives the longer wire") {
    const Pattern w2 = wire_pattern(2);
    const Pattern got = compose(w2, w2, {{0, 1}});
    const Pattern want = wire_pattern(3);
    CHECK(got.og.graph == want.og.graph);
    CHECK(got.og.inputs == want.og.inputs);
    CHECK(got.og.outputs == want.og.outputs);
    REQUIRE(got.plan.size() == want.plan.size());
    for (std::size_t i = 0; i < got.plan.size(); ++i) {
        CHECK(got.plan[i].vertex == want.plan[i].vertex);
        CHECK(got.plan[i].angle == doctest::Approx(want.plan[i].angle));
        CHECK(got.plan[i].byproducts == want.plan[i].byproducts);
    }
}

TEST_CASE("compose cancels coinciding edges") {
    const Pattern two = compose(cz_pattern(), cz_pattern(), {{0, 0}, {1, 1}});
    CHECK(two.og.graph.edge_count() == 0);
    CHECK(two.og.inputs == VertexSet{0, 1});
    CHECK(two.og.outputs == VertexSet{0, 1});

    std::mt19937_64 rng(24);
    StateVector in = tensor(random_qubit(0, rng), random_qubit(1, rng));
    OutcomeSource src = OutcomeSource::zero();
    SimulationResult res = simulate_pattern(two, in, src);
    CHECK(phase_distance(res.output, in) < 1e-12);
}

TEST_CASE("compose reports combined labels of the appended pattern") {
    std::vector<Vertex> map;
    const Pattern got = compose(wire_pattern(2), wire_pattern(3), {{0, 1}}, &map);
    // b vertices 0,1,2 land on 1 (identified) then fresh labels 2,3
    CHECK(map == std::vector<Vertex>{1, 2, 3});
    CHECK(got.og.graph == path_graph(4));
    CHECK(got.og.outputs == VertexSet{3});
}

TEST_CASE("compose validates the interface") {
    const Pattern w = wire_pattern(2);
    CHECK_THROWS_AS(compose(w, w, {}), std::invalid_argument);
    CHECK_THROWS_AS(compose(w, w, {{0, 0}}), std::invalid_argument); // 0 not an output of a
    const Pattern c = cz_pattern();
    CHECK_THROWS_AS(compose(c, c, {{0, 0}, {1, 0}}), std::invalid_argument); // reused output
}

TEST_CASE("tensor pattern shifts the second block") {
    const Pattern t = tensor_pattern(wire_pattern(2), wire_pattern(2));
    CHECK(t.og.graph == Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(t.og.inputs == VertexSet{0, 2});
    CHECK(t.og.outputs == VertexSet{1, 3});
    REQUIRE(t.plan.size() == 2);
    CHECK(t.plan[1].vertex == 2);
    CHECK(t.plan[1].byproducts[0].target == 3);
}

TEST_CASE("simulate validates the plan") {
    Pattern p = wire_pattern(3);
    OutcomeSource src = OutcomeSource::zero();
    StateVector in = plus_state({0});

    Pattern missing = p;
    missing.plan.pop_back();
    CHECK_THROWS_AS(simulate_pattern(missing, in, src), std::invalid_argument);

    Pattern extra = p;
    extra.plan.push_back({2, 0.0, {}}); // 2 is an output
    CHECK_THROWS_AS(simulate_pattern(extra, in, src), std::invalid_argument);
}

TEST_CASE("simulate records physical outcomes and adapted angles") {
    const Pattern p = wire_pattern(3);
    StateVector in = plus_state({0});
    OutcomeSource src = OutcomeSource::forced({1, 0});
    SimulationResult res = simulate_pattern(p, in, src);
    REQUIRE(res.transcript.size() == 2);
    CHECK(res.transcript[0].vertex == 0);
    CHECK(res.transcript[0].outcome == 1);
    // a pending X at angle pi/2 reflects onto the same angle
    CHECK(res.transcript[1].adapted_angle == doctest::Approx(kPi / 2));
}

TEST_CASE("apply_frame equals explicit gates") {
    std::mt19937_64 rng(25);
    StateVector psi = tensor(random_qubit(0, rng), random_qubit(1, rng));
    PauliFrame f;
    f.toggle_x(0);
    f.toggle_z(1);
    f.toggle_x(1);
    StateVector got = apply_frame(psi, f);
    StateVector want = apply_gate(psi, Gate::x(0));
    want = apply_gate(want, Gate::z(1));
    want = apply_gate(want, Gate::x(1));
    CHECK(phase_distance(got, want) < 1e-12);
}

#include "sgc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgc {

namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t checked_pow2(std::size_t k) {
    if (k > 26) throw std::invalid_argument("state too large");
    return std::size_t{1} << k;
}

} // namespace

std::size_t StateVector::position_of(Vertex label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw std::out_of_range("label not present: " + std::to_string(label));
    return static_cast<std::size_t>(it - labels.begin());
}

std::array<Complex, 4> gate_matrix(GateKind kind, double angle) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex quarter = std::exp(kI * (std::numbers::pi / 4.0));
    auto sqrt_of = [&](std::array<Complex, 4> p) {
        // sqrt(P) = e^{i pi/4}/sqrt(2) (I - iP) for a Hermitian unitary P.
        std::array<Complex, 4> m;
        std::array<Complex, 4> eye{1, 0, 0, 1};
        for (int i = 0; i < 4; ++i) m[i] = quarter * s * (eye[i] - kI * p[i]);
        return m;
    };
    auto dagger = [](std::array<Complex, 4> m) {
        return std::array<Complex, 4>{std::conj(m[0]), std::conj(m[2]),
                                      std::conj(m[1]), std::conj(m[3])};
    };
    const std::array<Complex, 4> mx{0, 1, 1, 0};
    const std::array<Complex, 4> mz{1, 0, 0, -1};
    switch (kind) {
        case GateKind::H: return {s, s, s, -s};
        case GateKind::X: return mx;
        case GateKind::Z: return mz;
        case GateKind::SqrtX: return sqrt_of(mx);
        case GateKind::SqrtXDag: return dagger(sqrt_of(mx));
        case GateKind::SqrtZ: return sqrt_of(mz);
        case GateKind::SqrtZDag: return dagger(sqrt_of(mz));
        case GateKind::P: {
            double c = std::cos(angle / 2.0), d = std::sin(angle / 2.0);
            return {d, c, c, -d};
        }
        default:
            throw std::invalid_argument("not a one-qubit gate");
    }
}

StateVector make_state(std::vector<Vertex> labels, std::vector<Complex> amp) {
    if (amp.size() != checked_pow2(labels.size()))
        throw std::invalid_argument("amplitude count mismatch");
    return {std::move(labels), std::move(amp)};
}

StateVector basis_state(std::vector<Vertex> labels, std::uint64_t bits) {
    std::size_t dim = checked_pow2(labels.size());
    if (labels.size() < 64 && bits >= dim)
        throw std::invalid_argument("basis index out of range");
    std::vector<Complex> amp(dim, Complex{0, 0});
    amp[bits] = 1.0;
    return {std::move(labels), std::move(amp)};
}

StateVector plus_state(std::vector<Vertex> labels) {
    std::size_t dim = checked_pow2(labels.size());
    double a = 1.0 / std::sqrt(static_cast<double>(dim));
    return {std::move(labels), std::vector<Complex>(dim, Complex{a, 0})};
}

StateVector build_graph_state(const Graph& g, const VertexSet& sign) {
    std::uint32_t n = g.vertex_count();
    for (Vertex u : sign)
        if (!g.has_vertex(u)) throw std::out_of_range("sign vertex outside graph");
    std::vector<Vertex> labels(n);
    for (Vertex u = 0; u < n; ++u) labels[u] = u;
    auto edges = g.edges();
    std::size_t dim = checked_pow2(n);
    std::vector<Complex> amp(dim);
    double a = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t x = 0; x < dim; ++x) {
        auto bit = [&](Vertex u) { return (x >> (n - 1 - u)) & 1u; };
        int par = 0;
        for (const auto& [u, v] : edges) par ^= static_cast<int>(bit(u) & bit(v));
        for (Vertex u : sign) par ^= static_cast<int>(bit(u));
        amp[x] = par ? -a : a;
    }
    return {std::move(labels), std::move(amp)};
}

namespace {

void apply_1q(StateVector& sv, std::size_t pos, const std::array<Complex, 4>& m) {
    std::size_t k = sv.qubit_count();
    std::size_t stride = std::size_t{1} << (k - 1 - pos);
    for (std::size_t base = 0; base < sv.amp.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            std::size_t i0 = base + off;
            std::size_t i1 = i0 + stride;
            Complex a0 = sv.amp[i0], a1 = sv.amp[i1];
            sv.amp[i0] = m[0] * a0 + m[1] * a1;
            sv.amp[i1] = m[2] * a0 + m[3] * a1;
        }
    }
}

} // namespace

StateVector apply_gate(const StateVector& sv, const Gate& gate) {
    StateVector out = sv;
    std::size_t k = out.qubit_count();
    switch (gate.kind) {
        case GateKind::CZ: {
            std::size_t pa = out.position_of(gate.a);
            std::size_t pb = out.position_of(gate.b);
            if (pa == pb) throw std::invalid_argument("CZ needs two distinct qubits");
            std::size_t ma = std::size_t{1} << (k - 1 - pa);
            std::size_t mb = std::size_t{1} << (k - 1 - pb);
            for (std::size_t x = 0; x < out.amp.size(); ++x)
                if ((x & ma) && (x & mb)) out.amp[x] = -out.amp[x];
            return out;
        }
        case GateKind::Swap: {
            std::size_t pa = out.position_of(gate.a);
            std::size_t pb = out.position_of(gate.b);
            if (pa == pb) throw std::invalid_argument("swap needs two distinct qubits");
            std::size_t ma = std::size_t{1} << (k - 1 - pa);
            std::size_t mb = std::size_t{1} << (k - 1 - pb);
            for (std::size_t x = 0; x < out.amp.size(); ++x)
                if ((x & ma) && !(x & mb))
                    std::swap(out.amp[x], out.amp[(x & ~ma) | mb]);
            return out;
        }
        default: {
            apply_1q(out, out.position_of(gate.a), gate_matrix(gate.kind, gate.angle));
            return out;
        }
    }
}

double norm(const StateVector& sv) {
    double s = 0;
    for (const Complex& a : sv.amp) s += std::norm(a);
    return std::sqrt(s);
}

StateVector normalized(const StateVector& sv) {
    double n = norm(sv);
    if (n < kSelfTol) throw std::invalid_argument("cannot normalize a null vector");
    StateVector out = sv;
    for (Complex& a : out.amp) a /= n;
    return out;
}

Complex overlap(const StateVector& a, const StateVector& b) {
    if (a.labels != b.labels)
        throw std::invalid_argument("overlap requires identical label order");
    Complex s{0, 0};
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b) {
    return std::abs(overlap(a, b)) > 1.0 - kEqTol;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Vertex> labels = a.labels;
    labels.insert(labels.end(), b.labels.begin(), b.labels.end());
    std::size_t dim = checked_pow2(labels.size());
    std::vector<Complex> amp(dim);
    std::size_t db = b.amp.size();
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        for (std::size_t j = 0; j < db; ++j) amp[i * db + j] = a.amp[i] * b.amp[j];
    return {std::move(labels), std::move(amp)};
}

StateVector permute_labels(const StateVector& sv, const std::vector<Vertex>& new_labels) {
    if (new_labels.size() != sv.labels.size())
        throw std::invalid_argument("label count mismatch");
    std::size_t k = sv.qubit_count();
    std::vector<std::size_t> old_pos(k);
    for (std::size_t p = 0; p < k; ++p) old_pos[p] = sv.position_of(new_labels[p]);
    {
        auto check = old_pos;
        std::sort(check.begin(), check.end());
        for (std::size_t p = 0; p < k; ++p)
            if (check[p] != p) throw std::invalid_argument("label multiset mismatch");
    }
    std::vector<Complex> amp(sv.amp.size());
    for (std::size_t x = 0; x < sv.amp.size(); ++x) {
        std::size_t y = 0;
        for (std::size_t p = 0; p < k; ++p) {
            std::size_t bit = (x >> (k - 1 - old_pos[p])) & 1u;
            y |= bit << (k - 1 - p);
        }
        amp[y] = sv.amp[x];
    }
    return {new_labels, std::move(amp)};
}

StateVector project_angle(const StateVector& sv, Vertex label, double alpha, int s) {
    if (s != 0 && s != 1) throw std::invalid_argument("outcome must be 0 or 1");
    std::size_t pos = sv.position_of(label);
    std::size_t k = sv.qubit_count();
    double c = std::cos(alpha / 2.0), d = std::sin(alpha / 2.0);
    // Rows of the basis change; outcome s projects onto row s.
    Complex b0 = (s == 0) ? Complex{c, 0} : Complex{d, 0};
    Complex b1 = (s == 0) ? Complex{d, 0} : Complex{-c, 0};
    std::vector<Vertex> labels;
    for (std::size_t p = 0; p < k; ++p)
        if (p != pos) labels.push_back(sv.labels[p]);
    std::size_t stride = std::size_t{1} << (k - 1 - pos);
    std::vector<Complex> amp(sv.amp.size() / 2);
    std::size_t idx = 0;
    for (std::size_t base = 0; base < sv.amp.size(); base += 2 * stride)
        for (std::size_t off = 0; off < stride; ++off)
            amp[idx++] = std::conj(b0) * sv.amp[base + off] +
                         std::conj(b1) * sv.amp[base + off + stride];
    return {std::move(labels), std::move(amp)};
}

MeasureResult measure_angle(const StateVector& sv, Vertex label, double alpha, int s) {
    StateVector proj = project_angle(sv, label, alpha, s);
    double n = norm(proj);
    double prob = n * n;
    if (prob < kSelfTol) return {prob, std::nullopt};
    for (Complex& a : proj.amp) a /= n;
    return {prob, std::move(proj)};
}

StateVector entangling_map(const OpenGraph& og, const StateVector& psi_in) {
    std::vector<Vertex> want(og.inputs.begin(), og.inputs.end());
    if (psi_in.labels != want)
        throw std::invalid_argument("input state must carry the input labels in ascending order");
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < og.graph.vertex_count(); ++u)
        if (!og.inputs.contains(u)) rest.push_back(u);
    StateVector sv = rest.empty() ? psi_in : tensor(psi_in, plus_state(rest));
    std::vector<Vertex> ascending(og.graph.vertex_count());
    for (Vertex u = 0; u < og.graph.vertex_count(); ++u) ascending[u] = u;
    sv = permute_labels(sv, ascending);
    for (const auto& [u, v] : og.graph.edges()) sv = apply_gate(sv, Gate::cz(u, v));
    return sv;
}

} // namespace sgc

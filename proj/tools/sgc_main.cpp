// Command-line front end: generate graphs, rewrite signed graph states,
// compile graphs onto measured grids, and query pivot minors.

#include "CLI11.hpp"
#include "json.hpp"

#include "sgc/compiler.hpp"
#include "sgc/io.hpp"
#include "sgc/oracle.hpp"
#include "sgc/pattern.hpp"
#include "sgc/search.hpp"
#include "sgc/signed_state.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sgc;
using nlohmann::json;

constexpr std::uint64_t kMaxCells = 4u << 20;

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

void emit(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write '" + path + "'");
    f << data;
}

OutcomeSource make_source(const std::string& mode, std::uint64_t seed) {
    if (mode == "zero") return OutcomeSource::zero();
    if (mode == "random") return OutcomeSource::random(seed);
    if (mode.rfind("forced:", 0) == 0) {
        std::vector<int> bits;
        for (char c : mode.substr(7)) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("forced outcomes must be a string of 0s and 1s");
            bits.push_back(c - '0');
        }
        return OutcomeSource::forced(std::move(bits));
    }
    throw std::invalid_argument("--outcomes must be zero, random, or forced:<bits>");
}

bool is_signed_text(const std::string& text) {
    std::istringstream in(text);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    return last.rfind("S:", 0) == 0;
}

json graph_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json e = json::array();
    for (const auto& [u, v] : g.edges()) e.push_back({u, v});
    j["edges"] = std::move(e);
    return j;
}

json state_json(const SignedGraphState& st) {
    json j = graph_json(st.graph);
    j["sign"] = st.sign.items();
    return j;
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

Graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

int run_gen(const std::string& kind, std::uint32_t rows, std::uint32_t cols, std::uint32_t n,
            double p, std::uint64_t seed, const std::string& out, const std::string& format) {
    Graph g;
    if (kind == "path") {
        if (n == 0) throw std::invalid_argument("path needs --n >= 1");
        if (n > kMaxCells) throw std::invalid_argument("graph too large");
        g = generate(GridKind::Path, 1, n);
    } else if (kind == "rect" || kind == "hex" || kind == "tri") {
        if (rows == 0 || cols == 0) throw std::invalid_argument("grids need --rows and --cols");
        if (static_cast<std::uint64_t>(rows) * cols > kMaxCells)
            throw std::invalid_argument("graph too large");
        const GridKind k = kind == "rect" ? GridKind::Rectangular
                         : kind == "hex" ? GridKind::Hexagonal
                                         : GridKind::Triangular;
        g = generate(k, rows, cols);
    } else if (kind == "random") {
        if (n > 4096) throw std::invalid_argument("random graphs are capped at 4096 vertices");
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("--edge-prob must lie in [0,1]");
        g = random_graph(n, p, seed);
    } else {
        throw std::invalid_argument("kind must be path, rect, hex, tri, or random");
    }
    emit(out, format == "json" ? dumped(graph_json(g)) : write_edge_list(g));
    return 0;
}

int run_lc(const std::string& in, Vertex u, const std::string& out, const std::string& format) {
    const std::string text = slurp(in);
    if (is_signed_text(text)) {
        const SignedGraphState st = apply_lc_op(parse_signed_state(text), u);
        emit(out, format == "json" ? dumped(state_json(st)) : write_signed_state(st));
    } else {
        const Graph g = local_complement(parse_edge_list(text), u);
        emit(out, format == "json" ? dumped(graph_json(g)) : write_edge_list(g));
    }
    return 0;
}

int run_pivot(const std::string& in, Vertex u, Vertex v, const std::string& out,
              const std::string& format) {
    const std::string text = slurp(in);
    if (is_signed_text(text)) {
        const SignedGraphState st = apply_hadamard_pair(parse_signed_state(text), u, v);
        emit(out, format == "json" ? dumped(state_json(st)) : write_signed_state(st));
    } else {
        const Graph g = pivot(parse_edge_list(text), u, v);
        emit(out, format == "json" ? dumped(graph_json(g)) : write_edge_list(g));
    }
    return 0;
}

int run_measure(const std::string& in, const std::string& basis, Vertex u, std::int64_t v_opt,
                const std::string& outcomes, std::uint64_t seed, const std::string& out,
                const std::string& format) {
    const std::string text = slurp(in);
    // a bare edge list measures the unsigned state
    const SignedGraphState st = is_signed_text(text)
        ? parse_signed_state(text)
        : SignedGraphState{parse_edge_list(text), VertexSet{}};
    OutcomeSource src = make_source(outcomes, seed);
    SignedGraphState result;
    std::vector<std::pair<Vertex, int>> reported;
    if (basis == "z") {
        if (v_opt >= 0) throw std::invalid_argument("z measurement takes a single vertex");
        const int s = src.next();
        result = measure_z(st, u, s);
        reported.push_back({u, s});
    } else if (basis == "x") {
        if (v_opt >= 0) {
            const Vertex v = static_cast<Vertex>(v_opt);
            const int r = src.next();
            const int s = src.next();
            result = measure_x_pair(st, u, v, r, s);
            reported.push_back({u, r});
            reported.push_back({v, s});
        } else {
            IsolatedXResult iso = measure_x_isolated(st, u);
            result = std::move(iso.state);
            reported.push_back({u, iso.outcome});
        }
    } else {
        throw std::invalid_argument("--basis must be z or x");
    }
    if (format == "json") {
        json j;
        json os = json::array();
        for (const auto& [vert, bit] : reported) {
            json o;
            o["vertex"] = vert;
            o["outcome"] = bit;
            os.push_back(std::move(o));
        }
        j["outcomes"] = std::move(os);
        j["state"] = state_json(result);
        emit(out, dumped(j));
    } else {
        std::ostringstream ss;
        for (const auto& [vert, bit] : reported) ss << "outcome " << vert << ' ' << bit << '\n';
        ss << write_signed_state(result);
        emit(out, ss.str());
    }
    return 0;
}

int run_compile(const std::string& in, const std::string& out, const std::string& format) {
    const Graph g = parse_edge_list(slurp(in));
    if (g.vertex_count() > 16) throw std::invalid_argument("compile is capped at 16 vertices");
    const GridCompilation comp = compile_graph(g);
    if (format == "text") {
        std::ostringstream ss;
        ss << "rows " << comp.grid.rows << '\n'
           << "cols " << comp.grid.cols << '\n'
           << "tiles " << comp.grid.tiles.size() << '\n'
           << "schedule " << comp.schedule.size() << '\n';
        emit(out, ss.str());
    } else {
        emit(out, compilation_to_json(comp));
    }
    return 0;
}

int run_verify(const std::string& comp_path, const std::string& graph_path,
               const std::string& outcomes, std::uint64_t seed, const std::string& out,
               const std::string& format) {
    const GridCompilation comp = compilation_from_json(slurp(comp_path));
    const Graph g = parse_edge_list(slurp(graph_path));
    OutcomeSource src = make_source(outcomes, seed);
    VerifyResult res = verify(comp, g, src, outcomes == "zero");
    if (format == "json") {
        json j;
        j["ok"] = res.ok;
        j["message"] = res.message;
        j["sign"] = res.sign.items();
        emit(out, dumped(j));
    } else {
        std::ostringstream ss;
        if (res.ok) {
            ss << "ok\nsign:";
            for (Vertex v : res.sign) ss << ' ' << v;
            ss << '\n';
        } else {
            ss << "rejected: " << res.message << '\n';
        }
        emit(out, ss.str());
    }
    return res.ok ? 0 : 1;
}

int run_simulate(const std::string& in, const std::string& input_bits,
                 const std::string& outcomes, std::uint64_t seed, const std::string& out,
                 const std::string& format) {
    const Pattern p = pattern_from_json(slurp(in));
    OutcomeSource src = make_source(outcomes, seed);
    StateVector psi;
    if (input_bits.empty()) {
        psi = plus_state(p.og.inputs.items());
    } else {
        if (input_bits.size() != p.og.inputs.size())
            throw std::invalid_argument("--input-bits length must match the input count");
        std::uint64_t bits = 0;
        for (char c : input_bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("--input-bits must be a string of 0s and 1s");
            bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
        }
        psi = basis_state(p.og.inputs.items(), bits);
    }
    const SimulationResult res = simulate_pattern(p, psi, src);
    if (format == "text") {
        std::ostringstream ss;
        for (const TranscriptEntry& t : res.transcript)
            ss << "measure " << t.vertex << " angle " << t.adapted_angle << " outcome "
               << t.outcome << '\n';
        ss << "norm " << norm(res.output) << '\n';
        emit(out, ss.str());
    } else {
        json j;
        j["transcript"] = json::parse(transcript_to_json(res.transcript));
        json frame = json::object();
        for (const auto& [v, xz] : res.frame.items())
            frame[std::to_string(v)] = xz.first && xz.second ? "XZ" : (xz.first ? "X" : "Z");
        j["frame"] = std::move(frame);
        j["labels"] = res.output.labels;
        json amps = json::array();
        for (const Complex& a : res.output.amp) amps.push_back({a.real(), a.imag()});
        j["amplitudes"] = std::move(amps);
        emit(out, dumped(j));
    }
    return 0;
}

int run_orbit(const std::string& in, std::size_t max_size, const std::string& out,
              const std::string& format) {
    const Graph g = parse_edge_list(slurp(in));
    if (g.vertex_count() > 10)
        throw std::invalid_argument("orbit enumeration is exact only up to 10 vertices");
    const OrbitIndex orbit = pivot_orbit(g, max_size);
    if (format == "json") {
        json j;
        j["size"] = orbit.members.size();
        j["truncated"] = orbit.truncated;
        json members = json::array();
        for (const OrbitMember& m : orbit.members) {
            json mm;
            json pv = json::array();
            for (const auto& [u, v] : m.pivots) pv.push_back({u, v});
            mm["pivots"] = std::move(pv);
            mm["edges"] = graph_json(m.graph)["edges"];
            members.push_back(std::move(mm));
        }
        j["members"] = std::move(members);
        emit(out, dumped(j));
    } else {
        std::ostringstream ss;
        ss << "size " << orbit.members.size() << '\n'
           << "truncated " << (orbit.truncated ? 1 : 0) << '\n';
        emit(out, ss.str());
    }
    return 0;
}

int run_minor(const std::string& target_path, const std::string& host_path, bool labeled,
              std::size_t max_orbit, const std::string& witness_out, const std::string& out,
              const std::string& format) {
    const Graph g = parse_edge_list(slurp(target_path));
    const Graph h = parse_edge_list(slurp(host_path));
    if (h.vertex_count() > 10)
        throw std::invalid_argument("minor search hosts are capped at 10 vertices");
    const MinorResult res = is_pivot_minor(g, h, !labeled, max_orbit);
    const char* answer = res.answer == MinorAnswer::Yes ? "yes"
                       : res.answer == MinorAnswer::No ? "no"
                                                        : "unknown";
    if (res.witness && !witness_out.empty()) emit(witness_out, witness_to_json(*res.witness));
    if (format == "json") {
        json j;
        j["answer"] = answer;
        j["witness"] = res.witness ? json::parse(witness_to_json(*res.witness)) : json(nullptr);
        emit(out, dumped(j));
    } else {
        emit(out, std::string(answer) + "\n");
    }
    return 0;
}

// Bounded rewrite-vs-oracle sweeps; exercises every rule on small states.
int run_selftest(std::uint32_t max_n, std::uint32_t cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uint64_t checked = 0;
    auto fail = [](const std::string& what) {
        std::cerr << "selftest: FAIL " << what << '\n';
        return 1;
    };

    auto random_state = [&](std::uint32_t n) {
        Graph g = random_graph(n, 0.5, rng());
        std::vector<Vertex> marks;
        for (Vertex v = 0; v < n; ++v)
            if (rng() & 1) marks.push_back(v);
        return SignedGraphState{std::move(g), VertexSet(std::move(marks))};
    };

    const std::uint32_t n_cap = std::max(2u, std::min(max_n, 8u));
    for (std::uint32_t c = 0; c < cases; ++c) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % (n_cap - 1));
        const SignedGraphState st = random_state(n);
        const StateVector psi = build_graph_state(st.graph, st.sign);
        const auto edges = st.graph.edges();

        // pivot agrees with its triple-local-complement form
        if (!edges.empty()) {
            const auto [u, v] = edges[rng() % edges.size()];
            if (pivot(st.graph, u, v) != pivot_via_lc(st.graph, u, v))
                return fail("pivot vs triple local complementation");
            ++checked;

            // H on both endpoints matches the four-case rewrite
            const SignedGraphState hp = apply_hadamard_pair(st, u, v);
            StateVector expect = apply_gate(apply_gate(psi, Gate::h(u)), Gate::h(v));
            if (!equal_up_to_phase(build_graph_state(hp.graph, hp.sign), expect))
                return fail("edge Hadamard pair rewrite");
            ++checked;

            // X measurement of an edge matches the projected oracle state
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) {
                    const SignedGraphState mx = measure_x_pair(st, u, v, r, s);
                    StateVector proj = project_angle(
                        project_angle(psi, u, 1.5707963267948966, r), v,
                        1.5707963267948966, s);
                    for (Complex& a : proj.amp) a *= 2.0;
                    // deletion compacts labels in order, so rename to 0..k-1
                    std::iota(proj.labels.begin(), proj.labels.end(), Vertex{0});
                    if (!equal_up_to_phase(build_graph_state(mx.graph, mx.sign), proj))
                        return fail("X pair measurement rewrite");
                    ++checked;
                }
        }

        // Z measurement matches the projected oracle state
        const Vertex u = static_cast<Vertex>(rng() % n);
        for (int s = 0; s < 2; ++s) {
            const SignedGraphState mz = measure_z(st, u, s);
            StateVector proj = project_angle(psi, u, 0.0, s);
            for (Complex& a : proj.amp) a *= 1.4142135623730951;
            std::iota(proj.labels.begin(), proj.labels.end(), Vertex{0});
            if (!equal_up_to_phase(build_graph_state(mz.graph, mz.sign), proj))
                return fail("Z measurement rewrite");
            ++checked;
        }

        // Pauli application matches the oracle
        std::vector<Vertex> xs, zs;
        for (Vertex v = 0; v < n; ++v) {
            if (rng() & 1) xs.push_back(v);
            if (rng() & 1) zs.push_back(v);
        }
        const PauliWord word{VertexSet(xs), VertexSet(zs), 0};
        const SignedGraphState pl = apply_pauli(st, word);
        StateVector expect = psi;
        for (Vertex v : word.z) expect = apply_gate(expect, Gate::z(v));
        for (Vertex v : word.x) expect = apply_gate(expect, Gate::x(v));
        if (!equal_up_to_phase(build_graph_state(pl.graph, pl.sign), expect))
            return fail("Pauli rewrite");
        ++checked;
    }
    std::cout << "selftest: pass (" << checked << " checks, n <= " << n_cap << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed graph state calculus toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    std::string in = "-", out = "-", format = "text";
    std::string outcomes = "zero";
    std::uint64_t seed = 0;

    auto add_io = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("-i,--input", in, "input file ('-' = stdin)");
        sub->add_option("-o,--output", out, "output file ('-' = stdout)");
        if (with_format)
            sub->add_option("--format", format, "output format: text or json")
                ->check(CLI::IsMember({"text", "json"}));
    };
    auto guarded = [&rc](auto fn) {
        return [&rc, fn]() {
            try {
                rc = fn();
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                rc = 1;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                rc = 2;
            }
        };
    };

    // gen
    std::string gen_kind;
    std::uint32_t gen_rows = 0, gen_cols = 0, gen_n = 0;
    double gen_p = 0.5;
    {
        CLI::App* sub = app.add_subcommand("gen", "generate a graph");
        sub->add_option("kind", gen_kind, "path, rect, hex, tri, or random")->required();
        sub->add_option("--rows", gen_rows, "grid rows");
        sub->add_option("--cols", gen_cols, "grid cols");
        sub->add_option("--n", gen_n, "vertex count (path, random)");
        sub->add_option("--edge-prob", gen_p, "edge probability (random)");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("-o,--output", out, "output file ('-' = stdout)");
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback(guarded([&]() {
            return run_gen(gen_kind, gen_rows, gen_cols, gen_n, gen_p, seed, out, format);
        }));
    }

    // lc
    std::uint32_t op_u = 0, op_v = 0;
    {
        CLI::App* sub = app.add_subcommand("lc", "local complementation step");
        sub->add_option("-u", op_u, "vertex")->required();
        add_io(sub);
        sub->callback(guarded([&]() { return run_lc(in, op_u, out, format); }));
    }

    // pivot
    {
        CLI::App* sub = app.add_subcommand(
            "pivot", "pivot an edge (H on both endpoints for signed states)");
        sub->add_option("-u", op_u, "first endpoint")->required();
        sub->add_option("-v", op_v, "second endpoint")->required();
        add_io(sub);
        sub->callback(guarded([&]() { return run_pivot(in, op_u, op_v, out, format); }));
    }

    // measure
    std::string basis = "z";
    std::int64_t measure_v = -1;
    {
        CLI::App* sub = app.add_subcommand("measure", "measure vertices of a signed state");
        sub->add_option("--basis", basis, "z or x")->required();
        sub->add_option("-u", op_u, "measured vertex")->required();
        sub->add_option("-v", measure_v, "partner vertex (X pair)");
        sub->add_option("--outcomes", outcomes, "zero, random, or forced:<bits>");
        sub->add_option("--seed", seed, "seed for random outcomes");
        add_io(sub);
        sub->callback(guarded([&]() {
            return run_measure(in, basis, op_u, measure_v, outcomes, seed, out, format);
        }));
    }

    // compile
    std::string comp_format = "json";
    {
        CLI::App* sub = app.add_subcommand("compile", "embed a graph into a measured grid");
        add_io(sub, false);
        sub->add_option("--format", comp_format, "output format: json or text")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback(guarded([&]() { return run_compile(in, out, comp_format); }));
    }

    // verify
    std::string graph_path;
    {
        CLI::App* sub = app.add_subcommand("verify", "replay a compilation against a graph");
        sub->add_option("-g,--graph", graph_path, "target graph (edge list)")->required();
        sub->add_option("--outcomes", outcomes, "zero, random, or forced:<bits>");
        sub->add_option("--seed", seed, "seed for random outcomes");
        add_io(sub);
        sub->callback(guarded([&]() {
            return run_verify(in, graph_path, outcomes, seed, out, format);
        }));
    }

    // simulate
    std::string input_bits, sim_format = "json";
    {
        CLI::App* sub = app.add_subcommand("simulate", "simulate a measurement pattern");
        sub->add_option("--input-bits", input_bits, "basis input on the pattern inputs");
        sub->add_option("--outcomes", outcomes, "zero, random, or forced:<bits>");
        sub->add_option("--seed", seed, "seed for random outcomes");
        add_io(sub, false);
        sub->add_option("--format", sim_format, "output format: json or text")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback(guarded([&]() {
            return run_simulate(in, input_bits, outcomes, seed, out, sim_format);
        }));
    }

    // orbit
    std::size_t max_size = 20000;
    {
        CLI::App* sub = app.add_subcommand("orbit", "enumerate the pivot orbit");
        sub->add_option("--max-size", max_size, "orbit size bound");
        add_io(sub);
        sub->callback(guarded([&]() { return run_orbit(in, max_size, out, format); }));
    }

    // minor
    std::string host_path, witness_out;
    bool labeled = false;
    std::size_t max_orbit = 20000;
    {
        CLI::App* sub = app.add_subcommand("minor", "decide pivot-minor containment");
        sub->add_option("-g,--graph", graph_path, "target graph (edge list)")->required();
        sub->add_option("-i,--input", host_path, "host graph (edge list)")->required();
        sub->add_flag("--labeled", labeled, "require the identity embedding");
        sub->add_option("--max-orbit", max_orbit, "orbit bound before answering unknown");
        sub->add_option("--witness-out", witness_out, "write the witness JSON here");
        sub->add_option("-o,--output", out, "output file ('-' = stdout)");
        sub->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->callback(guarded([&]() {
            return run_minor(graph_path, host_path, labeled, max_orbit, witness_out, out, format);
        }));
    }

    // selftest
    std::uint32_t st_max_n = 6, st_cases = 50;
    {
        CLI::App* sub = app.add_subcommand("selftest", "bounded rewrite-vs-oracle sweeps");
        sub->add_option("--max-n", st_max_n, "largest state size");
        sub->add_option("--cases", st_cases, "number of random cases");
        sub->add_option("--seed", seed, "sweep seed");
        sub->callback(guarded([&]() { return run_selftest(st_max_n, st_cases, seed); }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

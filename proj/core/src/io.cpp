#include "sgc/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sgc {

using nlohmann::json;

namespace {

constexpr Vertex kMaxVertices = 1u << 24;

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// Whole line must be exactly `expect` unsigned integers.
bool parse_row(const std::string& line, std::size_t expect, std::vector<long long>& out) {
    std::istringstream ls(line);
    out.clear();
    long long v = 0;
    while (ls >> v) {
        if (v < 0) return false;
        out.push_back(v);
    }
    if (!ls.eof()) return false;
    return out.size() == expect;
}

Graph edges_from_lines(const std::vector<std::string>& lines) {
    std::vector<long long> row;
    if (lines.empty() || !parse_row(lines[0], 2, row))
        throw std::invalid_argument("edge list: first line must be 'n m'");
    const long long n = row[0], m = row[1];
    if (n > kMaxVertices) throw std::invalid_argument("edge list: vertex count too large");
    if (static_cast<long long>(lines.size()) != 1 + m)
        throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                    " edge lines, found " + std::to_string(lines.size() - 1));
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!parse_row(lines[1 + i], 2, row))
            throw std::invalid_argument("edge list: bad edge line " + std::to_string(i + 1));
        if (row[0] >= n || row[1] >= n)
            throw std::invalid_argument("edge list: endpoint out of range on line " +
                                        std::to_string(i + 1));
        const Vertex u = static_cast<Vertex>(row[0]);
        const Vertex v = static_cast<Vertex>(row[1]);
        if (u == v) throw std::invalid_argument("edge list: loop on line " + std::to_string(i + 1));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw std::invalid_argument("edge list: duplicate edge on line " + std::to_string(i + 1));
        edges.push_back({u, v});
    }
    return Graph::from_edges(static_cast<Vertex>(n), edges);
}

json parsed(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

std::vector<Vertex> vertex_array(const json& j, const char* what, Vertex bound) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Vertex> out;
    for (const json& e : j) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= bound)
            throw std::invalid_argument(std::string(what) + ": bad vertex label");
        out.push_back(e.get<Vertex>());
    }
    return out;
}

VertexSet vertex_set(const json& j, const char* what, Vertex bound) {
    std::vector<Vertex> items = vertex_array(j, what, bound);
    VertexSet s(items);
    if (s.size() != items.size())
        throw std::invalid_argument(std::string(what) + ": duplicate vertex label");
    return s;
}

json schedule_to_j(const std::vector<ScheduleStep>& schedule) {
    json arr = json::array();
    for (const ScheduleStep& s : schedule) {
        json step;
        switch (s.op) {
            case ScheduleStep::Op::Z: step["op"] = "Z"; break;
            case ScheduleStep::Op::XPair: step["op"] = "Xpair"; break;
            case ScheduleStep::Op::XIso: step["op"] = "Xiso"; break;
        }
        step["vertices"] = s.vertices;
        step["outcomes"] = s.outcomes;
        arr.push_back(std::move(step));
    }
    return arr;
}

std::vector<ScheduleStep> schedule_from_j(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("schedule: expected an array");
    std::vector<ScheduleStep> out;
    for (const json& step : arr) {
        if (!step.is_object() || !step.contains("op") || !step.contains("vertices") ||
            !step.contains("outcomes"))
            throw std::invalid_argument("schedule: step needs op, vertices, outcomes");
        ScheduleStep s;
        const std::string op = step["op"].get<std::string>();
        std::size_t arity = 0;
        if (op == "Z") { s.op = ScheduleStep::Op::Z; arity = 1; }
        else if (op == "Xpair") { s.op = ScheduleStep::Op::XPair; arity = 2; }
        else if (op == "Xiso") { s.op = ScheduleStep::Op::XIso; arity = 1; }
        else throw std::invalid_argument("schedule: unknown op '" + op + "'");
        s.vertices = vertex_array(step["vertices"], "schedule vertices", kMaxVertices * 16);
        if (s.vertices.size() != arity)
            throw std::invalid_argument("schedule: wrong vertex count for op " + op);
        for (const json& o : step["outcomes"]) {
            if (!o.is_number_integer() || (o.get<int>() != 0 && o.get<int>() != 1))
                throw std::invalid_argument("schedule: outcomes must be 0 or 1");
            s.outcomes.push_back(o.get<int>());
        }
        if (s.outcomes.size() != arity)
            throw std::invalid_argument("schedule: wrong outcome count for op " + op);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) { return edges_from_lines(split_lines(text)); }

std::string write_signed_state(const SignedGraphState& st) {
    std::ostringstream out;
    out << write_edge_list(st.graph) << "S:";
    for (Vertex v : st.sign) out << ' ' << v;
    out << '\n';
    return out.str();
}

SignedGraphState parse_signed_state(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines.back().rfind("S:", 0) != 0)
        throw std::invalid_argument("signed state: missing 'S:' line");
    const std::string sign_line = lines.back().substr(2);
    lines.pop_back();
    Graph g = edges_from_lines(lines);

    std::istringstream ss(sign_line);
    long long v = 0;
    std::vector<Vertex> marks;
    while (ss >> v) {
        if (v < 0 || v >= static_cast<long long>(g.vertex_count()))
            throw std::invalid_argument("signed state: sign vertex out of range");
        marks.push_back(static_cast<Vertex>(v));
    }
    if (!ss.eof()) throw std::invalid_argument("signed state: bad token in 'S:' line");
    VertexSet sign(marks);
    if (sign.size() != marks.size())
        throw std::invalid_argument("signed state: duplicate sign vertex");
    return {std::move(g), std::move(sign)};
}

std::string pattern_to_json(const Pattern& p) {
    const Vertex n = p.og.graph.vertex_count();
    json j;
    std::vector<Vertex> verts(n);
    for (Vertex v = 0; v < n; ++v) verts[v] = v;
    j["vertices"] = verts;
    json edges = json::array();
    for (const auto& [u, v] : p.og.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["inputs"] = p.og.inputs.items();
    j["outputs"] = p.og.outputs.items();
    json plan = json::array();
    for (std::size_t i = 0; i < p.plan.size(); ++i) {
        const PlanEntry& e = p.plan[i];
        json entry;
        entry["vertex"] = e.vertex;
        entry["angle_radians"] = e.angle;
        entry["order"] = i;
        json rules = json::array();
        for (const ByproductRule& r : e.byproducts) {
            if (!r.x && !r.z) continue;
            json rule;
            rule["target"] = r.target;
            rule["op"] = r.x && r.z ? "XZ" : (r.x ? "X" : "Z");
            rules.push_back(std::move(rule));
        }
        entry["byproducts"] = std::move(rules);
        plan.push_back(std::move(entry));
    }
    j["plan"] = std::move(plan);
    return dumped(j);
}

Pattern pattern_from_json(const std::string& text) {
    const json j = parsed(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.contains("inputs") || !j.contains("outputs") || !j.contains("plan"))
        throw std::invalid_argument("pattern: needs vertices, edges, inputs, outputs, plan");
    const std::vector<Vertex> verts = vertex_array(j["vertices"], "pattern vertices", kMaxVertices);
    const Vertex n = static_cast<Vertex>(verts.size());
    for (Vertex v = 0; v < n; ++v)
        if (verts[v] != v)
            throw std::invalid_argument("pattern: vertices must be 0..n-1 ascending");

    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const json& e : j["edges"]) {
        const std::vector<Vertex> pair = vertex_array(e, "pattern edge", n);
        if (pair.size() != 2 || pair[0] == pair[1])
            throw std::invalid_argument("pattern: bad edge");
        if (!seen.insert({std::min(pair[0], pair[1]), std::max(pair[0], pair[1])}).second)
            throw std::invalid_argument("pattern: duplicate edge");
        edges.push_back({pair[0], pair[1]});
    }
    Pattern p{{Graph::from_edges(n, edges), vertex_set(j["inputs"], "pattern inputs", n),
               vertex_set(j["outputs"], "pattern outputs", n)},
              {}};

    if (!j["plan"].is_array()) throw std::invalid_argument("pattern: plan must be an array");
    std::vector<std::pair<std::size_t, PlanEntry>> staged;
    for (const json& entry : j["plan"]) {
        if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("angle_radians") ||
            !entry.contains("order"))
            throw std::invalid_argument("pattern: plan entry needs vertex, angle_radians, order");
        PlanEntry e;
        if (!entry["vertex"].is_number_unsigned() || entry["vertex"].get<std::uint64_t>() >= n)
            throw std::invalid_argument("pattern: plan vertex out of range");
        e.vertex = entry["vertex"].get<Vertex>();
        if (!entry["angle_radians"].is_number())
            throw std::invalid_argument("pattern: angle must be a number");
        e.angle = entry["angle_radians"].get<double>();
        if (entry.contains("byproducts")) {
            for (const json& rule : entry["byproducts"]) {
                if (!rule.is_object() || !rule.contains("target") || !rule.contains("op"))
                    throw std::invalid_argument("pattern: byproduct needs target and op");
                if (!rule["target"].is_number_unsigned() ||
                    rule["target"].get<std::uint64_t>() >= n)
                    throw std::invalid_argument("pattern: byproduct target out of range");
                const std::string op = rule["op"].get<std::string>();
                ByproductRule r{rule["target"].get<Vertex>(), false, false};
                if (op == "X") r.x = true;
                else if (op == "Z") r.z = true;
                else if (op == "XZ") r.x = r.z = true;
                else throw std::invalid_argument("pattern: byproduct op must be X, Z, or XZ");
                e.byproducts.push_back(r);
            }
        }
        if (!entry["order"].is_number_unsigned())
            throw std::invalid_argument("pattern: order must be a non-negative integer");
        staged.push_back({entry["order"].get<std::size_t>(), std::move(e)});
    }
    std::sort(staged.begin(), staged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < staged.size(); ++i) {
        if (staged[i].first != i)
            throw std::invalid_argument("pattern: order values must be a permutation of 0..k-1");
        p.plan.push_back(std::move(staged[i].second));
    }
    return p;
}

std::string schedule_to_json(const std::vector<ScheduleStep>& schedule) {
    return dumped(schedule_to_j(schedule));
}

std::vector<ScheduleStep> schedule_from_json(const std::string& text) {
    return schedule_from_j(parsed(text));
}

std::string witness_to_json(const PivotMinorWitness& w) {
    json j;
    json pivots = json::array();
    for (const auto& [u, v] : w.pivots) pivots.push_back({u, v});
    j["pivots"] = std::move(pivots);
    j["deletions"] = w.deletions;
    json emb = json::object();
    for (std::size_t i = 0; i < w.embedding.size(); ++i)
        emb[std::to_string(i)] = w.embedding[i];
    j["embedding"] = std::move(emb);
    return dumped(j);
}

PivotMinorWitness witness_from_json(const std::string& text) {
    const json j = parsed(text);
    if (!j.is_object() || !j.contains("pivots") || !j.contains("deletions") ||
        !j.contains("embedding"))
        throw std::invalid_argument("witness: needs pivots, deletions, embedding");
    PivotMinorWitness w;
    for (const json& p : j["pivots"]) {
        const std::vector<Vertex> pair = vertex_array(p, "witness pivot", kMaxVertices);
        if (pair.size() != 2) throw std::invalid_argument("witness: pivot needs two vertices");
        w.pivots.push_back({pair[0], pair[1]});
    }
    w.deletions = vertex_array(j["deletions"], "witness deletions", kMaxVertices);
    if (!j["embedding"].is_object())
        throw std::invalid_argument("witness: embedding must be an object");
    w.embedding.resize(j["embedding"].size(), 0);
    std::vector<char> present(w.embedding.size(), 0);
    for (const auto& [key, val] : j["embedding"].items()) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("witness: embedding key must be an integer");
        }
        if (idx >= w.embedding.size() || present[idx])
            throw std::invalid_argument("witness: embedding keys must cover 0..k-1 once");
        if (!val.is_number_unsigned())
            throw std::invalid_argument("witness: embedding value must be a vertex");
        w.embedding[idx] = val.get<Vertex>();
        present[idx] = 1;
    }
    return w;
}

namespace {

const char* tile_name(TileKind k) {
    switch (k) {
        case TileKind::Start: return "start";
        case TileKind::Id: return "id";
        case TileKind::H: return "h";
        case TileKind::CzUpper: return "cz_upper";
        case TileKind::CzLower: return "cz_lower";
    }
    return "id";
}

TileKind tile_kind(const std::string& name) {
    if (name == "start") return TileKind::Start;
    if (name == "id") return TileKind::Id;
    if (name == "h") return TileKind::H;
    if (name == "cz_upper") return TileKind::CzUpper;
    if (name == "cz_lower") return TileKind::CzLower;
    throw std::invalid_argument("compilation: unknown tile kind '" + name + "'");
}

} // namespace

std::string compilation_to_json(const GridCompilation& comp) {
    const GridLayout& L = comp.grid;
    json j;
    j["rows"] = L.rows;
    j["cols"] = L.cols;
    json tiles = json::array();
    for (const TilePlacement& t : L.tiles) {
        json tile;
        tile["wire"] = t.wire;
        tile["layer"] = t.layer;
        tile["kind"] = tile_name(t.kind);
        tiles.push_back(std::move(tile));
    }
    j["tiles"] = std::move(tiles);
    j["x_set"] = L.x_set.items();
    j["z_set"] = L.z_set.items();
    j["outputs"] = L.outputs;
    j["output_map"] = comp.output_map;
    j["schedule"] = schedule_to_j(comp.schedule);
    return dumped(j);
}

GridCompilation compilation_from_json(const std::string& text) {
    const json j = parsed(text);
    for (const char* key : {"rows", "cols", "tiles", "x_set", "z_set", "outputs", "output_map",
                            "schedule"})
        if (!j.is_object() || !j.contains(key))
            throw std::invalid_argument(std::string("compilation: missing key '") + key + "'");
    GridCompilation comp;
    GridLayout& L = comp.grid;
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw std::invalid_argument("compilation: rows and cols must be non-negative");
    L.rows = j["rows"].get<std::uint32_t>();
    L.cols = j["cols"].get<std::uint32_t>();
    if (L.rows == 0 || L.cols == 0 || L.rows % 4 != 0 || L.cols % 4 != 0)
        throw std::invalid_argument("compilation: rows and cols must be positive multiples of 4");
    L.wires = L.rows / 4;
    L.layers = L.cols / 4;
    const Vertex total = static_cast<Vertex>(L.rows) * L.cols;
    for (const json& t : j["tiles"]) {
        if (!t.is_object() || !t.contains("wire") || !t.contains("layer") || !t.contains("kind"))
            throw std::invalid_argument("compilation: tile needs wire, layer, kind");
        TilePlacement tp;
        tp.wire = t["wire"].get<std::uint32_t>();
        tp.layer = t["layer"].get<std::uint32_t>();
        tp.kind = tile_kind(t["kind"].get<std::string>());
        if (tp.wire >= L.wires || tp.layer >= L.layers)
            throw std::invalid_argument("compilation: tile out of range");
        L.tiles.push_back(tp);
    }
    L.x_set = vertex_set(j["x_set"], "compilation x_set", total);
    L.z_set = vertex_set(j["z_set"], "compilation z_set", total);
    L.outputs = vertex_array(j["outputs"], "compilation outputs", total);
    for (const json& v : j["output_map"]) {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= L.wires)
            throw std::invalid_argument("compilation: output_map entry out of range");
        comp.output_map.push_back(v.get<std::uint32_t>());
    }
    comp.schedule = schedule_from_j(j["schedule"]);
    return comp;
}

std::string transcript_to_json(const std::vector<TranscriptEntry>& transcript) {
    json arr = json::array();
    for (const TranscriptEntry& t : transcript) {
        json e;
        e["vertex"] = t.vertex;
        e["adapted_angle"] = t.adapted_angle;
        e["outcome"] = t.outcome;
        arr.push_back(std::move(e));
    }
    return dumped(arr);
}

} // namespace sgc

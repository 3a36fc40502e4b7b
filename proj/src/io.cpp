#include "cst/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cst {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) bad(where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) bad("unknown field \"" + key + "\" in " + where);
    }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) bad("missing field \"" + std::string(key) + "\" in " + where);
    return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) bad("field \"" + std::string(key) + "\" in " + where + " must be an integer");
    return v.get<int>();
}

bool decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Json pair_json(const Rat& a, const Rat& b) { return Json::array({rat_to_json(a), rat_to_json(b)}); }

std::pair<Rat, Rat> pair_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) bad(where + " must be a coordinate pair");
    return {rat_from_json(j[0]), rat_from_json(j[1])};
}

}  // namespace

Json rat_to_json(const Rat& q) { return Json::array({numerator_string(q), denominator_string(q)}); }

Rat rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        bad("a rational must be [\"numerator\", \"denominator\"]");
    const std::string num = j[0].get<std::string>(), den = j[1].get<std::string>();
    if (!decimal_integer(num) || !decimal_integer(den)) bad("malformed rational [" + num + ", " + den + "]");
    return rat_from_strings(num, den);
}

DrawingData drawing_data_from_json(const Json& j) {
    only_keys(j, {"n", "graph", "backend", "vertices", "edges", "circles"}, "drawing");
    DrawingData d;
    d.n = int_field(j, "n", "drawing");
    const Json& graph = field(j, "graph", "drawing");
    if (graph.is_string() && graph.get<std::string>() == "complete") {
        d.graph = GraphKind{};
    } else if (graph.is_object()) {
        only_keys(graph, {"bipartite"}, "graph");
        const Json& parts = field(graph, "bipartite", "graph");
        if (!parts.is_array() || parts.size() != 2 || !parts[0].is_number_integer() || !parts[1].is_number_integer())
            bad("\"bipartite\" must be [a, b]");
        d.graph = GraphKind{true, parts[0].get<int>(), parts[1].get<int>()};
    } else {
        bad("\"graph\" must be \"complete\" or {\"bipartite\": [a, b]}");
    }
    const Json& backend = field(j, "backend", "drawing");
    if (backend == "cartesian")
        d.backend = Backend::Cartesian;
    else if (backend == "polar")
        d.backend = Backend::Polar;
    else
        bad("\"backend\" must be \"cartesian\" or \"polar\"");

    const Json& verts = field(j, "vertices", "drawing");
    if (!verts.is_array()) bad("\"vertices\" must be an array");
    for (const Json& v : verts) {
        auto [a, b] = pair_from_json(v, "vertex");
        if (d.backend == Backend::Cartesian)
            d.points.push_back(Point{a, b});
        else
            d.polar.push_back(PolarPoint{a, b});
    }
    const Json& edges = field(j, "edges", "drawing");
    if (!edges.is_array()) bad("\"edges\" must be an array");
    for (const Json& e : edges) {
        only_keys(e, {"u", "v", "curve"}, "edge");
        Edge edge;
        edge.u = int_field(e, "u", "edge");
        edge.v = int_field(e, "v", "edge");
        const Json& curve = field(e, "curve", "edge");
        if (!curve.is_array()) bad("\"curve\" must be an array of waypoints");
        if (d.backend == Backend::Cartesian) {
            CartesianCurve c;
            for (const Json& w : curve) {
                auto [x, y] = pair_from_json(w, "waypoint");
                c.waypoints.push_back(Point{x, y});
            }
            edge.curve = std::move(c);
        } else {
            PolarCurve c;
            for (const Json& w : curve) {
                auto [t, r] = pair_from_json(w, "waypoint");
                c.waypoints.push_back(PolarPoint{t, r});
            }
            edge.curve = std::move(c);
        }
        d.edges.push_back(std::move(edge));
    }
    if (auto it = j.find("circles"); it != j.end()) {
        only_keys(*it, {"r_in2", "r_out2"}, "circles");
        d.circles = Circles{rat_from_json(field(*it, "r_in2", "circles")), rat_from_json(field(*it, "r_out2", "circles"))};
    }
    return d;
}

Json drawing_to_json(const DrawingData& d) {
    Json j;
    j["n"] = d.n;
    if (d.graph.bipartite)
        j["graph"] = Json{{"bipartite", Json::array({d.graph.part_a, d.graph.part_b})}};
    else
        j["graph"] = "complete";
    j["backend"] = d.backend == Backend::Cartesian ? "cartesian" : "polar";
    Json verts = Json::array();
    if (d.backend == Backend::Cartesian)
        for (const Point& p : d.points) verts.push_back(pair_json(p.x, p.y));
    else
        for (const PolarPoint& p : d.polar) verts.push_back(pair_json(p.theta, p.r));
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const Edge& e : d.edges) {
        Json curve = Json::array();
        if (const auto* c = std::get_if<CartesianCurve>(&e.curve))
            for (const Point& p : c->waypoints) curve.push_back(pair_json(p.x, p.y));
        else
            for (const PolarPoint& p : std::get<PolarCurve>(e.curve).waypoints) curve.push_back(pair_json(p.theta, p.r));
        edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"curve", std::move(curve)}});
    }
    j["edges"] = std::move(edges);
    if (d.circles) j["circles"] = Json{{"r_in2", rat_to_json(d.circles->r_in2)}, {"r_out2", rat_to_json(d.circles->r_out2)}};
    return j;
}

Drawing parse_drawing(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    return Drawing::build(drawing_data_from_json(j));
}

std::string serialize_drawing(const Drawing& d) { return drawing_to_json(d.data()).dump(1) + "\n"; }

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write " + path);
    out << text;
}

Drawing load_drawing(const std::string& path) { return parse_drawing(read_text(path)); }

EdgeSet parse_tree(const Drawing& d, const std::string& text) {
    EdgeSet t;
    if (!text.empty() && text.back() == ',') bad("tree text ends with a comma");
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos || !decimal_integer(item.substr(0, dash)) ||
            !decimal_integer(item.substr(dash + 1)))
            bad("tree edges are written u-v, got \"" + item + "\"");
        const int u = std::stoi(item.substr(0, dash)), v = std::stoi(item.substr(dash + 1));
        if (u < 0 || v < 0 || u >= d.n() || v >= d.n() || u == v || d.edge_id(u, v) < 0)
            fail(ErrorKind::UnknownEdge, "no edge " + item + " in the drawing");
        t.insert(d.edge_id(u, v));
    }
    return t;
}

std::string tree_to_string(const Drawing& d, EdgeSet t) {
    std::string out;
    for (int e : t) {
        if (!out.empty()) out += ',';
        out += std::to_string(d.edge(e).u) + "-" + std::to_string(d.edge(e).v);
    }
    return out;
}

Json tree_to_json(const Drawing& d, EdgeSet t) {
    Json out = Json::array();
    for (int e : t) out.push_back(Json::array({d.edge(e).u, d.edge(e).v}));
    return out;
}

EdgeSet tree_from_json(const Drawing& d, const Json& j) {
    if (!j.is_array()) bad("a tree must be an array of [u, v] pairs");
    EdgeSet t;
    for (const Json& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            bad("a tree edge must be [u, v]");
        const int u = p[0].get<int>(), v = p[1].get<int>();
        if (u < 0 || v < 0 || u >= d.n() || v >= d.n() || u == v || d.edge_id(u, v) < 0)
            fail(ErrorKind::UnknownEdge, "no edge " + std::to_string(u) + "-" + std::to_string(v) + " in the drawing");
        t.insert(d.edge_id(u, v));
    }
    return t;
}

std::string sequence_digest(const Drawing& d, const std::vector<EdgeSet>& trees) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (EdgeSet t : trees) feed(tree_to_string(d, t) + ";");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json sequence_to_json(const Drawing& d, const TransformSequence& seq, const std::optional<std::string>& drawing_path) {
    Json j;
    if (drawing_path)
        j["drawing"] = *drawing_path;
    else
        j["drawing"] = drawing_to_json(d.data());
    j["method"] = seq.method;
    Json trees = Json::array();
    for (EdgeSet t : seq.trees) trees.push_back(tree_to_json(d, t));
    j["trees"] = std::move(trees);
    j["certified"] = seq.certs.size() == seq.trees.size();
    j["digest"] = sequence_digest(d, seq.trees);
    return j;
}

SequenceFile sequence_file_from_json(const Json& j) {
    only_keys(j, {"drawing", "method", "trees", "certified", "digest"}, "sequence");
    SequenceFile f;
    const Json& drawing = field(j, "drawing", "sequence");
    if (drawing.is_string())
        f.drawing_path = drawing.get<std::string>();
    else if (drawing.is_object())
        f.drawing_inline = drawing;
    else
        bad("\"drawing\" must be a path or an inline drawing");
    const Json& method = field(j, "method", "sequence");
    if (!method.is_string()) bad("\"method\" must be a string");
    f.method = method.get<std::string>();
    const Json& trees = field(j, "trees", "sequence");
    if (!trees.is_array()) bad("\"trees\" must be an array");
    for (const Json& t : trees) f.trees.push_back(t);
    const Json& certified = field(j, "certified", "sequence");
    if (!certified.is_boolean()) bad("\"certified\" must be a boolean");
    f.certified = certified.get<bool>();
    if (auto it = j.find("digest"); it != j.end()) {
        if (!it->is_string()) bad("\"digest\" must be a string");
        f.digest = it->get<std::string>();
    }
    return f;
}

Json class_report_to_json(const Drawing& d, const ClassReport& r) {
    Json j;
    j["simple"] = r.is_simple;
    j["n"] = d.n();
    j["edges"] = d.edge_count();
    j["crossings"] = d.crossing_count();
    j["monotone"] = r.is_monotone;
    j["two_page"] = r.is_two_page;
    if (r.cylindrical)
        j["cylindrical"] = Json{{"r_in2", rat_to_json(r.cylindrical->r_in2)},
                                {"r_out2", rat_to_json(r.cylindrical->r_out2)},
                                {"inner", r.cylindrical->inner},
                                {"outer", r.cylindrical->outer}};
    else
        j["cylindrical"] = nullptr;
    j["c_monotone"] = r.is_c_monotone;
    j["strongly_c_monotone"] = r.is_strongly_c_monotone;
    j["notes"] = r.notes;
    return j;
}

Json error_to_json(const Error& e) {
    static const char* const names[] = {"", "invalid_input", "inapplicable", "internal"};
    Json j;
    j["error"] = to_string(e.kind());
    j["category"] = names[static_cast<int>(category(e.kind()))];
    j["message"] = e.what();
    if (e.index()) j["index"] = *e.index();
    return j;
}

std::string compat_to_dot(const Drawing& d, const CompatGraph& g) {
    std::ostringstream out;
    out << (g.restricted() ? "graph special_trees {\n" : "graph plane_trees {\n");
    for (int i = 0; i < g.size(); ++i) out << "  t" << i << " [label=\"" << tree_to_string(d, g.nodes()[i]) << "\"];\n";
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j)) out << "  t" << i << " -- t" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace cst

#include "cst/cli.hpp"

#include "cst/compat.hpp"
#include "cst/generators.hpp"
#include "cst/io.hpp"
#include "cst/render.hpp"
#include "cst/transforms.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>

namespace cst {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_text(path, text);
}

std::optional<TreeFilter> filter_from_string(const std::string& s) {
    if (s == "all") return TreeFilter::All;
    if (s == "star") return TreeFilter::Star;
    if (s == "double_star") return TreeFilter::DoubleStar;
    if (s == "twin_star") return TreeFilter::TwinStar;
    if (s == "special") return TreeFilter::Special;
    return std::nullopt;
}

int run_validate(const std::string& file, std::ostream& out) {
    const Drawing d = load_drawing(file);
    out << class_report_to_json(d, classify(d)).dump(2) << "\n";
    return 0;
}

int run_generate(const std::string& cls, const GenSpec& base, const std::string& output, std::ostream& out) {
    GenSpec spec = base;
    const auto c = gen_class_from_string(cls);
    if (!c) fail(ErrorKind::ParseError, "unknown class \"" + cls + "\"");
    spec.cls = *c;
    emit(serialize_drawing(generate(spec)), output, out);
    return 0;
}

int run_trees(const std::string& file, const std::string& kind, bool list, std::ostream& out) {
    const Drawing d = load_drawing(file);
    const auto filter = filter_from_string(kind);
    if (!filter) fail(ErrorKind::ParseError, "unknown tree kind \"" + kind + "\"");
    const auto trees = enumerate_plane_trees(d, *filter);
    Json j;
    j["count"] = trees.size();
    if (list) {
        Json items = Json::array();
        for (EdgeSet t : trees) items.push_back(tree_to_string(d, t));
        j["trees"] = std::move(items);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int run_compat(const std::string& file, bool special, const std::string& dot, std::ostream& out) {
    const Drawing d = load_drawing(file);
    const CompatGraph g = build_compat_graph(d, special);
    const CompatAnalysis a = analyze(g);
    Json j;
    j["nodes"] = g.size();
    j["edges"] = g.edge_count();
    j["connected"] = a.connected;
    j["components"] = a.components;
    if (a.diameter)
        j["diameter"] = *a.diameter;
    else
        j["diameter"] = "infinite";
    out << j.dump() << "\n";
    if (!dot.empty()) write_text(dot, compat_to_dot(d, g));
    return 0;
}

int run_transform(const std::string& file, const std::string& from, const std::string& to, const std::string& method,
                  const std::string& output, std::ostream& out) {
    const Drawing d = load_drawing(file);
    const auto m = method_from_string(method);
    if (!m) fail(ErrorKind::ParseError, "unknown method \"" + method + "\"");
    const TransformSequence seq = transform(d, parse_tree(d, from), parse_tree(d, to), *m);
    // transform() certifies; refuse to write anything that slipped through without certificates.
    ensure(seq.certs.size() == seq.trees.size(), "transformation returned an uncertified sequence");
    std::optional<std::string> ref;
    if (!output.empty() && output != "-") {
        const auto base = std::filesystem::absolute(output).parent_path();
        ref = std::filesystem::relative(std::filesystem::absolute(file), base).generic_string();
    } else {
        ref = file;
    }
    emit(sequence_to_json(d, seq, ref).dump(1) + "\n", output, out);
    return 0;
}

int run_certify(const std::string& file, std::ostream& out) {
    Json j;
    try {
        j = Json::parse(read_text(file));
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    const SequenceFile sf = sequence_file_from_json(j);
    Drawing d = [&] {
        if (sf.drawing_inline) return Drawing::build(drawing_data_from_json(*sf.drawing_inline));
        std::filesystem::path p(*sf.drawing_path);
        if (p.is_relative()) p = std::filesystem::path(file).parent_path() / p;
        return load_drawing(p.string());
    }();
    std::vector<EdgeSet> trees;
    for (const Json& t : sf.trees) trees.push_back(tree_from_json(d, t));
    const TransformSequence seq = certify_sequence(d, trees, sf.method);
    const std::string digest = sequence_digest(d, seq.trees);
    if (!sf.digest.empty() && sf.digest != digest)
        fail(ErrorKind::ParseError, "digest " + sf.digest + " does not match the trees (" + digest + ")");
    Json r;
    r["valid"] = true;
    r["method"] = seq.method;
    r["trees"] = seq.trees.size();
    r["digest"] = digest;
    out << r.dump() << "\n";
    return 0;
}

int run_render(const std::string& file, const std::vector<std::string>& trees, const std::string& output,
               std::ostream& out) {
    const Drawing d = load_drawing(file);
    std::vector<EdgeSet> hl;
    for (const auto& t : trees) hl.push_back(parse_tree(d, t));
    emit(render_svg(d, hl), output, out);
    return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compatible plane spanning trees in simple drawings", "cst"};
    app.require_subcommand(1);

    std::string file, output, kind = "all", from, to, method = "auto", dot, cls;
    bool list = false, special = false;
    std::vector<std::string> tree_args;
    GenSpec spec;

    auto* validate = app.add_subcommand("validate", "Validate a drawing and print its class report");
    validate->add_option("file", file, "Drawing file")->required();

    auto* gen = app.add_subcommand("generate", "Generate a drawing");
    gen->add_option("--class", cls, "convex|random_points|monotone_perturbed|two_page|cylindrical|strongly_cmonotone")
        ->required();
    gen->add_option("--n", spec.n, "Number of vertices")->required();
    gen->add_option("--seed", spec.seed, "64-bit seed");
    gen->add_option("--inner", spec.inner, "Cylindrical: vertices on the inner circle");
    gen->add_option("--outer", spec.outer, "Cylindrical: vertices on the outer circle");
    gen->add_option("--max-rejects", spec.max_rejects, "Rejection budget");
    gen->add_option("-o,--output", output, "Output file (stdout if absent)");

    auto* trees = app.add_subcommand("trees", "Count or list plane spanning trees");
    trees->add_option("file", file, "Drawing file")->required();
    trees->add_option("--kind", kind, "all|star|double_star|twin_star|special");
    trees->add_flag("--list", list, "Print every tree");

    auto* compat = app.add_subcommand("compat", "Analyze the compatibility graph");
    compat->add_option("file", file, "Drawing file")->required();
    compat->add_flag("--special", special, "Only stars, double stars and twin stars");
    compat->add_option("--dot", dot, "Write the graph in DOT format");

    auto* tr = app.add_subcommand("transform", "Transform one plane spanning tree into another");
    tr->add_option("file", file, "Drawing file")->required();
    tr->add_option("--from", from, "Start tree, e.g. 0-1,1-2")->required();
    tr->add_option("--to", to, "Target tree")->required();
    tr->add_option("--method", method, "auto|cylindrical|monotone|cmonotone|special");
    tr->add_option("-o,--output", output, "Sequence file (stdout if absent)");

    auto* cert = app.add_subcommand("certify", "Re-verify a sequence file");
    cert->add_option("file", file, "Sequence file")->required();

    auto* render = app.add_subcommand("render", "Render a drawing as SVG");
    render->add_option("file", file, "Drawing file")->required();
    render->add_option("--tree", tree_args, "Tree to highlight (repeatable)");
    render->add_option("-o,--output", output, "SVG file (stdout if absent)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) rev.pop_back();
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "ParseError"}, {"category", "invalid_input"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (*validate) return run_validate(file, out);
        if (*gen) return run_generate(cls, spec, output, out);
        if (*trees) return run_trees(file, kind, list, out);
        if (*compat) return run_compat(file, special, dot, out);
        if (*tr) return run_transform(file, from, to, method, output, out);
        if (*cert) return run_certify(file, out);
        if (*render) return run_render(file, tree_args, output, out);
    } catch (const Error& e) {
        err << error_to_json(e).dump() << "\n";
        return static_cast<int>(category(e.kind()));
    } catch (const std::exception& e) {
        err << Json{{"error", "InternalInvariantViolated"}, {"category", "internal"}, {"message", e.what()}}.dump()
            << "\n";
        return 3;
    }
    return 1;
}

}  // namespace cst

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "latk/analysis.hpp"
#include "latk/generator.hpp"
#include "latk/io.hpp"
#include "latk/lift.hpp"
#include "latk/oracle.hpp"
#include "latk/samples.hpp"
#include "latk/validate.hpp"

using namespace latk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // celtic found / validation failed
constexpr int kExitUsage = 2;   // usage, parse or generation error

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::SyntaxError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::SyntaxError, "cannot write " + path);
    out << text;
}

std::string format_witness(const CelticWitness& w) {
    std::string line;
    for (int i = 0; i < 4; ++i) {
        if (i)
            line += " ";
        line += to_string(w.corners[i]) + " " + crossing_letter(w.types[i]);
    }
    return line;
}

std::string format_cycle(const std::vector<Edge2>& cycle) {
    std::string line;
    for (const Edge2& e : cycle) {
        if (!line.empty())
            line += " ";
        line += to_string(e);
    }
    return line;
}

Diagram load_diagram(const std::string& path) {
    return parse_diagram(read_file(path));
}

int cmd_validate(const std::string& path) {
    try {
        const Diagram d = load_diagram(path);
        std::cout << "valid: true\n";
        std::cout << "components: " << d.components().size() << "\n";
        std::cout << "crossings: " << d.crossing_count() << "\n";
        std::cout << "edges: " << d.edges().size() << "\n";
        return kExitOk;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SyntaxError)
            throw;
        std::cout << "valid: false\n";
        std::cout << "error: " << error_code_name(e.code()) << "\n";
        std::cout << "detail: " << e.what() << "\n";
        return kExitDomain;
    }
}

int cmd_analyze(const std::string& path) {
    const Diagram d = load_diagram(path);
    const CrossingGraph cg = crossing_graph(d);
    const ProblemCrossingGraph pcg = problem_crossing_graph(d);

    std::cout << "crossings: " << d.crossing_count() << "\n";
    std::cout << "crossing_graph_edges: " << cg.graph.edge_count() << "\n";
    std::cout << "problem_crossings: " << pcg.graph.vertex_count() << "\n";
    for (const auto& [c, nbrs] : pcg.graph.adj) {
        (void)nbrs;
        const BadNeighborReport r = bad_neighbor_pairs(d, cg, c);
        std::cout << "problem: " << to_string(c) << " bad:";
        for (const Point2& b : r.bad_neighbors)
            std::cout << " " << to_string(b);
        std::cout << "\n";
    }

    const auto witness = find_celtic(d);
    if (!witness) {
        const auto comps = pcg_components(pcg);
        std::cout << "pcg_components: " << comps.size() << "\n";
        for (const PcgComponent& comp : comps) {
            std::cout << "pcg_component: ";
            switch (comp.kind) {
                case PcgKind::IsolatedVertex: std::cout << "vertex"; break;
                case PcgKind::Arc: std::cout << "arc"; break;
                case PcgKind::Cycle: std::cout << "cycle"; break;
            }
            for (const Point2& v : comp.vertices)
                std::cout << " " << to_string(v);
            std::cout << "\n";
        }
    }
    const StructuralReport sr = structural_report(d);
    std::cout << "two_near_regular: " << (sr.two_near_regular ? "true" : "false")
              << "\n";
    std::cout << "deleted_square_free: "
              << (sr.deleted_square_free ? "true" : "false") << "\n";
    std::cout << "cycles_have_non_corner: "
              << (sr.cycles_have_non_corner ? "true" : "false") << "\n";
    if (witness) {
        std::cout << "celtic: " << format_witness(*witness) << "\n";
        return kExitDomain;
    }
    std::cout << "celtic: none\n";
    return kExitOk;
}

int cmd_lift(const std::string& path, const std::string& out_path, bool use_oracle,
             bool trace) {
    const Diagram d = load_diagram(path);

    if (use_oracle) {
        const OracleDecision decision = oracle_liftable(d);
        if (!decision.liftable) {
            std::cout << "lifted: false\n";
            std::cout << "cycle: " << format_cycle(decision.cycle) << "\n";
            return kExitDomain;
        }
        const HeightAssignment h = oracle_heights(d);
        const Link3 k = assemble_link3(d, h);
        const auto [lo, hi] = height_range(d, h);
        std::cout << "lifted: true\n";
        std::cout << "height_range: " << lo << ".." << hi << "\n";
        if (!out_path.empty()) {
            write_file(out_path, serialize_link3(k));
            std::cout << "output: " << out_path << "\n";
        }
        const ValidationReport report = full_validate(d, k);
        std::cout << "validate: " << (report.ok() ? "pass" : "fail") << "\n";
        return report.ok() ? kExitOk : kExitDomain;
    }

    const LiftResult r = lift_diagram(d, {.verify_backwards_compat = trace});
    if (!r.lifted()) {
        std::cout << "lifted: false\n";
        std::cout << "celtic: " << format_witness(*r.celtic) << "\n";
        return kExitDomain;
    }
    std::cout << "lifted: true\n";
    std::cout << "lifts: " << r.trace.size() << "\n";
    if (trace)
        for (const LiftSpec& spec : r.trace)
            std::cout << "lift: " << to_string(spec.crossing) << " "
                      << axis_letter(spec.axis) << " "
                      << (spec.height > 0 ? "+" : "") << spec.height << "\n";
    const auto [lo, hi] = height_range(d, r.heights);
    std::cout << "height_range: " << lo << ".." << hi << "\n";
    if (!out_path.empty()) {
        write_file(out_path, serialize_link3(*r.link));
        std::cout << "output: " << out_path << "\n";
    }
    const ValidationReport report = full_validate(d, *r.link);
    std::cout << "validate: " << (report.ok() ? "pass" : "fail") << "\n";
    return report.ok() ? kExitOk : kExitDomain;
}

int cmd_check(const std::string& diagram_path, const std::string& link_path) {
    const Diagram d = load_diagram(diagram_path);
    const Link3 k = parse_link3(read_file(link_path));
    const ValidationReport report = full_validate(d, k);
    std::cout << "projection_matches: "
              << (report.projection_matches ? "true" : "false") << "\n";
    std::cout << "proper: " << (report.proper ? "true" : "false") << "\n";
    std::cout << "embedded: " << (report.embedded ? "true" : "false") << "\n";
    std::cout << "all_resolved: " << (report.all_resolved ? "true" : "false") << "\n";
    for (const std::string& detail : report.details)
        std::cout << "detail: " << detail << "\n";
    std::cout << "check: " << (report.ok() ? "pass" : "fail") << "\n";
    return report.ok() ? kExitOk : kExitDomain;
}

int cmd_render(const std::string& path, const std::string& format,
               const std::string& out_path) {
    std::string produced;
    if (format == "svg") {
        produced = render_svg(load_diagram(path));
    } else if (format == "obj") {
        produced = export_obj(parse_link3(read_file(path)));
    } else if (format == "lk3") {
        produced = serialize_link3(parse_link3(read_file(path)));
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    if (out_path.empty())
        std::cout << produced;
    else
        write_file(out_path, produced);
    return kExitOk;
}

int cmd_gen(std::uint64_t seed, const GenParams& params, const std::string& builtin,
            const std::string& out_path) {
    Diagram d = [&] {
        if (builtin.empty())
            return random_diagram(seed, params);
        if (builtin == "twist")
            return samples::twist();
        if (builtin == "celtic")
            return samples::celtic();
        if (builtin == "rings")
            return samples::rings();
        throw Error(ErrorCode::SyntaxError, "unknown builtin '" + builtin + "'");
    }();
    const std::string text = serialize_diagram(d);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice knot diagrams: decide and construct 3D lattice lifts"};
    app.require_subcommand(1);

    std::string in_path, out_path, link_path, format = "svg", builtin;
    bool use_oracle = false, trace = false;
    std::uint64_t seed = 0;
    GenParams params;

    auto* validate = app.add_subcommand("validate", "parse and validate a diagram");
    validate->add_option("file", in_path, "diagram file (.lkd)")->required();

    auto* analyze = app.add_subcommand(
        "analyze", "crossing graph, problem crossings and celtic search");
    analyze->add_option("file", in_path, "diagram file (.lkd)")->required();

    auto* lift = app.add_subcommand("lift", "construct a 3D lattice lift");
    lift->add_option("file", in_path, "diagram file (.lkd)")->required();
    lift->add_option("-o,--output", out_path, "write the lift here (.lk3)");
    lift->add_flag("--oracle", use_oracle,
                   "use the constraint-digraph layering instead");
    lift->add_flag("--trace", trace, "per-lift log and per-step verification");

    auto* check = app.add_subcommand("check", "validate a lift against a diagram");
    check->add_option("diagram", in_path, "diagram file (.lkd)")->required();
    check->add_option("link", link_path, "link file (.lk3)")->required();

    auto* render = app.add_subcommand("render", "render a diagram or link");
    render->add_option("file", in_path, "input file")->required();
    render->add_option("--format", format, "svg | obj | lk3");
    render->add_option("-o,--output", out_path, "output file (stdout otherwise)");

    auto* gen = app.add_subcommand("gen", "emit a random or builtin diagram");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--grid", params.grid, "grid side length");
    gen->add_option("--count", params.target_crossings, "crossing count");
    gen->add_option("--components", params.components, "component count");
    gen->add_option("--builtin", builtin, "twist | celtic | rings");
    gen->add_option("-o,--output", out_path, "output file (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;  // --help and --version exit 0
    }

    try {
        if (validate->parsed())
            return cmd_validate(in_path);
        if (analyze->parsed())
            return cmd_analyze(in_path);
        if (lift->parsed())
            return cmd_lift(in_path, out_path, use_oracle, trace);
        if (check->parsed())
            return cmd_check(in_path, link_path);
        if (render->parsed())
            return cmd_render(in_path, format, out_path);
        if (gen->parsed())
            return cmd_gen(seed, params, builtin, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what()
                  << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

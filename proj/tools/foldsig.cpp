#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "foldsig/generators.hpp"
#include "foldsig/json_io.hpp"
#include "foldsig/svg.hpp"
#include "foldsig/wronski.hpp"

using namespace foldsig;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_io = 2;
constexpr int exit_non_generic = 3;

int enumeration_limit() {
    if (const char* env = std::getenv("FOLDSIG_LIMIT")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_enumeration_point_limit;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
    out << text;
}

Triangulation load_triangulation(const std::string& path, bool strict) {
    std::vector<std::string> warnings;
    Triangulation t = read_triangulation_file(path, strict, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return t;
}

int cmd_check(const std::string& path, bool strict, bool as_json) {
    Triangulation t = load_triangulation(path, strict);
    ValidationReport v = validate(t);
    bool foldable = false;
    std::vector<int> odd_cycle;
    if (v.is_valid) {
        FoldabilityResult f = is_foldable(t);
        foldable = f.foldable;
        odd_cycle = f.odd_cycle_witness;
    }
    if (as_json) {
        std::cout << "{\"valid\": " << (v.is_valid ? "true" : "false")
                  << ", \"dense\": " << (v.is_dense ? "true" : "false")
                  << ", \"unimodular\": " << (v.is_unimodular ? "true" : "false")
                  << ", \"foldable\": " << (foldable ? "true" : "false") << "}\n";
    } else {
        std::cout << "points: " << t.points.size() << " triangles: " << t.triangles.size() << "\n";
        std::cout << "valid: " << (v.is_valid ? "yes" : "no") << "\n";
        for (const auto& viol : v.violations) std::cout << "  violation: " << viol << "\n";
        std::cout << "dense: " << (v.is_dense ? "yes" : "no") << "\n";
        std::cout << "unimodular: " << (v.is_unimodular ? "yes" : "no") << "\n";
        std::cout << "foldable: " << (foldable ? "yes" : "no") << "\n";
        if (!foldable && !odd_cycle.empty()) {
            std::cout << "  odd dual cycle:";
            for (int k : odd_cycle) std::cout << " " << k;
            std::cout << "\n";
        }
    }
    return (v.is_valid && foldable) ? exit_ok : exit_math;
}

int cmd_signature(const std::string& path, bool strict, bool as_json) {
    Triangulation t = load_triangulation(path, strict);
    std::int64_t sig_tri = signature_via_triangles(t);
    BoundaryProfile prof = boundary_profile(t);
    std::int64_t sig_x = signature_via_boundary(t, SegmentType::X);
    std::int64_t sig_y = signature_via_boundary(t, SegmentType::Y);
    std::int64_t sig_xy = signature_via_boundary(t, SegmentType::XY);
    bool agree = (sig_tri == sig_x && sig_tri == sig_y && sig_tri == sig_xy);

    if (as_json) {
        std::cout << "{\"signature\": " << sig_tri << ", \"via_boundary\": {\"X\": " << sig_x
                  << ", \"Y\": " << sig_y << ", \"XY\": " << sig_xy << "}"
                  << ", \"profile\": {\"X\": [" << prof.black[0] << ", " << prof.white[0]
                  << "], \"Y\": [" << prof.black[1] << ", " << prof.white[1] << "], \"XY\": ["
                  << prof.black[2] << ", " << prof.white[2] << "]}"
                  << ", \"methods_agree\": " << (agree ? "true" : "false") << "}\n";
    } else {
        std::cout << "signature (triangles): " << sig_tri << "\n";
        std::cout << "signature (boundary): X " << sig_x << ", Y " << sig_y << ", XY " << sig_xy
                  << "\n";
        const char* names[3] = {"X", "Y", "XY"};
        for (int i = 0; i < 3; ++i) {
            std::cout << "boundary " << names[i] << ": " << prof.black[i] << " black / "
                      << prof.white[i] << " white\n";
        }
        std::cout << "methods agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? exit_ok : exit_math;
}

int cmd_bound(const std::string& path, bool as_json) {
    LatticePolygon poly = read_polygon_file(path);
    Census census = lattice_census(poly);
    std::int64_t bound = signature_upper_bound(poly);
    if (as_json) {
        std::cout << "{\"twice_area\": " << census.pick.twice_area
                  << ", \"interior\": " << census.pick.interior_count
                  << ", \"boundary\": " << census.pick.boundary_count << ", \"bound\": " << bound
                  << "}\n";
    } else {
        std::cout << "twice area: " << census.pick.twice_area << "\n";
        std::cout << "interior lattice points: " << census.pick.interior_count << "\n";
        std::cout << "boundary lattice points: " << census.pick.boundary_count << "\n";
        std::cout << "signature upper bound: " << bound << "\n";
    }
    return exit_ok;
}

int cmd_enumerate(const std::string& path, bool foldable_only, int limit, bool as_json) {
    LatticePolygon poly = read_polygon_file(path);
    long index = 0;
    EnumerationReport rep = enumerate_dense_triangulations(
        poly, foldable_only,
        [&](const Triangulation& t) {
            if (as_json) {
                std::string j = triangulation_to_json(t);
                // compact: one line per triangulation
                std::string line;
                for (char c : j) {
                    if (c != '\n' && c != ' ') line += c;
                }
                std::cout << line << "\n";
            } else {
                FoldabilityResult f = is_foldable(t);
                std::cout << "#" << index << " triangles=" << t.triangles.size()
                          << " foldable=" << (f.foldable ? "yes" : "no");
                if (f.foldable) std::cout << " signature=" << signature_via_triangles(t);
                std::cout << "\n";
            }
            ++index;
        },
        limit);
    if (as_json) {
        std::cout << enumeration_report_to_json(rep) << "\n";
    } else {
        std::cout << "dense triangulations: " << rep.total_dense_count << "\n";
        std::cout << "foldable: " << rep.foldable_count << "\n";
        std::cout << "signature histogram:";
        for (const auto& [sig, count] : rep.signature_histogram) {
            std::cout << " " << sig << ":" << count;
        }
        std::cout << "\n";
    }
    return exit_ok;
}

int cmd_wronski_build(const std::string& path, const std::string& gamma_csv, bool strict) {
    Triangulation t = load_triangulation(path, strict);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : gamma_csv) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) {
        throw Error(ErrorKind::Parse, "--gamma expects three comma-separated rationals");
    }
    WronskiCoefficients gamma{parse_rational(parts[0]), parse_rational(parts[1]),
                              parse_rational(parts[2])};
    SparseBivariatePolynomial p = build_wronski(t, gamma);
    std::cout << "{\"terms\": [";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << "[" << e.first << ", " << e.second << ", \"" << rational_to_string(c)
                  << "\"]";
    }
    std::cout << "], \"text\": \"" << p.to_string() << "\"}\n";
    return exit_ok;
}

int cmd_wronski_solve(const std::string& path) {
    WronskiInput in = read_wronski_file(path);
    SolveReport rep = solve_system(make_system(in.triangulation, in.gamma_a, in.gamma_b));
    std::cout << solve_report_to_json(rep) << "\n";
    return rep.generic ? exit_ok : exit_non_generic;
}

int cmd_render(const std::string& path, const std::string& out, bool labels, bool strict) {
    Triangulation t = load_triangulation(path, strict);
    RenderOptions opt;
    opt.edge_labels = labels;
    write_output(render_svg(t, opt), out);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signatures of dense foldable lattice triangulations and Wronski systems"};
    app.require_subcommand(1);

    std::string tri_path, poly_path, out_path, gamma_csv, system_path;
    bool strict = false, as_json = false, labels = false, foldable_only = false, alternating = false;
    int gen_n = 0, gen_m = 0;
    int limit = enumeration_limit();

    auto* check = app.add_subcommand("check", "validate a triangulation and test foldability");
    check->add_option("file", tri_path, "triangulation JSON")->required();
    check->add_flag("--strict", strict, "reject clockwise triangles instead of reorienting");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* signature = app.add_subcommand("signature", "signature by both methods plus profile");
    signature->add_option("file", tri_path, "triangulation JSON")->required();
    signature->add_flag("--strict", strict, "reject clockwise triangles instead of reorienting");
    signature->add_flag("--json", as_json, "machine-readable output");

    auto* bound = app.add_subcommand("bound", "Pick census and the signature upper bound");
    bound->add_option("file", poly_path, "polygon JSON")->required();
    bound->add_flag("--json", as_json, "machine-readable output");

    auto* gen = app.add_subcommand("gen", "generate a triangulation");
    gen->require_subcommand(1);
    auto* gen_stair = gen->add_subcommand("staircase", "staircase triangulation of n*conv{0,e1,e2}");
    gen_stair->add_option("n", gen_n, "dilation factor")->required();
    auto* gen_rect = gen->add_subcommand("rectangle", "grid triangulation of [0,m]x[0,n]");
    gen_rect->add_option("m", gen_m, "width")->required();
    gen_rect->add_option("n", gen_n, "height")->required();
    gen_rect->add_flag("--alternating", alternating, "checkerboard diagonal pattern");
    auto* gen_hex = gen->add_subcommand("hexagon-fig1", "the 24-point hexagon fixture");
    for (auto* sub : {gen_stair, gen_rect, gen_hex}) {
        sub->add_option("-o,--output", out_path, "output file (stdout if absent)");
    }

    auto* enumerate = app.add_subcommand("enumerate", "all dense triangulations of a polygon");
    enumerate->add_option("file", poly_path, "polygon JSON")->required();
    enumerate->add_flag("--foldable-only", foldable_only, "emit only foldable members");
    enumerate->add_option("--limit", limit, "lattice point limit");
    enumerate->add_flag("--json", as_json, "stream JSON lines plus a JSON report");

    auto* wronski = app.add_subcommand("wronski", "Wronski polynomials and systems");
    wronski->require_subcommand(1);
    auto* wbuild = wronski->add_subcommand("build", "build a Wronski polynomial");
    wbuild->add_option("file", tri_path, "triangulation JSON")->required();
    wbuild->add_option("--gamma", gamma_csv, "three rationals a,b,c")->required();
    wbuild->add_flag("--strict", strict, "reject clockwise triangles instead of reorienting");
    auto* wsolve = wronski->add_subcommand("solve", "solve a Wronski system");
    wsolve->add_option("file", system_path, "system JSON")->required();

    auto* render = app.add_subcommand("render", "render a triangulation to SVG");
    render->add_option("file", tri_path, "triangulation JSON")->required();
    render->add_option("-o,--output", out_path, "output SVG file (stdout if absent)");
    render->add_flag("--labels", labels, "boundary segment-type labels");
    render->add_flag("--strict", strict, "reject clockwise triangles instead of reorienting");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return exit_ok;
        }
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return exit_io;
    }

    try {
        if (*check) return cmd_check(tri_path, strict, as_json);
        if (*signature) return cmd_signature(tri_path, strict, as_json);
        if (*bound) return cmd_bound(poly_path, as_json);
        if (*gen) {
            Triangulation t;
            if (*gen_stair) t = staircase(gen_n);
            if (*gen_rect) {
                t = rectangle_grid(gen_m, gen_n,
                                   alternating ? DiagonalPattern::Alternating
                                               : DiagonalPattern::Uniform);
            }
            if (*gen_hex) t = hexagon_fig1();
            write_output(triangulation_to_json(t) + "\n", out_path);
            return exit_ok;
        }
        if (*enumerate) return cmd_enumerate(poly_path, foldable_only, limit, as_json);
        if (*wronski) {
            if (*wbuild) return cmd_wronski_build(tri_path, gamma_csv, strict);
            if (*wsolve) return cmd_wronski_solve(system_path);
        }
        if (*render) return cmd_render(tri_path, out_path, labels, strict);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Parse: return exit_io;
            case ErrorKind::NonGeneric: return exit_non_generic;
            default: return exit_math;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    }
    return exit_io;
}

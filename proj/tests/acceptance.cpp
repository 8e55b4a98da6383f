// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "foldsig/generators.hpp"
#include "foldsig/json_io.hpp"
#include "foldsig/svg.hpp"
#include "foldsig/wronski.hpp"

using namespace foldsig;

namespace {

std::string g_cli_path;
std::string g_fixture_dir = FOLDSIG_FIXTURE_DIR;
int g_failures = 0;

struct Criterion {
    int number;
    const char* label;
    double time_budget_s;  // 0 = untimed
};

void run_criterion(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_budget_s > 0 && elapsed >= c.time_budget_s) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += "over time budget";
    }
    if (!ok) ++g_failures;
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.label,
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

LatticePolygon poly_of(std::vector<LatticePoint> pts) { return hull_of(pts); }

// ---- criteria 1 & 2: exhaustive triangle sweeps over {0..4}^2 -------------

bool odd_area_edge_sweep(std::string& detail) {
    std::vector<LatticePoint> grid;
    for (Coord x = 0; x <= 4; ++x)
        for (Coord y = 0; y <= 4; ++y) grid.push_back({x, y});
    long odd = 0, exceptions = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t j = i + 1; j < grid.size(); ++j) {
            for (size_t k = j + 1; k < grid.size(); ++k) {
                LatticeTriangle t{grid[i], grid[j], grid[k]};
                std::int64_t area = normalized_area(t);
                if (area == 0 || area % 2 == 0) continue;
                ++odd;
                if (!triangle_edge_profile(t).lemma1_holds) ++exceptions;
            }
        }
    }
    detail = std::to_string(odd) + " odd-area triangles, " + std::to_string(exceptions) +
             " exceptions";
    return exceptions == 0 && odd > 0;
}

bool parity_sweep(std::string& detail) {
    std::vector<LatticePoint> grid;
    for (Coord x = 0; x <= 4; ++x)
        for (Coord y = 0; y <= 4; ++y) grid.push_back({x, y});
    long total = 0, exceptions = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        for (size_t j = i + 1; j < grid.size(); ++j) {
            for (size_t k = j + 1; k < grid.size(); ++k) {
                LatticeTriangle t{grid[i], grid[j], grid[k]};
                if (normalized_area(t) == 0) continue;
                ++total;
                if (!triangle_edge_profile(t).parity_ok) ++exceptions;
            }
        }
    }
    detail = std::to_string(total) + " triangles, " + std::to_string(exceptions) + " exceptions";
    return exceptions == 0 && total > 0;
}

// ---- criterion 3: signature equality over exhaustive enumerations ----------

bool signature_equality_oracle(std::string& detail) {
    struct Run {
        LatticePolygon poly;
        std::int64_t expected_total;  // -1 = no expectation
    };
    std::vector<Run> runs{
        {poly_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2},
        {poly_of({{0, 0}, {2, 0}, {2, 1}, {0, 1}}), -1},
        {poly_of({{0, 0}, {1, 0}, {1, 2}, {0, 2}}), -1},
        {poly_of({{0, 0}, {2, 0}, {0, 2}}), -1},
        {poly_of({{0, 0}, {2, 0}, {2, 1}, {0, 1}}), -1},
    };
    long checked = 0, mismatches = 0;
    for (const auto& run : runs) {
        EnumerationReport rep = enumerate_dense_triangulations(
            run.poly, true, [&](const Triangulation& t) {
                std::int64_t sig = signature_via_triangles(t);
                for (SegmentType tau : {SegmentType::X, SegmentType::Y, SegmentType::XY}) {
                    if (signature_via_boundary(t, tau) != sig) ++mismatches;
                }
                ++checked;
            });
        if (run.expected_total >= 0 && rep.total_dense_count != run.expected_total) {
            detail = "unit square count " + std::to_string(rep.total_dense_count) + " != 2";
            return false;
        }
    }
    detail = std::to_string(checked) + " foldable triangulations, " + std::to_string(mismatches) +
             " mismatches";
    return mismatches == 0 && checked > 0;
}

// ---- criterion 4: the hexagon fixture --------------------------------------

bool hexagon_fixture(std::string& detail) {
    Triangulation hex = hexagon_fig1();
    if (hex.points.size() != 24 || hex.triangles.size() != 33) {
        detail = "counts wrong";
        return false;
    }
    TwoColoring c = two_coloring(hex);
    if (c.black_count != 17 || c.white_count != 16) {
        detail = "coloring split " + std::to_string(c.black_count) + "/" +
                 std::to_string(c.white_count);
        return false;
    }
    if (signature_via_triangles(hex) != 1) {
        detail = "triangle signature != 1";
        return false;
    }
    for (SegmentType tau : {SegmentType::X, SegmentType::Y, SegmentType::XY}) {
        if (signature_via_boundary(hex, tau) != 1) {
            detail = "boundary signature != 1";
            return false;
        }
    }
    BoundaryProfile p = boundary_profile(hex);
    bool profile_ok = p.black[0] == 3 && p.white[0] == 2 && p.black[1] == 3 && p.white[1] == 2 &&
                      p.black[2] == 2 && p.white[2] == 1;
    if (!profile_ok) {
        detail = "boundary profile mismatch";
        return false;
    }
    detail = "24 points, 33 triangles, split 17/16, profile X:3/2 Y:3/2 XY:2/1";
    return true;
}

// ---- criterion 5: staircase signatures and tight bound ---------------------

bool staircase_family(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        Triangulation t = staircase(n);
        if (signature_via_triangles(t) != n) {
            detail = "triangle signature != n at n=" + std::to_string(n);
            return false;
        }
        for (SegmentType tau : {SegmentType::X, SegmentType::Y, SegmentType::XY}) {
            if (signature_via_boundary(t, tau) != n) {
                detail = "boundary signature != n at n=" + std::to_string(n);
                return false;
            }
        }
        BoundaryProfile p = boundary_profile(t);
        for (int ty = 0; ty < 3; ++ty) {
            if (p.black[ty] + p.white[ty] != n || (p.black[ty] != 0 && p.white[ty] != 0)) {
                detail = "boundary profile not n same-colored edges at n=" + std::to_string(n);
                return false;
            }
        }
        Coord cn = n;
        if (signature_upper_bound(poly_of({{0, 0}, {cn, 0}, {0, cn}})) != n) {
            detail = "upper bound not tight at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "signature(staircase n) = n = bound for n = 1..6";
    return true;
}

// ---- criterion 6: rectangles have vanishing signature ----------------------

bool rectangle_vanishing(std::string& detail) {
    long checked = 0;
    auto check_one = [&](const Triangulation& t) -> bool {
        if (!is_foldable(t).foldable) return true;
        ++checked;
        if (signature_via_triangles(t) != 0) return false;
        BoundaryProfile p = boundary_profile(t);
        return p.black[static_cast<int>(SegmentType::XY)] == 0 &&
               p.white[static_cast<int>(SegmentType::XY)] == 0;
    };
    bool ok = true;
    for (const auto& poly :
         {poly_of({{0, 0}, {2, 0}, {2, 1}, {0, 1}}), poly_of({{0, 0}, {1, 0}, {1, 2}, {0, 2}}),
          poly_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}})}) {
        enumerate_dense_triangulations(poly, true, [&](const Triangulation& t) {
            if (!check_one(t)) ok = false;
        });
    }
    for (int m = 1; m <= 4 && ok; ++m) {
        for (int n = 1; n <= 4 && ok; ++n) {
            if (!check_one(rectangle_grid(m, n, DiagonalPattern::Uniform))) ok = false;
        }
    }
    detail = std::to_string(checked) + " foldable rectangle triangulations, signature 0, no XY";
    return ok && checked > 0;
}

// ---- criterion 7: Pick identity with independent routes --------------------

enum class Where { Outside, Boundary, Inside };

Where classify(const std::vector<LatticePoint>& ccw, LatticePoint q) {
    bool on_edge = false;
    for (size_t i = 0; i < ccw.size(); ++i) {
        LatticePoint a = ccw[i], b = ccw[(i + 1) % ccw.size()];
        long long cr = static_cast<long long>(b.x - a.x) * (q.y - a.y) -
                       static_cast<long long>(b.y - a.y) * (q.x - a.x);
        if (cr < 0) return Where::Outside;
        if (cr == 0) {
            if (q.x < std::min(a.x, b.x) || q.x > std::max(a.x, b.x) ||
                q.y < std::min(a.y, b.y) || q.y > std::max(a.y, b.y)) {
                return Where::Outside;
            }
            on_edge = true;
        }
    }
    return on_edge ? Where::Boundary : Where::Inside;
}

bool pick_identity(std::string& detail) {
    std::mt19937 rng(424242);
    int done = 0, failures = 0;
    while (done < 100) {
        std::vector<LatticePoint> pts;
        int n = 3 + static_cast<int>(rng() % 10);
        for (int i = 0; i < n; ++i) {
            pts.push_back({static_cast<Coord>(rng() % 9), static_cast<Coord>(rng() % 9)});
        }
        LatticePolygon h;
        try {
            h = hull_of(pts);
        } catch (const Error&) {
            continue;  // collinear draw
        }
        ++done;
        Census c = lattice_census(h);
        std::int64_t boundary = 0, interior = 0;
        for (Coord x = 0; x <= 8; ++x) {
            for (Coord y = 0; y <= 8; ++y) {
                Where w = classify(h.vertices, {x, y});
                if (w == Where::Boundary) ++boundary;
                if (w == Where::Inside) ++interior;
            }
        }
        bool ok = boundary == c.pick.boundary_count && interior == c.pick.interior_count &&
                  c.pick.twice_area == 2 * interior + boundary - 2;
        if (!ok) ++failures;
    }
    detail = "100 hulls, " + std::to_string(failures) + " identity failures";
    return failures == 0;
}

// ---- criterion 8: the worked Wronski system --------------------------------

// independent oracle: damped Newton on the two conics from a grid of starts
std::vector<std::array<double, 2>> newton_conic_oracle() {
    auto f = [](double x, double y) { return (1 + x * y) - (x + y * y) + 2 * (x * x + y); };
    auto g = [](double x, double y) { return (1 + x * y) + 3 * (x + y * y) + 5 * (x * x + y); };
    auto fx = [](double x, double y) { return y - 1 + 4 * x; };
    auto fy = [](double x, double y) { return x - 2 * y + 2; };
    auto gx = [](double x, double y) { return y + 3 + 10 * x; };
    auto gy = [](double x, double y) { return x + 6 * y + 5; };

    std::vector<std::array<double, 2>> found;
    for (double x0 = -3.0; x0 <= 3.01; x0 += 0.25) {
        for (double y0 = -3.0; y0 <= 3.01; y0 += 0.25) {
            double x = x0, y = y0;
            bool converged = false;
            for (int it = 0; it < 80; ++it) {
                double a = fx(x, y), b = fy(x, y), c = gx(x, y), d = gy(x, y);
                double det = a * d - b * c;
                if (std::fabs(det) < 1e-14) break;
                double rhs1 = -f(x, y), rhs2 = -g(x, y);
                double dx = (rhs1 * d - b * rhs2) / det;
                double dy = (a * rhs2 - rhs1 * c) / det;
                x += dx;
                y += dy;
                if (std::fabs(dx) + std::fabs(dy) < 1e-15) {
                    converged = std::fabs(f(x, y)) < 1e-12 && std::fabs(g(x, y)) < 1e-12;
                    break;
                }
            }
            if (!converged) continue;
            bool fresh = true;
            for (const auto& s : found) {
                if (std::fabs(s[0] - x) < 1e-7 && std::fabs(s[1] - y) < 1e-7) fresh = false;
            }
            if (fresh) found.push_back({x, y});
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

bool wronski_fixture(std::string& detail) {
    WronskiInput in = read_wronski_file(g_fixture_dir + "/eqwronski.json");
    WronskiSystem sys = make_system(in.triangulation, in.gamma_a, in.gamma_b);
    SolveReport rep = solve_system(sys);

    if (rep.torus_solution_count != 4 || !rep.generic) {
        detail = "torus count " + std::to_string(rep.torus_solution_count) + ", generic " +
                 (rep.generic ? "true" : "false");
        return false;
    }
    if (rep.real_count != 2) {
        detail = "real count " + std::to_string(rep.real_count) + " != 2";
        return false;
    }
    std::int64_t sig = signature_via_triangles(in.triangulation);
    if (sig != 2 || rep.real_count < sig) {
        detail = "signature bound violated";
        return false;
    }

    std::vector<std::array<double, 2>> oracle = newton_conic_oracle();
    if (oracle.size() != 2) {
        detail = "numerical oracle found " + std::to_string(oracle.size()) + " solutions";
        return false;
    }
    UniPoly rx = eliminate(sys.f, sys.g, Eliminate::Y);
    UniPoly ry = eliminate(sys.f, sys.g, Eliminate::X);
    const Rat width(1, 1 << 28);
    for (size_t i = 0; i < 2; ++i) {
        IsolatingInterval bx = refine_root(rx, rep.real_solutions[i].x, width);
        IsolatingInterval by = refine_root(ry, rep.real_solutions[i].y, width);
        Rat mx = bx.midpoint(), my = by.midpoint();
        if (std::fabs(mx.get_d() - oracle[i][0]) > 1e-6 ||
            std::fabs(my.get_d() - oracle[i][1]) > 1e-6) {
            detail = "box " + std::to_string(i) + " disagrees with the numerical oracle";
            return false;
        }
    }
    detail = "torus 4, real 2, generic, boxes match the Newton oracle to 1e-6";
    return true;
}

// ---- criterion 9: seeded random sampling on the staircase ------------------

bool wronski_sampling(std::string& detail) {
    Triangulation st2 = staircase(2);
    std::mt19937 rng(20120808);
    int generic_count = 0, non_generic = 0, violations = 0;
    for (int i = 0; i < 100; ++i) {
        auto [a, b] = random_bound_pair(rng);
        SolveReport rep = solve_system(make_system(st2, a, b));
        if (!rep.generic) {
            ++non_generic;
            continue;
        }
        ++generic_count;
        if (rep.torus_solution_count != 4 || rep.real_count < 2) ++violations;
    }
    detail = std::to_string(generic_count) + " generic, " + std::to_string(non_generic) +
             " non-generic, " + std::to_string(violations) + " bound violations";
    return violations == 0 && non_generic <= 10 && generic_count + non_generic == 100;
}

// ---- criterion 10: CLI pipeline ---------------------------------------------

int run_cmd(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool cli_roundtrip(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no --cli path given";
        return false;
    }
    char tmpl[] = "/tmp/foldsig_accept_XXXXXX";
    char* dir_c = mkdtemp(tmpl);
    if (!dir_c) {
        detail = "mkdtemp failed";
        return false;
    }
    std::string dir = dir_c;
    const std::string cli = "'" + g_cli_path + "'";
    std::vector<std::string> gens{"gen staircase 3", "gen staircase 6", "gen rectangle 3 2",
                                  "gen rectangle 2 2 --alternating", "gen hexagon-fig1"};
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string tri = dir + "/t" + std::to_string(i) + ".json";
        std::string svg1 = dir + "/r" + std::to_string(i) + "a.svg";
        std::string svg2 = dir + "/r" + std::to_string(i) + "b.svg";
        if (run_cmd(cli + " " + gens[i] + " -o " + tri) != 0) {
            detail = "gen failed: " + gens[i];
            return false;
        }
        if (run_cmd(cli + " check " + tri + " > /dev/null") != 0) {
            detail = "check failed: " + gens[i];
            return false;
        }
        if (run_cmd(cli + " signature " + tri + " > /dev/null") != 0) {
            detail = "signature failed: " + gens[i];
            return false;
        }
        if (run_cmd(cli + " render " + tri + " --labels -o " + svg1) != 0 ||
            run_cmd(cli + " render " + tri + " --labels -o " + svg2) != 0) {
            detail = "render failed: " + gens[i];
            return false;
        }
        std::string a = slurp(svg1), b = slurp(svg2);
        if (a.empty() || a != b) {
            detail = "SVG not byte-identical: " + gens[i];
            return false;
        }
    }
    detail = std::to_string(gens.size()) + " generator pipelines, SVG byte-identical";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
        if (std::string(argv[i]) == "--fixtures") g_fixture_dir = argv[i + 1];
    }
    setenv("FOLDSIG_FIXTURES", g_fixture_dir.c_str(), 1);

    run_criterion({1, "odd-area triangles have one edge of each type", 10}, odd_area_edge_sweep);
    run_criterion({2, "area parity equals edge-type parity", 0}, parity_sweep);
    run_criterion({3, "boundary and triangle signatures agree on enumerations", 60},
                  signature_equality_oracle);
    run_criterion({4, "hexagon fixture counts and boundary profile", 0}, hexagon_fixture);
    run_criterion({5, "staircase signatures and tight bound", 0}, staircase_family);
    run_criterion({6, "rectangle triangulations: signature 0, no XY edges", 0},
                  rectangle_vanishing);
    run_criterion({7, "Pick identity on 100 seeded hulls", 0}, pick_identity);
    run_criterion({8, "Wronski fixture counts and box accuracy", 5}, wronski_fixture);
    run_criterion({9, "Wronski sampling on the staircase", 60}, wronski_sampling);
    run_criterion({10, "CLI gen/check/signature/render round-trip", 0}, cli_roundtrip);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", g_failures);
    }
    return g_failures;
}

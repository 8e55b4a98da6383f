#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "foldsig/generators.hpp"
#include "foldsig/json_io.hpp"
#include "foldsig/wronski.hpp"

using namespace foldsig;

namespace {

UniPoly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

SparseBivariatePolynomial biv(std::initializer_list<std::tuple<int, int, long>> terms) {
    SparseBivariatePolynomial p;
    for (const auto& [i, j, c] : terms) p.set_term(i, j, Rat(c));
    return p;
}

// the two fixture polynomials, written out term by term
SparseBivariatePolynomial eqwronski_f() {
    return biv({{0, 0, 1}, {1, 1, 1}, {1, 0, -1}, {0, 2, -1}, {2, 0, 2}, {0, 1, 2}});
}
SparseBivariatePolynomial eqwronski_g() {
    return biv({{0, 0, 1}, {1, 1, 1}, {1, 0, 3}, {0, 2, 3}, {2, 0, 5}, {0, 1, 5}});
}

double midpoint_double(const IsolatingInterval& iv) {
    Rat mid = (iv.lo + iv.hi) / 2;
    return mid.get_d();
}

}  // namespace

TEST_CASE("build_wronski reproduces the explicit fixture system") {
    Triangulation st2 = staircase(2);
    SparseBivariatePolynomial f = build_wronski(st2, {Rat(1), Rat(2), Rat(-1)});
    CHECK(f == eqwronski_f());
    SparseBivariatePolynomial g = build_wronski(st2, {Rat(1), Rat(5), Rat(3)});
    CHECK(g == eqwronski_g());
}

TEST_CASE("build_wronski with equal coefficients is coloring independent") {
    Triangulation hex = hexagon_fig1();
    SparseBivariatePolynomial p = build_wronski(hex, {Rat(1), Rat(1), Rat(1)});
    CHECK(p.terms().size() == hex.points.size());
    for (const auto& [e, c] : p.terms()) CHECK(c == 1);
}

TEST_CASE("build_wronski coefficient multiset on the unit square") {
    Triangulation sq = rectangle_grid(1, 1, DiagonalPattern::Uniform);
    SparseBivariatePolynomial p = build_wronski(sq, {Rat(1), Rat(2), Rat(3)});
    std::multiset<long> got;
    for (const auto& [e, c] : p.terms()) got.insert(c.get_num().get_si());
    CHECK(got == std::multiset<long>{1, 2, 2, 3});
}

TEST_CASE("build_wronski validates its input") {
    Triangulation st2 = staircase(2);
    CHECK_THROWS_AS(build_wronski(st2, {Rat(0), Rat(1), Rat(1)}), Error);

    Triangulation coarse;
    coarse.points = {{0, 0}, {2, 0}, {0, 2}};
    coarse.triangles = {{0, 1, 2}};
    CHECK_THROWS_AS(build_wronski(coarse, {Rat(1), Rat(1), Rat(1)}), Error);

    Triangulation shifted = translated(st2, {-1, 0});
    CHECK_THROWS_AS(build_wronski(shifted, {Rat(1), Rat(1), Rat(1)}), Error);
}

TEST_CASE("newton polygon of a Wronski polynomial is the input hull") {
    std::mt19937 rng(555);
    std::vector<Triangulation> pool{staircase(2), staircase(3),
                                    rectangle_grid(2, 1, DiagonalPattern::Uniform),
                                    hexagon_fig1()};
    for (const auto& t : pool) {
        for (int iter = 0; iter < 5; ++iter) {
            WronskiCoefficients gamma = random_gamma(rng);
            SparseBivariatePolynomial p = build_wronski(t, gamma);
            CHECK(p.newton_polygon().vertices == hull_of(t.points).vertices);
        }
    }
}

TEST_CASE("build_wronski is equivariant under relabeling") {
    Triangulation hex = hexagon_fig1();
    Rat g[4] = {Rat(0), Rat(3), Rat(-5), Rat(7)};
    SparseBivariatePolynomial base = build_wronski(hex, {g[1], g[2], g[3]});

    std::array<int, 3> seed{1, 2, 3};
    std::sort(seed.begin(), seed.end());
    do {
        // seed labels permute the classes; permuting gamma in step undoes it
        VertexColoring c = vertex_three_coloring_seeded(hex, seed);
        SparseBivariatePolynomial p;
        for (size_t i = 0; i < hex.points.size(); ++i) {
            // class that seed label k stands for: position of k in the seed
            int cls = 0;
            for (int s = 0; s < 3; ++s) {
                if (seed[s] == c.label[i]) cls = s + 1;
            }
            p.set_term(static_cast<int>(hex.points[i].x), static_cast<int>(hex.points[i].y),
                       g[cls]);
        }
        CHECK(p == base);
    } while (std::next_permutation(seed.begin(), seed.end()));
}

TEST_CASE("kushnirenko number is the normalized area") {
    CHECK(kushnirenko_number(hull_of(std::vector<LatticePoint>{{0, 0}, {2, 0}, {0, 2}})) == 4);
    CHECK(kushnirenko_number(hull_of(std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}})) == 1);
    CHECK(kushnirenko_number(hull_of(hexagon_fig1().points)) == 33);
}

TEST_CASE("eliminate: substitution example") {
    // f = y - x, g = y^2 - x
    SparseBivariatePolynomial f = biv({{0, 1, 1}, {1, 0, -1}});
    SparseBivariatePolynomial g = biv({{0, 2, 1}, {1, 0, -1}});
    UniPoly rx = eliminate(f, g, Eliminate::Y);
    CHECK(rx == from_ints({0, -1, 1}));  // x^2 - x
}

TEST_CASE("eliminate: frozen fixture resultants") {
    UniPoly rx = eliminate(eqwronski_f(), eqwronski_g(), Eliminate::Y);
    CHECK(rx == from_ints({-17, 109, 176, 49, 133}));
    UniPoly ry = eliminate(eqwronski_f(), eqwronski_g(), Eliminate::X);
    CHECK(ry == from_ints({53, 109, -132, -35, 133}));
    CHECK(count_real_roots(rx).count == 2);
}

TEST_CASE("eliminate rejects a shared component") {
    SparseBivariatePolynomial f = eqwronski_f();
    CHECK_THROWS_AS(eliminate(f, f, Eliminate::Y), Error);
}

TEST_CASE("solve_system on the fixture: counts, genericity, box accuracy") {
    WronskiSystem sys;
    sys.triangulation = staircase(2);
    sys.f = eqwronski_f();
    sys.g = eqwronski_g();
    SolveReport rep = solve_system(sys);

    CHECK(rep.kushnirenko_number == 4);
    CHECK(rep.torus_solution_count == 4);
    CHECK(rep.real_count == 2);
    CHECK(rep.generic);
    CHECK_FALSE(rep.axis_solutions);
    REQUIRE(rep.real_solutions.size() == 2);

    // frozen from an independent symbolic run
    const double want[2][2] = {{-0.66524663841895397438, -1.06344522002347079035},
                               {0.12816466542114539399, -0.36313836090715116955}};
    for (int i = 0; i < 2; ++i) {
        SolutionBox box = rep.real_solutions[i];
        box.x = refine_root(eliminate(sys.f, sys.g, Eliminate::Y), box.x, Rat(1, 1 << 28));
        box.y = refine_root(eliminate(sys.f, sys.g, Eliminate::X), box.y, Rat(1, 1 << 28));
        CHECK(std::abs(midpoint_double(box.x) - want[i][0]) < 1e-6);
        CHECK(std::abs(midpoint_double(box.y) - want[i][1]) < 1e-6);
    }

    // every box is certified by a sign change of the square-free resultant
    UniPoly sx = squarefree_part(eliminate(sys.f, sys.g, Eliminate::Y));
    UniPoly sy = squarefree_part(eliminate(sys.f, sys.g, Eliminate::X));
    for (const auto& box : rep.real_solutions) {
        if (!box.x.exact_hit) CHECK(sx.sign_at(box.x.lo) * sx.sign_at(box.x.hi) < 0);
        if (!box.y.exact_hit) CHECK(sy.sign_at(box.y.lo) * sy.sign_at(box.y.hi) < 0);
    }
}

TEST_CASE("solve_system flags a degenerate pair") {
    WronskiSystem sys;
    sys.triangulation = staircase(2);
    sys.f = eqwronski_f();
    sys.g = eqwronski_f();
    SolveReport rep = solve_system(sys);
    CHECK_FALSE(rep.generic);
    CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("verify_bound on the fixture coefficients") {
    BoundCheck check = verify_bound(staircase(2), {Rat(1), Rat(2), Rat(-1)},
                                    {Rat(1), Rat(5), Rat(3)});
    CHECK(check.signature == 2);
    CHECK(check.real_count == 2);
    CHECK(check.generic);
    CHECK(check.bound_holds);
}

TEST_CASE("verify_bound on the trivial triangle: two lines meet in one real point") {
    Triangulation trivial;
    trivial.points = {{0, 0}, {0, 1}, {1, 0}};
    trivial.triangles = {{0, 2, 1}};
    REQUIRE(validate(trivial).is_valid);
    CHECK(signature_via_triangles(trivial) == 1);

    std::mt19937 rng(8080);
    int generic_runs = 0;
    for (int iter = 0; iter < 20; ++iter) {
        auto [a, b] = random_bound_pair(rng);
        BoundCheck check = verify_bound(trivial, a, b);
        if (!check.generic) continue;
        ++generic_runs;
        CHECK(check.real_count >= 1);
        CHECK(check.bound_holds);
    }
    CHECK(generic_runs > 10);
}

TEST_CASE("verify_bound is vacuous at signature zero") {
    Triangulation sq = rectangle_grid(1, 1, DiagonalPattern::Uniform);
    std::mt19937 rng(4711);
    for (int iter = 0; iter < 10; ++iter) {
        auto [a, b] = random_bound_pair(rng);
        BoundCheck check = verify_bound(sq, a, b);
        CHECK(check.signature == 0);
        if (check.generic) CHECK(check.bound_holds);
    }
}

TEST_CASE("chamber-restricted sampling satisfies the signature bound on the staircase") {
    Triangulation st2 = staircase(2);
    std::mt19937 rng(161803);
    int generic_count = 0, non_generic = 0;
    for (int iter = 0; iter < 25; ++iter) {
        auto [a, b] = random_bound_pair(rng);
        CHECK(center_in_positive_chamber(a, b));
        BoundCheck check = verify_bound(st2, a, b);
        if (!check.generic) {
            ++non_generic;
            continue;
        }
        ++generic_count;
        CHECK(check.real_count >= 2);
        CHECK(check.bound_holds);
        // simple solutions pair up over the reals
        CHECK(check.real_count % 2 == 0);
        CHECK(check.real_count <= 4);
    }
    CHECK(generic_count >= 20);
    CHECK(non_generic <= 5);
}

TEST_CASE("solve_system on the hexagon: origin excluded, torus count reached") {
    // the hexagon misses the origin, so (0,0) is a common root of every
    // coefficient choice; it must be reported and left out of the torus count
    Triangulation hex = hexagon_fig1();
    WronskiSystem sys = make_system(hex, {Rat(2), Rat(1), Rat(1)}, {Rat(1), Rat(3), Rat(2)});
    SolveReport rep = solve_system(sys);
    CHECK(rep.kushnirenko_number == 33);
    CHECK(rep.torus_solution_count == 33);
    CHECK(rep.generic);
    CHECK(rep.axis_solutions);
    CHECK(rep.real_count == 3);  // cross-checked against a symbolic oracle
    CHECK(rep.real_count % 2 == rep.torus_solution_count % 2);
    // oracle x-coordinates: -1.6886028954904960, -1.6425117504476750, -0.8897792397921800
    const double want[3] = {-1.6886028954904960, -1.6425117504476750, -0.8897792397921800};
    for (int i = 0; i < 3; ++i) {
        const auto& bx = rep.real_solutions[i].x;
        CHECK(bx.lo.get_d() <= want[i] + 1e-9);
        CHECK(want[i] - 1e-9 <= bx.hi.get_d());
    }
}

TEST_CASE("random gamma components stay in range") {
    std::mt19937 rng(1);
    for (int iter = 0; iter < 200; ++iter) {
        WronskiCoefficients g = random_gamma(rng);
        for (const Rat& c : {g.gamma1, g.gamma2, g.gamma3}) {
            CHECK(c.get_den() == 1);
            CHECK(abs(c) >= 1);
            CHECK(abs(c) <= 9);
        }
    }
}

TEST_CASE("interval evaluation encloses point evaluation") {
    std::mt19937 rng(907);
    SparseBivariatePolynomial f = eqwronski_f();
    for (int iter = 0; iter < 100; ++iter) {
        Rat x(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 8));
        Rat y(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 8));
        Rat w(1, 1 + static_cast<long>(rng() % 16));
        RatInterval ix{x - w, x + w}, iy{y - w, y + w};
        RatInterval img = f.eval_interval(ix, iy);
        Rat v = f.eval(x, y);
        CHECK(img.lo <= v);
        CHECK(v <= img.hi);
    }
}

#include "foldsig/wronski.hpp"

#include <algorithm>

namespace foldsig {

SparseBivariatePolynomial::SparseBivariatePolynomial(std::map<Exponent, Rat> terms)
    : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.first < 0 || it->first.second < 0) {
            throw Error(ErrorKind::InvalidInput, "bivariate polynomial: negative exponent");
        }
        it = (sgn(it->second) == 0) ? terms_.erase(it) : std::next(it);
    }
}

void SparseBivariatePolynomial::set_term(int i, int j, Rat coeff) {
    if (i < 0 || j < 0) throw Error(ErrorKind::InvalidInput, "set_term: negative exponent");
    if (sgn(coeff) == 0) {
        terms_.erase({i, j});
    } else {
        terms_[{i, j}] = std::move(coeff);
    }
}

int SparseBivariatePolynomial::degree_in_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int SparseBivariatePolynomial::degree_in_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

Rat SparseBivariatePolynomial::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < e.first; ++i) term *= x;
        for (int j = 0; j < e.second; ++j) term *= y;
        acc += term;
    }
    return acc;
}

RatInterval SparseBivariatePolynomial::eval_interval(const RatInterval& x,
                                                     const RatInterval& y) const {
    RatInterval acc{Rat(0), Rat(0)};
    for (const auto& [e, c] : terms_) {
        RatInterval term = interval_mul(interval_pow(x, e.first), interval_pow(y, e.second));
        acc = interval_add(acc, interval_scale(c, term));
    }
    return acc;
}

std::vector<UniPoly> SparseBivariatePolynomial::coefficients_in_y() const {
    std::vector<std::vector<Rat>> rows(degree_in_y() + 1);
    for (const auto& [e, c] : terms_) {
        auto& row = rows[e.second];
        if (static_cast<int>(row.size()) <= e.first) row.resize(e.first + 1, Rat(0));
        row[e.first] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.emplace_back(std::move(row));
    return out;
}

std::vector<UniPoly> SparseBivariatePolynomial::coefficients_in_x() const {
    std::vector<std::vector<Rat>> rows(degree_in_x() + 1);
    for (const auto& [e, c] : terms_) {
        auto& row = rows[e.first];
        if (static_cast<int>(row.size()) <= e.second) row.resize(e.second + 1, Rat(0));
        row[e.second] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.emplace_back(std::move(row));
    return out;
}

UniPoly SparseBivariatePolynomial::restrict_y_to_zero() const {
    std::vector<Rat> c;
    for (const auto& [e, coeff] : terms_) {
        if (e.second != 0) continue;
        if (static_cast<int>(c.size()) <= e.first) c.resize(e.first + 1, Rat(0));
        c[e.first] = coeff;
    }
    return UniPoly(std::move(c));
}

UniPoly SparseBivariatePolynomial::restrict_x_to_zero() const {
    std::vector<Rat> c;
    for (const auto& [e, coeff] : terms_) {
        if (e.first != 0) continue;
        if (static_cast<int>(c.size()) <= e.second) c.resize(e.second + 1, Rat(0));
        c[e.second] = coeff;
    }
    return UniPoly(std::move(c));
}

LatticePolygon SparseBivariatePolynomial::newton_polygon() const {
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : terms_) pts.push_back({e.first, e.second});
    return hull_of(pts);
}

std::string SparseBivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) out += "-";
        Rat a = abs(c);
        bool unit = (a == 1) && (e.first > 0 || e.second > 0);
        if (!unit) out += rational_to_string(a);
        if (e.first > 0) out += "x" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) out += "y" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return out;
}

SparseBivariatePolynomial build_wronski(const Triangulation& t,
                                        const WronskiCoefficients& gamma) {
    if (sgn(gamma.gamma1) == 0 || sgn(gamma.gamma2) == 0 || sgn(gamma.gamma3) == 0) {
        throw Error(ErrorKind::InvalidInput, "build_wronski: gamma components must be nonzero");
    }
    ValidationReport v = validate(t);
    if (!v.is_valid) throw Error(ErrorKind::InvalidInput, "build_wronski: invalid triangulation");
    if (!v.is_dense) throw Error(ErrorKind::Density, "build_wronski: triangulation must be dense");
    for (const auto& p : t.points) {
        if (p.x < 0 || p.y < 0) {
            throw Error(ErrorKind::InvalidInput,
                        "build_wronski: negative coordinate at " + to_string(p) +
                            "; translate the triangulation first");
        }
    }
    VertexColoring c = vertex_three_coloring(t);  // throws FoldabilityError if not foldable

    const Rat* by_class[4] = {nullptr, &gamma.gamma1, &gamma.gamma2, &gamma.gamma3};
    SparseBivariatePolynomial poly;
    for (size_t i = 0; i < t.points.size(); ++i) {
        poly.set_term(static_cast<int>(t.points[i].x), static_cast<int>(t.points[i].y),
                      *by_class[c.label[i]]);
    }
    return poly;
}

std::int64_t kushnirenko_number(const LatticePolygon& poly) { return twice_area(poly); }

namespace {

// Exact determinant by Gaussian elimination with partial pivoting over Q.
Rat determinant(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (sgn(m[r][col]) == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (size_t cc = col; cc < n; ++cc) m[r][cc] -= factor * m[col][cc];
        }
    }
    return det;
}

// Sylvester matrix of f, g as polynomials in the eliminated variable, with
// the coefficient polynomials evaluated at t.
Rat sylvester_at(const std::vector<UniPoly>& fc, const std::vector<UniPoly>& gc, const Rat& t) {
    const int m = static_cast<int>(fc.size()) - 1;
    const int n = static_cast<int>(gc.size()) - 1;
    const int size = m + n;
    std::vector<std::vector<Rat>> mat(size, std::vector<Rat>(size, Rat(0)));
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k <= m; ++k) mat[row][row + k] = fc[m - k].eval(t);
    }
    for (int row = 0; row < m; ++row) {
        for (int k = 0; k <= n; ++k) mat[n + row][row + k] = gc[n - k].eval(t);
    }
    return determinant(std::move(mat));
}

UniPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UniPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * UniPoly::constant(ys[i] / denom);
    }
    return acc;
}

}  // namespace

UniPoly eliminate(const SparseBivariatePolynomial& f, const SparseBivariatePolynomial& g,
                  Eliminate var) {
    if (f.is_zero() || g.is_zero()) {
        throw Error(ErrorKind::InvalidInput, "eliminate: zero polynomial");
    }
    // coefficients of f, g in the eliminated variable; entries are
    // polynomials in the surviving one
    std::vector<UniPoly> fc = (var == Eliminate::Y) ? f.coefficients_in_y() : f.coefficients_in_x();
    std::vector<UniPoly> gc = (var == Eliminate::Y) ? g.coefficients_in_y() : g.coefficients_in_x();
    const int m = static_cast<int>(fc.size()) - 1;
    const int n = static_cast<int>(gc.size()) - 1;

    // Res(f, g) = f^n when f is free of the eliminated variable (and
    // symmetrically); Res of two constants is 1.
    if (m == 0 && n == 0) return UniPoly::constant(Rat(1));
    if (m == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < n; ++i) r = r * fc[0];
        return r;
    }
    if (n == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < m; ++i) r = r * gc[0];
        return r;
    }

    int max_f = 0, max_g = 0;
    for (const auto& p : fc) max_f = std::max(max_f, std::max(p.degree(), 0));
    for (const auto& p : gc) max_g = std::max(max_g, std::max(p.degree(), 0));
    const int degree_bound = n * max_f + m * max_g;

    // The determinant is a polynomial of degree <= degree_bound in the
    // surviving variable and specialization commutes with it, so interpolate
    // through exact evaluations.
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= degree_bound; ++k) {
        Rat t = Rat(k % 2 == 0 ? k / 2 : -(k / 2 + 1));
        xs.push_back(t);
        ys.push_back(sylvester_at(fc, gc, t));
    }
    UniPoly res = lagrange_interpolate(xs, ys);
    if (res.is_zero()) {
        throw Error(ErrorKind::NonGeneric,
                    "eliminate: resultant vanishes identically (common factor)");
    }
    return res;
}

WronskiSystem make_system(const Triangulation& t, const WronskiCoefficients& a,
                          const WronskiCoefficients& b) {
    WronskiSystem s;
    s.triangulation = t;
    s.f = build_wronski(t, a);
    s.g = build_wronski(t, b);
    return s;
}

namespace {

// Common roots of the two axis restrictions away from the origin. Common
// roots at zero project onto resultant roots at 0, which the torus counting
// strips; nonzero ones sit among the resultant's nonzero roots and corrupt
// the count, so they disqualify the fast path.
bool polluting_axis_roots(const UniPoly& u, const UniPoly& v) {
    if (u.is_zero() && v.is_zero()) return true;  // the whole axis is common
    if (u.is_zero()) return v.strip_trailing_zeros().degree() > 0;
    if (v.is_zero()) return u.strip_trailing_zeros().degree() > 0;
    return poly_gcd(u, v).strip_trailing_zeros().degree() > 0;
}

// Matches real x-roots with real y-roots by exact interval exclusion: a pair
// survives while 0 stays inside the interval images of both polynomials.
// Under the regularity conditions checked by the caller each x-root pairs
// with exactly one y-root, so refinement terminates with a perfect matching.
std::vector<SolutionBox> match_boxes(const SparseBivariatePolynomial& f,
                                     const SparseBivariatePolynomial& g,
                                     const UniPoly& rx_sqfree, const UniPoly& ry_sqfree,
                                     std::vector<IsolatingInterval> xi,
                                     std::vector<IsolatingInterval> yi, bool& resolved) {
    const size_t nx = xi.size(), ny = yi.size();
    resolved = false;
    if (nx == 0 || ny == 0) {
        resolved = (nx == 0 && ny == 0);
        return {};
    }

    Rat width(1, 4);
    for (int round = 0; round < 220; ++round) {
        for (auto& iv : xi) iv = refine_root(rx_sqfree, iv, width);
        for (auto& iv : yi) iv = refine_root(ry_sqfree, iv, width);

        std::vector<std::pair<size_t, size_t>> alive;
        std::vector<int> row_hits(nx, 0), col_hits(ny, 0);
        for (size_t i = 0; i < nx; ++i) {
            for (size_t j = 0; j < ny; ++j) {
                RatInterval fx = f.eval_interval(xi[i].as_interval(), yi[j].as_interval());
                RatInterval gx = g.eval_interval(xi[i].as_interval(), yi[j].as_interval());
                if (fx.contains_zero() && gx.contains_zero()) {
                    alive.emplace_back(i, j);
                    ++row_hits[i];
                    ++col_hits[j];
                }
            }
        }
        bool perfect = (alive.size() == nx && nx == ny);
        for (int h : row_hits) perfect = perfect && (h == 1);
        for (int h : col_hits) perfect = perfect && (h == 1);
        if (perfect) {
            std::vector<SolutionBox> out;
            for (auto [i, j] : alive) out.push_back({xi[i], yi[j]});
            std::sort(out.begin(), out.end(), [](const SolutionBox& a, const SolutionBox& b) {
                return a.x.lo < b.x.lo;
            });
            resolved = true;
            return out;
        }
        width /= 16;
    }
    return {};
}

}  // namespace

SolveReport solve_system(const WronskiSystem& s) {
    SolveReport rep;
    rep.kushnirenko_number = kushnirenko_number(hull_of_points(s.triangulation));

    if (s.f.is_zero() || s.g.is_zero()) {
        throw Error(ErrorKind::InvalidInput, "solve_system: zero polynomial");
    }

    UniPoly rx, ry;
    try {
        rx = eliminate(s.f, s.g, Eliminate::Y);
        ry = eliminate(s.f, s.g, Eliminate::X);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonGeneric) throw;
        rep.generic = false;
        rep.notes.push_back("resultant vanishes identically: positive-dimensional common locus");
        return rep;
    }

    const int x_zero_mult = rx.trailing_zero_multiplicity();
    const int y_zero_mult = ry.trailing_zero_multiplicity();
    UniPoly rx_torus = rx.strip_trailing_zeros();
    UniPoly ry_torus = ry.strip_trailing_zeros();
    const std::int64_t count_x = rx_torus.degree();
    const std::int64_t count_y = ry_torus.degree();
    rep.torus_solution_count = count_x;

    bool regular = true;
    auto note = [&](const std::string& msg) {
        rep.notes.push_back(msg);
        regular = false;
    };

    if (count_x != count_y) {
        note("resultant degrees disagree between the two elimination directions");
    }
    if (x_zero_mult > 0 || y_zero_mult > 0) {
        // stripped from the torus count already; reported, not disqualifying
        rep.axis_solutions = true;
        rep.notes.push_back("solutions with a zero coordinate detected and excluded");
    }

    // nonzero common roots on an axis sit among the counted resultant roots
    {
        UniPoly f_y0 = s.f.restrict_y_to_zero();
        UniPoly g_y0 = s.g.restrict_y_to_zero();
        UniPoly f_x0 = s.f.restrict_x_to_zero();
        UniPoly g_x0 = s.g.restrict_x_to_zero();
        if (polluting_axis_roots(f_y0, g_y0) || polluting_axis_roots(f_x0, g_x0)) {
            rep.axis_solutions = true;
            note("common roots on a coordinate axis pollute the torus count");
        }
    }

    // multiple resultant roots or coincident leading-coefficient roots break
    // the one-solution-per-root argument the real count relies on
    UniPoly rx_sqfree = squarefree_part(rx_torus);
    UniPoly ry_sqfree = squarefree_part(ry_torus);
    if (rx_sqfree.degree() != rx_torus.degree() || ry_sqfree.degree() != ry_torus.degree()) {
        note("resultant has multiple roots");
    }
    {
        const auto fy = s.f.coefficients_in_y();
        const auto gy = s.g.coefficients_in_y();
        const auto fx = s.f.coefficients_in_x();
        const auto gx = s.g.coefficients_in_x();
        if (poly_gcd(fy.back(), gy.back()).strip_trailing_zeros().degree() > 0 ||
            poly_gcd(fx.back(), gx.back()).strip_trailing_zeros().degree() > 0) {
            note("leading coefficients share a nonzero root; solutions may escape to infinity");
        }
    }

    if (count_x != rep.kushnirenko_number) {
        note("torus count does not reach the Kushnirenko number");
    }

    rep.generic = regular;

    if (regular) {
        RealRootResult xr = count_real_roots(rx_sqfree);
        RealRootResult yr = count_real_roots(ry_sqfree);
        bool resolved = false;
        rep.real_solutions = match_boxes(s.f, s.g, rx_sqfree, ry_sqfree, xr.intervals,
                                         yr.intervals, resolved);
        if (!resolved) {
            rep.generic = false;
            rep.notes.push_back("real-root matching did not resolve; counts unreliable");
        }
        rep.real_count = static_cast<int>(rep.real_solutions.size());
    }
    return rep;
}

BoundCheck verify_bound(const Triangulation& t, const WronskiCoefficients& a,
                        const WronskiCoefficients& b) {
    BoundCheck check;
    check.signature = signature_via_triangles(t);
    SolveReport rep = solve_system(make_system(t, a, b));
    check.real_count = rep.real_count;
    check.generic = rep.generic;
    check.bound_holds = rep.generic && rep.real_count >= check.signature;
    return check;
}

std::array<Rat, 3> wronski_center(const WronskiCoefficients& a, const WronskiCoefficients& b) {
    return {a.gamma2 * b.gamma3 - a.gamma3 * b.gamma2,
            a.gamma3 * b.gamma1 - a.gamma1 * b.gamma3,
            a.gamma1 * b.gamma2 - a.gamma2 * b.gamma1};
}

bool center_in_positive_chamber(const WronskiCoefficients& a, const WronskiCoefficients& b) {
    std::array<Rat, 3> q = wronski_center(a, b);
    int s0 = sgn(q[0]);
    return s0 != 0 && sgn(q[1]) == s0 && sgn(q[2]) == s0;
}

WronskiCoefficients random_gamma(std::mt19937& rng) {
    auto draw = [&rng]() {
        // raw engine output keeps the sequence portable across libraries
        long mag = static_cast<long>(rng() % 9) + 1;
        bool neg = (rng() % 2) == 1;
        return Rat(neg ? -mag : mag);
    };
    return {draw(), draw(), draw()};
}

std::pair<WronskiCoefficients, WronskiCoefficients> random_bound_pair(std::mt19937& rng) {
    while (true) {
        WronskiCoefficients a = random_gamma(rng);
        WronskiCoefficients b = random_gamma(rng);
        if (center_in_positive_chamber(a, b)) return {a, b};
    }
}

}  // namespace foldsig

#include "foldsig/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace foldsig {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

// Lattice points on the closed segment [a,b], excluding b.
void append_edge_points(const LatticePoint& a, const LatticePoint& b,
                        std::vector<LatticePoint>& out) {
    std::int64_t g = gcd64(b.x - a.x, b.y - a.y);
    Coord sx = (b.x - a.x) / g, sy = (b.y - a.y) / g;
    for (std::int64_t k = 0; k < g; ++k) {
        out.push_back({a.x + k * sx, a.y + k * sy});
    }
}

}  // namespace

LatticePolygon hull_of(std::span<const LatticePoint> points) {
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        throw Error(ErrorKind::Dimension, "hull_of: fewer than 3 distinct points");
    }
    for (const auto& p : pts) {
        if (p.x < -coord_limit || p.x > coord_limit || p.y < -coord_limit || p.y > coord_limit) {
            throw Error(ErrorKind::InvalidInput, "hull_of: coordinate exceeds limit at " + to_string(p));
        }
    }

    // Andrew's monotone chain; strict turns only, so collinear points drop out.
    auto build = [&](bool lower) {
        std::vector<LatticePoint> chain;
        auto scan = [&](const LatticePoint& p) {
            while (chain.size() >= 2 &&
                   orientation(chain[chain.size() - 2], chain.back(), p) <= 0) {
                chain.pop_back();
            }
            chain.push_back(p);
        };
        if (lower) {
            for (const auto& p : pts) scan(p);
        } else {
            for (auto it = pts.rbegin(); it != pts.rend(); ++it) scan(*it);
        }
        return chain;
    };

    std::vector<LatticePoint> lower = build(true);
    std::vector<LatticePoint> upper = build(false);

    LatticePolygon poly;
    poly.vertices.assign(lower.begin(), lower.end() - 1);
    poly.vertices.insert(poly.vertices.end(), upper.begin(), upper.end() - 1);
    if (poly.vertices.size() < 3) {
        throw Error(ErrorKind::Dimension, "hull_of: points are collinear");
    }
    // Monotone chain starting from sorted input already begins at the
    // lexicographic minimum and runs counterclockwise.
    return poly;
}

std::int64_t twice_area(const LatticePolygon& poly) {
    __int128 sum = 0;
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        sum += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
    }
    return static_cast<std::int64_t>(sum);
}

bool on_boundary(const LatticePolygon& poly, const LatticePoint& q) {
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        if (orientation(a, b, q) != 0) continue;
        if (q.x >= std::min(a.x, b.x) && q.x <= std::max(a.x, b.x) &&
            q.y >= std::min(a.y, b.y) && q.y <= std::max(a.y, b.y)) {
            return true;
        }
    }
    return false;
}

bool strictly_inside(const LatticePolygon& poly, const LatticePoint& q) {
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        if (orientation(v[i], v[(i + 1) % v.size()], q) <= 0) return false;
    }
    return true;
}

Census lattice_census(const LatticePolygon& poly) {
    Census c;
    const auto& v = poly.vertices;

    for (size_t i = 0; i < v.size(); ++i) {
        append_edge_points(v[i], v[(i + 1) % v.size()], c.boundary);
    }
    std::sort(c.boundary.begin(), c.boundary.end());

    Coord xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    for (Coord y = ymin; y <= ymax; ++y) {
        for (Coord x = xmin; x <= xmax; ++x) {
            if (strictly_inside(poly, {x, y})) c.interior.push_back({x, y});
        }
    }

    c.pick.twice_area = twice_area(poly);
    c.pick.boundary_count = static_cast<std::int64_t>(c.boundary.size());
    c.pick.interior_count = static_cast<std::int64_t>(c.interior.size());
    if (!c.pick.identity_holds()) {
        throw Error(ErrorKind::Internal, "lattice_census: Pick identity violated");
    }
    return c;
}

std::int64_t signature_upper_bound(const LatticePolygon& poly) {
    return lattice_census(poly).pick.boundary_count / 3;
}

}  // namespace foldsig

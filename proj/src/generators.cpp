#include "foldsig/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>

#include "foldsig/json_io.hpp"

#ifndef FOLDSIG_DEFAULT_FIXTURE_DIR
#define FOLDSIG_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace foldsig {

namespace {

int point_index(const std::vector<LatticePoint>& pts, LatticePoint p) {
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    return static_cast<int>(it - pts.begin());
}

}  // namespace

Triangulation staircase(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "staircase: n must be >= 1");
    Triangulation t;
    for (Coord x = 0; x <= n; ++x) {
        for (Coord y = 0; y + x <= n; ++y) t.points.push_back({x, y});
    }
    std::sort(t.points.begin(), t.points.end());
    for (Coord x = 0; x < n; ++x) {
        for (Coord y = 0; x + y < n; ++y) {
            int a = point_index(t.points, {x, y});
            int b = point_index(t.points, {x + 1, y});
            int c = point_index(t.points, {x, y + 1});
            t.triangles.push_back({a, b, c});
            if (x + y < n - 1) {
                int d = point_index(t.points, {x + 1, y + 1});
                t.triangles.push_back({b, d, c});
            }
        }
    }
    canonicalize(t);
    return t;
}

Triangulation rectangle_grid(int m, int n, DiagonalPattern pattern) {
    if (m < 1 || n < 1) throw Error(ErrorKind::InvalidInput, "rectangle_grid: sides must be >= 1");
    Triangulation t;
    for (Coord x = 0; x <= m; ++x) {
        for (Coord y = 0; y <= n; ++y) t.points.push_back({x, y});
    }
    std::sort(t.points.begin(), t.points.end());
    for (Coord x = 0; x < m; ++x) {
        for (Coord y = 0; y < n; ++y) {
            int a = point_index(t.points, {x, y});
            int b = point_index(t.points, {x + 1, y});
            int c = point_index(t.points, {x + 1, y + 1});
            int d = point_index(t.points, {x, y + 1});
            bool main_diag = (pattern == DiagonalPattern::Uniform) || ((x + y) % 2 == 0);
            if (main_diag) {  // diagonal a-c
                t.triangles.push_back({a, b, c});
                t.triangles.push_back({a, c, d});
            } else {  // diagonal b-d
                t.triangles.push_back({a, b, d});
                t.triangles.push_back({b, c, d});
            }
        }
    }
    canonicalize(t);
    return t;
}

Triangulation hexagon_fig1() {
    std::string dir = FOLDSIG_DEFAULT_FIXTURE_DIR;
    if (const char* env = std::getenv("FOLDSIG_FIXTURES")) dir = env;
    std::string path = dir + "/hexagon_fig1.json";
    Triangulation t = read_triangulation_file(path, /*strict=*/true);
    if (t.points.size() != 24 || t.triangles.size() != 33) {
        throw Error(ErrorKind::Parse, "hexagon_fig1: fixture has wrong point/triangle counts");
    }
    TwoColoring c = two_coloring(t);
    if (std::min(c.black_count, c.white_count) != 16 ||
        std::max(c.black_count, c.white_count) != 17) {
        throw Error(ErrorKind::Parse, "hexagon_fig1: fixture two-coloring split is not {17,16}");
    }
    return t;
}

namespace {

struct DirectedEdge {
    LatticePoint a, b;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Depth-first advancing-front cover search over the lattice census. The front
// holds directed edges whose left side still needs a triangle; the smallest
// front edge is expanded over every census point that closes an area-1
// counterclockwise triangle without crossing placed edges.
class DenseEnumerator {
public:
    DenseEnumerator(const LatticePolygon& poly, bool foldable_only,
                    const std::function<void(const Triangulation&)>& sink)
        : poly_(poly), foldable_only_(foldable_only), sink_(sink) {
        Census census = lattice_census(poly);
        points_ = census.boundary;
        points_.insert(points_.end(), census.interior.begin(), census.interior.end());
        std::sort(points_.begin(), points_.end());
        report_.polygon = poly;
    }

    EnumerationReport run() {
        // initial front: unit boundary edges, region to the left (CCW)
        const auto& v = poly_.vertices;
        for (size_t i = 0; i < v.size(); ++i) {
            std::vector<LatticePoint> pts = points_on_edge(v[i], v[(i + 1) % v.size()]);
            for (size_t k = 0; k + 1 < pts.size(); ++k) {
                LatticePoint a = pts[k], b = pts[k + 1];
                front_.insert({a, b});
                used_edges_.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            }
        }
        search();
        return report_;
    }

private:
    std::vector<LatticePoint> points_on_edge(LatticePoint a, LatticePoint b) const {
        std::vector<LatticePoint> out;
        std::int64_t g = std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
        for (std::int64_t k = 0; k <= g; ++k) {
            out.push_back({a.x + k * (b.x - a.x) / g, a.y + k * (b.y - a.y) / g});
        }
        return out;
    }

    static bool segments_cross(LatticePoint a, LatticePoint b, LatticePoint c, LatticePoint d) {
        // proper crossing of open segments; shared endpoints do not count
        if (a == c || a == d || b == c || b == d) return false;
        return orientation(a, b, c) * orientation(a, b, d) < 0 &&
               orientation(c, d, a) * orientation(c, d, b) < 0;
    }

    void search() {
        if (front_.empty()) {
            emit();
            return;
        }
        DirectedEdge e = *front_.begin();
        for (const LatticePoint& c : points_) {
            if (orientation(e.a, e.b, c) <= 0) continue;
            if (normalized_area({e.a, e.b, c}) != 1) continue;
            if (!try_place(e, c)) continue;
            search();
            unplace();
        }
    }

    struct Placement {
        std::array<DirectedEdge, 2> added;     // demands created
        std::array<DirectedEdge, 3> consumed;  // demands consumed (some unused)
        int consumed_count = 0;
        int edges_added = 0;
        std::array<std::pair<LatticePoint, LatticePoint>, 2> new_edges;
    };

    bool try_place(const DirectedEdge& e, LatticePoint c) {
        // triangle (e.a, e.b, c) is CCW; its other directed edges
        DirectedEdge side1{e.b, c}, side2{c, e.a};
        Placement pl;
        pl.consumed[pl.consumed_count++] = e;

        for (const DirectedEdge& s : {side1, side2}) {
            DirectedEdge rev{s.b, s.a};
            if (front_.count(s)) {
                pl.consumed[pl.consumed_count++] = s;
            } else if (front_.count(rev)) {
                return false;  // a triangle on this side already exists
            } else {
                auto key = s.a < s.b ? std::make_pair(s.a, s.b) : std::make_pair(s.b, s.a);
                if (used_edges_.count(key)) return false;  // edge already filled twice
                for (const auto& [ua, ub] : edge_list_) {
                    if (segments_cross(s.a, s.b, ua, ub)) return false;
                }
                pl.added[pl.edges_added] = rev;
                pl.new_edges[pl.edges_added] = key;
                ++pl.edges_added;
            }
        }

        for (int i = 0; i < pl.consumed_count; ++i) front_.erase(pl.consumed[i]);
        for (int i = 0; i < pl.edges_added; ++i) {
            front_.insert(pl.added[i]);
            used_edges_.insert(pl.new_edges[i]);
            edge_list_.push_back(pl.new_edges[i]);
        }
        triangles_.push_back({e.a, e.b, c});
        placements_.push_back(pl);
        return true;
    }

    void unplace() {
        Placement pl = placements_.back();
        placements_.pop_back();
        triangles_.pop_back();
        for (int i = 0; i < pl.edges_added; ++i) {
            front_.erase(pl.added[i]);
            used_edges_.erase(pl.new_edges[i]);
            edge_list_.pop_back();
        }
        for (int i = 0; i < pl.consumed_count; ++i) front_.insert(pl.consumed[i]);
    }

    void emit() {
        Triangulation t;
        t.points = points_;
        for (const auto& tri : triangles_) {
            t.triangles.push_back({point_index(points_, tri[0]), point_index(points_, tri[1]),
                                   point_index(points_, tri[2])});
        }
        canonicalize(t);
        if (!seen_.insert(t.triangles).second) {
            throw Error(ErrorKind::Internal, "enumerate: duplicate triangulation yielded");
        }
        report_.total_dense_count += 1;

        FoldabilityResult f = is_foldable(t);
        if (f.foldable) {
            report_.foldable_count += 1;
            report_.signature_histogram[signature_via_triangles(t)] += 1;
        }
        if (!foldable_only_ || f.foldable) sink_(t);
    }

    LatticePolygon poly_;
    bool foldable_only_;
    const std::function<void(const Triangulation&)>& sink_;
    std::vector<LatticePoint> points_;
    std::set<DirectedEdge> front_;
    std::set<std::pair<LatticePoint, LatticePoint>> used_edges_;
    std::vector<std::pair<LatticePoint, LatticePoint>> edge_list_;
    std::vector<std::array<LatticePoint, 3>> triangles_;
    std::vector<Placement> placements_;
    std::set<std::vector<std::array<int, 3>>> seen_;
    EnumerationReport report_;
};

}  // namespace

EnumerationReport enumerate_dense_triangulations(
    const LatticePolygon& poly, bool foldable_only,
    const std::function<void(const Triangulation&)>& sink, int point_limit) {
    Census census = lattice_census(poly);
    std::int64_t n = census.pick.boundary_count + census.pick.interior_count;
    if (n > point_limit) {
        throw Error(ErrorKind::TooLarge,
                    "enumerate: census has " + std::to_string(n) + " points, limit " +
                        std::to_string(point_limit));
    }
    DenseEnumerator e(poly, foldable_only, sink);
    return e.run();
}

}  // namespace foldsig

#include "foldsig/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace foldsig {

namespace {

std::pair<int, int> edge_key(int a, int b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Strict separating-axis test for two closed triangles with exact arithmetic.
// Returns true iff the interiors intersect.
bool interiors_intersect(const LatticeTriangle& s, const LatticeTriangle& t) {
    const LatticePoint sv[3] = {s.v0, s.v1, s.v2};
    const LatticePoint tv[3] = {t.v0, t.v1, t.v2};
    auto separated_by_edge_of = [](const LatticePoint* a, const LatticePoint* b) {
        // CCW triangles: interior is left of each directed edge. If all of b
        // lies in the closed right half-plane of some edge of a, the
        // interiors are disjoint.
        for (int i = 0; i < 3; ++i) {
            const LatticePoint& p = a[i];
            const LatticePoint& q = a[(i + 1) % 3];
            bool all_right = true;
            for (int j = 0; j < 3; ++j) {
                if (orientation(p, q, b[j]) > 0) { all_right = false; break; }
            }
            if (all_right) return true;
        }
        return false;
    };
    return !separated_by_edge_of(sv, tv) && !separated_by_edge_of(tv, sv);
}

// Strictly between a and b on the open segment (a,b).
bool strictly_on_segment(const LatticePoint& p, const LatticePoint& a, const LatticePoint& b) {
    if (p == a || p == b) return false;
    if (orientation(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

std::array<int, 3> sorted_by_point(const Triangulation& t, int k) {
    std::array<int, 3> idx = t.triangles[k];
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return t.points[a] < t.points[b]; });
    return idx;
}

// Index of the triangle whose point-sorted vertex triple is lexicographically
// smallest: the canonical anchor for both colorings.
int anchor_triangle(const Triangulation& t) {
    int best = 0;
    std::array<LatticePoint, 3> best_pts;
    for (int k = 0; k < static_cast<int>(t.triangles.size()); ++k) {
        auto idx = sorted_by_point(t, k);
        std::array<LatticePoint, 3> pts = {t.points[idx[0]], t.points[idx[1]], t.points[idx[2]]};
        if (k == 0 || pts < best_pts) {
            best = k;
            best_pts = pts;
        }
    }
    return best;
}

void require_valid(const Triangulation& t, const char* op) {
    ValidationReport r = validate(t);
    if (!r.is_valid) {
        std::string msg = std::string(op) + ": invalid triangulation:";
        for (const auto& v : r.violations) msg += " [" + v + "]";
        throw Error(ErrorKind::InvalidInput, msg);
    }
}

}  // namespace

void canonicalize(Triangulation& t) {
    for (auto& tri : t.triangles) {
        int m = 0;
        if (tri[1] < tri[m]) m = 1;
        if (tri[2] < tri[m]) m = 2;
        std::rotate(tri.begin(), tri.begin() + m, tri.end());
    }
    std::sort(t.triangles.begin(), t.triangles.end());
}

MeshIndex MeshIndex::build(const Triangulation& t) {
    MeshIndex m;
    m.dual_adjacency.assign(t.triangles.size(), {});
    m.vertex_neighbors.assign(t.points.size(), {});
    for (int k = 0; k < static_cast<int>(t.triangles.size()); ++k) {
        const auto& tri = t.triangles[k];
        for (int i = 0; i < 3; ++i) {
            m.edge_triangles[edge_key(tri[i], tri[(i + 1) % 3])].push_back(k);
        }
    }
    for (const auto& [e, tris] : m.edge_triangles) {
        if (tris.size() == 1) m.boundary_edges.push_back(e);
        if (tris.size() == 2) {
            m.dual_adjacency[tris[0]].push_back(tris[1]);
            m.dual_adjacency[tris[1]].push_back(tris[0]);
        }
        m.vertex_neighbors[e.first].push_back(e.second);
        m.vertex_neighbors[e.second].push_back(e.first);
    }
    return m;
}

ValidationReport validate(const Triangulation& t) {
    ValidationReport r;
    const int np = static_cast<int>(t.points.size());
    const int nt = static_cast<int>(t.triangles.size());

    if (np < 3 || nt < 1) {
        r.violations.push_back("too few points or triangles");
        return r;
    }
    {
        std::set<LatticePoint> seen(t.points.begin(), t.points.end());
        if (static_cast<int>(seen.size()) != np) r.violations.push_back("duplicate points");
    }
    bool indices_ok = true;
    for (const auto& tri : t.triangles) {
        for (int i : tri) {
            if (i < 0 || i >= np) {
                r.violations.push_back("triangle index out of range");
                indices_ok = false;
            }
        }
    }
    if (!indices_ok) return r;

    bool degenerate = false;
    for (int k = 0; k < nt; ++k) {
        const auto& tri = t.triangles[k];
        int o = orientation(t.points[tri[0]], t.points[tri[1]], t.points[tri[2]]);
        if (o == 0) { r.violations.push_back("degenerate triangle " + std::to_string(k)); degenerate = true; }
        else if (o < 0) { r.violations.push_back("clockwise triangle " + std::to_string(k)); }
    }
    if (degenerate) return r;

    {
        Triangulation canon = t;
        canonicalize(canon);
        if (std::adjacent_find(canon.triangles.begin(), canon.triangles.end()) !=
            canon.triangles.end()) {
            r.violations.push_back("duplicate triangle");
        }
    }

    MeshIndex mesh = MeshIndex::build(t);
    for (const auto& [e, tris] : mesh.edge_triangles) {
        if (tris.size() > 2) {
            r.violations.push_back("edge in more than 2 triangles");
        }
    }

    // points used by some triangle
    {
        std::vector<bool> used(np, false);
        for (const auto& tri : t.triangles)
            for (int i : tri) used[i] = true;
        for (int i = 0; i < np; ++i) {
            if (!used[i]) r.violations.push_back("unused point " + to_string(t.points[i]));
        }
    }

    LatticePolygon hull;
    try {
        hull = hull_of(t.points);
    } catch (const Error&) {
        r.violations.push_back("points do not span the plane");
        return r;
    }

    // union covers the hull: total area matches and interiors are disjoint
    __int128 area_sum = 0;
    for (int k = 0; k < nt; ++k) area_sum += normalized_area(t.triangle(k));
    if (area_sum != twice_area(hull)) r.violations.push_back("triangle areas do not sum to hull area");

    for (int a = 0; a < nt; ++a) {
        for (int b = a + 1; b < nt; ++b) {
            if (interiors_intersect(t.triangle(a), t.triangle(b))) {
                r.violations.push_back("overlapping triangles " + std::to_string(a) + "," +
                                       std::to_string(b));
            }
        }
    }

    // edge-to-edge: no vertex lies in the open interior of another edge
    for (const auto& [e, tris] : mesh.edge_triangles) {
        for (int i = 0; i < np; ++i) {
            if (i == e.first || i == e.second) continue;
            if (strictly_on_segment(t.points[i], t.points[e.first], t.points[e.second])) {
                r.violations.push_back("point " + to_string(t.points[i]) + " splits an edge");
            }
        }
    }

    // boundary edges (incidence 1) must lie on the hull boundary
    for (const auto& e : mesh.boundary_edges) {
        if (!on_boundary(hull, t.points[e.first]) || !on_boundary(hull, t.points[e.second])) {
            r.violations.push_back("interior edge with single incidence");
        }
    }

    // connected dual graph (propagation and bipartition assume it)
    {
        std::vector<bool> seen(nt, false);
        std::deque<int> queue{0};
        seen[0] = true;
        int reached = 0;
        while (!queue.empty()) {
            int k = queue.front();
            queue.pop_front();
            ++reached;
            for (int nb : mesh.dual_adjacency[k]) {
                if (!seen[nb]) { seen[nb] = true; queue.push_back(nb); }
            }
        }
        if (reached != nt) r.violations.push_back("dual graph disconnected");
    }

    r.is_valid = r.violations.empty();

    r.is_unimodular = true;
    for (int k = 0; k < nt; ++k) {
        if (normalized_area(t.triangle(k)) != 1) { r.is_unimodular = false; break; }
    }

    // dense: point set equals the hull lattice census
    {
        Census census = lattice_census(hull);
        std::set<LatticePoint> want(census.boundary.begin(), census.boundary.end());
        want.insert(census.interior.begin(), census.interior.end());
        std::set<LatticePoint> have(t.points.begin(), t.points.end());
        r.is_dense = (want == have);
    }
    return r;
}

FoldabilityResult is_foldable(const Triangulation& t) {
    require_valid(t, "is_foldable");
    MeshIndex mesh = MeshIndex::build(t);
    const int nt = static_cast<int>(t.triangles.size());

    FoldabilityResult res;
    std::vector<int> side(nt, -1);
    std::vector<int> parent(nt, -1);
    std::deque<int> queue{0};
    side[0] = 0;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        for (int nb : mesh.dual_adjacency[k]) {
            if (side[nb] == -1) {
                side[nb] = 1 - side[k];
                parent[nb] = k;
                queue.push_back(nb);
            } else if (side[nb] == side[k]) {
                // odd cycle: paths to the common ancestor plus the edge k-nb
                std::vector<int> pk, pn;
                for (int v = k; v != -1; v = parent[v]) pk.push_back(v);
                for (int v = nb; v != -1; v = parent[v]) pn.push_back(v);
                while (pk.size() > 1 && pn.size() > 1 &&
                       pk[pk.size() - 2] == pn[pn.size() - 2]) {
                    pk.pop_back();
                    pn.pop_back();
                }
                res.foldable = false;
                // cycle k .. lca .. nb, closed by the dual edge nb-k
                res.odd_cycle_witness.assign(pk.begin(), pk.end());
                for (auto it = pn.rbegin(); it != pn.rend(); ++it) {
                    if (*it != pk.back()) res.odd_cycle_witness.push_back(*it);
                }
                return res;
            }
        }
    }
    res.foldable = true;
    res.dual_bipartition = std::move(side);
    return res;
}

TwoColoring two_coloring(const Triangulation& t) {
    FoldabilityResult f = is_foldable(t);
    if (!f.foldable) {
        throw FoldabilityError("two_coloring: dual graph has an odd cycle", f.odd_cycle_witness);
    }
    int anchor = anchor_triangle(t);
    int black_side = f.dual_bipartition[anchor];
    TwoColoring c;
    c.color.resize(t.triangles.size());
    for (size_t k = 0; k < t.triangles.size(); ++k) {
        bool black = (f.dual_bipartition[k] == black_side);
        c.color[k] = black ? TriangleColor::Black : TriangleColor::White;
        (black ? c.black_count : c.white_count) += 1;
    }
    return c;
}

std::int64_t signature_via_triangles(const Triangulation& t) {
    TwoColoring c = two_coloring(t);
    std::int64_t black_odd = 0, white_odd = 0;
    for (size_t k = 0; k < t.triangles.size(); ++k) {
        if (normalized_area(t.triangle(static_cast<int>(k))) % 2 == 0) continue;
        (c.color[k] == TriangleColor::Black ? black_odd : white_odd) += 1;
    }
    return black_odd >= white_odd ? black_odd - white_odd : white_odd - black_odd;
}

BoundaryProfile boundary_profile(const Triangulation& t) {
    ValidationReport v = validate(t);
    if (!v.is_valid) throw Error(ErrorKind::InvalidInput, "boundary_profile: invalid triangulation");
    if (!v.is_dense) throw Error(ErrorKind::Density, "boundary_profile: triangulation is not dense");
    TwoColoring c = two_coloring(t);
    MeshIndex mesh = MeshIndex::build(t);

    BoundaryProfile profile;
    for (const auto& e : mesh.boundary_edges) {
        SegmentType ty = segment_type(t.points[e.first], t.points[e.second]);
        if (ty == SegmentType::Even) {
            throw Error(ErrorKind::Density,
                        "boundary_profile: EVEN boundary edge " + to_string(t.points[e.first]) +
                            "-" + to_string(t.points[e.second]));
        }
        int owner = mesh.edge_triangles.at(e).front();
        auto& side = (c.color[owner] == TriangleColor::Black) ? profile.black : profile.white;
        side[static_cast<int>(ty)] += 1;
    }
    return profile;
}

std::int64_t signature_via_boundary(const Triangulation& t, SegmentType tau) {
    if (tau == SegmentType::Even) {
        throw Error(ErrorKind::InvalidInput, "signature_via_boundary: EVEN is not a boundary type");
    }
    BoundaryProfile p = boundary_profile(t);
    std::int64_t b = p.black[static_cast<int>(tau)];
    std::int64_t w = p.white[static_cast<int>(tau)];
    return b >= w ? b - w : w - b;
}

VertexColoring vertex_three_coloring_seeded(const Triangulation& t,
                                            const std::array<int, 3>& seed_labels) {
    FoldabilityResult f = is_foldable(t);
    if (!f.foldable) {
        throw FoldabilityError("vertex_three_coloring: not foldable", f.odd_cycle_witness);
    }
    MeshIndex mesh = MeshIndex::build(t);

    VertexColoring vc;
    vc.label.assign(t.points.size(), 0);

    int anchor = anchor_triangle(t);
    auto seed_idx = sorted_by_point(t, anchor);
    for (int i = 0; i < 3; ++i) vc.label[seed_idx[i]] = seed_labels[i];

    std::deque<int> queue{anchor};
    std::vector<bool> done(t.triangles.size(), false);
    done[anchor] = true;
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        const auto& tri = t.triangles[k];
        int lab[3] = {vc.label[tri[0]], vc.label[tri[1]], vc.label[tri[2]]};
        if (lab[0] == 0 || lab[1] == 0 || lab[2] == 0 || lab[0] + lab[1] + lab[2] != 6) {
            throw Error(ErrorKind::Internal, "vertex_three_coloring: propagation conflict");
        }
        for (int nb : mesh.dual_adjacency[k]) {
            const auto& ntri = t.triangles[nb];
            // the vertex of nb opposite to the shared edge takes the label
            // missing from that edge
            for (int i = 0; i < 3; ++i) {
                int v = ntri[i];
                bool shared = (v == tri[0] || v == tri[1] || v == tri[2]);
                if (shared) continue;
                int a = ntri[(i + 1) % 3], b = ntri[(i + 2) % 3];
                int want = 6 - vc.label[a] - vc.label[b];
                if (vc.label[v] == 0) {
                    vc.label[v] = want;
                } else if (vc.label[v] != want) {
                    throw Error(ErrorKind::Internal, "vertex_three_coloring: propagation conflict");
                }
            }
            if (!done[nb]) { done[nb] = true; queue.push_back(nb); }
        }
    }
    for (int lab : vc.label) {
        if (lab == 0) throw Error(ErrorKind::Internal, "vertex_three_coloring: unreached point");
    }
    // proper coloring check over all edges
    for (const auto& [e, tris] : mesh.edge_triangles) {
        if (vc.label[e.first] == vc.label[e.second]) {
            throw Error(ErrorKind::Internal, "vertex_three_coloring: improper coloring");
        }
    }
    return vc;
}

VertexColoring vertex_three_coloring(const Triangulation& t) {
    return vertex_three_coloring_seeded(t, {1, 2, 3});
}

VertexDegreeReport interior_vertex_degrees(const Triangulation& t) {
    require_valid(t, "interior_vertex_degrees");
    MeshIndex mesh = MeshIndex::build(t);
    LatticePolygon hull = hull_of(t.points);

    VertexDegreeReport rep;
    rep.degree.resize(t.points.size());
    rep.interior.resize(t.points.size());
    for (size_t i = 0; i < t.points.size(); ++i) {
        rep.degree[i] = static_cast<int>(mesh.vertex_neighbors[i].size());
        rep.interior[i] = !on_boundary(hull, t.points[i]);
        if (rep.interior[i] && rep.degree[i] % 2 != 0) rep.all_interior_even = false;
    }
    return rep;
}

LatticePolygon hull_of_points(const Triangulation& t) { return hull_of(t.points); }

Triangulation translated(const Triangulation& t, LatticePoint offset) {
    Triangulation out = t;
    for (auto& p : out.points) p = p + offset;
    return out;
}

}  // namespace foldsig

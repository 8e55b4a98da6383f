#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "foldsig/lattice.hpp"
#include "foldsig/polygon.hpp"

namespace foldsig {

/// Indexed triangle mesh over lattice points. Triangles are index triples in
/// counterclockwise order.
struct Triangulation {
    std::vector<LatticePoint> points;
    std::vector<std::array<int, 3>> triangles;

    LatticeTriangle triangle(int k) const {
        const auto& t = triangles[k];
        return {points[t[0]], points[t[1]], points[t[2]]};
    }
};

/// Rotates each triple so the smallest index comes first (orientation kept)
/// and sorts the triangle list. Two triangulations over the same point list
/// are equal iff their canonical forms are equal.
void canonicalize(Triangulation& t);

struct ValidationReport {
    bool is_valid = false;
    bool is_dense = false;       // points == lattice census of the hull
    bool is_unimodular = false;  // every triangle has normalized area 1
    std::vector<std::string> violations;
};

ValidationReport validate(const Triangulation& t);

/// Edge incidence and dual adjacency, shared by the colorings below.
/// Edge keys are sorted index pairs; incident lists hold triangle indices.
struct MeshIndex {
    std::map<std::pair<int, int>, std::vector<int>> edge_triangles;
    std::vector<std::vector<int>> dual_adjacency;            // per triangle
    std::vector<std::pair<int, int>> boundary_edges;          // incidence 1
    std::vector<std::vector<int>> vertex_neighbors;           // 1-skeleton

    static MeshIndex build(const Triangulation& t);
};

struct FoldabilityResult {
    bool foldable = false;
    std::vector<int> dual_bipartition;  // 0/1 per triangle when foldable
    std::vector<int> odd_cycle_witness; // triangle indices otherwise
};

/// Bipartition of the dual graph. Requires a valid triangulation.
FoldabilityResult is_foldable(const Triangulation& t);

enum class TriangleColor { Black, White };

struct TwoColoring {
    std::vector<TriangleColor> color;
    std::int64_t black_count = 0;
    std::int64_t white_count = 0;
};

/// Proper 2-coloring of the dual graph. Canonical: the triangle whose sorted
/// vertex triple is lexicographically smallest is Black. Throws
/// FoldabilityError with an odd-cycle witness when the dual graph is not
/// bipartite.
TwoColoring two_coloring(const Triangulation& t);

/// |black - white| among triangles of odd normalized area.
std::int64_t signature_via_triangles(const Triangulation& t);

struct BoundaryProfile {
    // indexed by SegmentType X=0, Y=1, XY=2
    std::array<std::int64_t, 3> black{0, 0, 0};
    std::array<std::int64_t, 3> white{0, 0, 0};

    std::int64_t total() const {
        return black[0] + black[1] + black[2] + white[0] + white[1] + white[2];
    }
};

/// Classifies every boundary edge by segment type and by the color of its
/// unique containing triangle. Requires dense + foldable; an Even boundary
/// edge is a density violation.
BoundaryProfile boundary_profile(const Triangulation& t);

/// |black(tau) - white(tau)| over boundary edges. Equal to
/// signature_via_triangles for every tau on dense foldable input.
std::int64_t signature_via_boundary(const Triangulation& t, SegmentType tau);

struct VertexColoring {
    std::vector<int> label;  // 1..3 per point
};

/// Proper 3-coloring of the 1-skeleton, unique up to relabeling. Canonical:
/// the canonical Black triangle's vertices carry 1,2,3 in lexicographic
/// point order; labels propagate across shared edges.
VertexColoring vertex_three_coloring(const Triangulation& t);

/// Same propagation from an arbitrary seed permutation of {1,2,3}; used to
/// check uniqueness up to relabeling.
VertexColoring vertex_three_coloring_seeded(const Triangulation& t,
                                            const std::array<int, 3>& seed_labels);

/// Degree of each point in the 1-skeleton, plus whether the point is
/// interior to the hull. Foldability is equivalent to all interior degrees
/// being even.
struct VertexDegreeReport {
    std::vector<int> degree;
    std::vector<bool> interior;
    bool all_interior_even = true;
};

VertexDegreeReport interior_vertex_degrees(const Triangulation& t);

LatticePolygon hull_of_points(const Triangulation& t);

Triangulation translated(const Triangulation& t, LatticePoint offset);

}  // namespace foldsig

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "foldsig/lattice.hpp"

namespace foldsig {

/// Strictly convex lattice polygon. Vertices are counterclockwise, no three
/// consecutive collinear, and the list starts at the lexicographically
/// smallest vertex.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;
};

struct PickData {
    std::int64_t twice_area = 0;       // 2A, exact
    std::int64_t interior_count = 0;   // I
    std::int64_t boundary_count = 0;   // B

    // Pick identity in integer form.
    bool identity_holds() const {
        return twice_area == 2 * interior_count + boundary_count - 2;
    }
};

struct Census {
    PickData pick;
    std::vector<LatticePoint> boundary;  // sorted lexicographically
    std::vector<LatticePoint> interior;  // sorted lexicographically
};

/// Convex hull of a point set. Throws ErrorKind::Dimension unless the points
/// span the plane.
LatticePolygon hull_of(std::span<const LatticePoint> points);

/// Shoelace area, gcd boundary walk, and row-by-row interior scan. The
/// constructed PickData is checked against the Pick identity (Internal error
/// on mismatch, which would indicate a bug).
Census lattice_census(const LatticePolygon& poly);

/// floor(B/3): upper bound for the signature of any dense foldable
/// triangulation of the polygon.
std::int64_t signature_upper_bound(const LatticePolygon& poly);

std::int64_t twice_area(const LatticePolygon& poly);

/// True if q lies on the polygon boundary (vertex or edge point).
bool on_boundary(const LatticePolygon& poly, const LatticePoint& q);

/// True if q lies strictly inside the polygon.
bool strictly_inside(const LatticePolygon& poly, const LatticePoint& q);

}  // namespace foldsig

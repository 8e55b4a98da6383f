#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "foldsig/errors.hpp"

namespace foldsig {

using Coord = std::int64_t;

// Coordinates are kept within 2^31-1 so every 2x2 determinant fits in
// __int128 with room to spare; see checked_i128_to_i64 below.
inline constexpr Coord coord_limit = 2147483647;

struct LatticePoint {
    Coord x = 0;
    Coord y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.x + q.x, p.y + q.y}; }
inline LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.x - q.x, p.y - q.y}; }

std::string to_string(const LatticePoint& p);

// Parity class of the endpoint difference: X = (odd, even), Y = (even, odd),
// XY = (odd, odd). Even covers (even, even); such a segment has a lattice
// midpoint and can never occur as an edge of a dense triangulation.
enum class SegmentType { X, Y, XY, Even };

const char* segment_type_name(SegmentType t);

struct LatticeSegment {
    LatticePoint a, b;  // a != b
};

struct LatticeTriangle {
    LatticePoint v0, v1, v2;
};

/// Exact cross product (b-a) x (c-a). Positive iff a,b,c are counterclockwise.
__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

SegmentType segment_type(const LatticePoint& a, const LatticePoint& b);

/// |det of edge vectors| = 2 * Euclidean area. Collinear input yields 0.
std::int64_t normalized_area(const LatticeTriangle& t);

struct EdgeProfile {
    int count_x = 0;
    int count_y = 0;
    int count_xy = 0;
    int count_even = 0;
    bool lemma1_holds = false;  // counts are exactly (1,1,1,0)
    bool parity_ok = false;     // area mod 2 == count_t mod 2 for each parity type t
};

EdgeProfile triangle_edge_profile(const LatticeTriangle& t);

}  // namespace foldsig

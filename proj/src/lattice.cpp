#include "foldsig/lattice.hpp"

#include <cstdlib>
#include <limits>

namespace foldsig {

namespace {

std::int64_t checked_i128_to_i64(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorKind::InvalidInput,
                    std::string(what) + ": value exceeds 64-bit range; coordinates out of bounds");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

std::string to_string(const LatticePoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

const char* segment_type_name(SegmentType t) {
    switch (t) {
        case SegmentType::X: return "X";
        case SegmentType::Y: return "Y";
        case SegmentType::XY: return "XY";
        case SegmentType::Even: return "EVEN";
    }
    return "?";
}

__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    __int128 ux = b.x - a.x, uy = b.y - a.y;
    __int128 vx = c.x - a.x, vy = c.y - a.y;
    return ux * vy - uy * vx;
}

int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    __int128 d = cross(a, b, c);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

SegmentType segment_type(const LatticePoint& a, const LatticePoint& b) {
    if (a == b) {
        throw Error(ErrorKind::InvalidInput, "segment_type: degenerate segment " + to_string(a));
    }
    bool dx_odd = ((a.x - b.x) & 1) != 0;
    bool dy_odd = ((a.y - b.y) & 1) != 0;
    if (dx_odd && dy_odd) return SegmentType::XY;
    if (dx_odd) return SegmentType::X;
    if (dy_odd) return SegmentType::Y;
    return SegmentType::Even;
}

std::int64_t normalized_area(const LatticeTriangle& t) {
    __int128 d = cross(t.v0, t.v1, t.v2);
    if (d < 0) d = -d;
    return checked_i128_to_i64(d, "normalized_area");
}

EdgeProfile triangle_edge_profile(const LatticeTriangle& t) {
    std::int64_t area = normalized_area(t);
    if (area == 0) {
        throw Error(ErrorKind::InvalidInput, "triangle_edge_profile: degenerate triangle");
    }
    EdgeProfile p;
    const LatticePoint* v[3] = {&t.v0, &t.v1, &t.v2};
    for (int i = 0; i < 3; ++i) {
        switch (segment_type(*v[i], *v[(i + 1) % 3])) {
            case SegmentType::X: ++p.count_x; break;
            case SegmentType::Y: ++p.count_y; break;
            case SegmentType::XY: ++p.count_xy; break;
            case SegmentType::Even: ++p.count_even; break;
        }
    }
    p.lemma1_holds = (p.count_x == 1 && p.count_y == 1 && p.count_xy == 1 && p.count_even == 0);
    int a2 = static_cast<int>(area & 1);
    p.parity_ok = (p.count_x % 2 == a2) && (p.count_y % 2 == a2) && (p.count_xy % 2 == a2);
    return p;
}

}  // namespace foldsig

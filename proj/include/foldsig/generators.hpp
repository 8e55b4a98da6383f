#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "foldsig/polygon.hpp"
#include "foldsig/triangulation.hpp"

namespace foldsig {

/// Staircase triangulation of conv{(0,0),(n,0),(0,n)}: unit axis lines plus
/// the diagonals x+y = k. Dense, foldable, n^2 triangles, signature n.
Triangulation staircase(int n);

enum class DiagonalPattern { Uniform, Alternating };

/// Dense triangulation of [0,m] x [0,n], each unit cell split by a diagonal.
/// Uniform uses the same diagonal everywhere (always foldable); Alternating
/// flips the diagonal on a checkerboard and must be checked by is_foldable.
Triangulation rectangle_grid(int m, int n, DiagonalPattern pattern);

/// The 24-point, 33-triangle hexagon fixture, loaded from
/// fixtures/hexagon_fig1.json (FOLDSIG_FIXTURES overrides the directory).
/// Counts are asserted at load time.
Triangulation hexagon_fig1();

inline constexpr int default_enumeration_point_limit = 12;

struct EnumerationReport {
    LatticePolygon polygon;
    std::int64_t total_dense_count = 0;
    std::int64_t foldable_count = 0;
    std::map<std::int64_t, std::int64_t> signature_histogram;  // over foldable members
};

/// Exhaustively enumerates every dense triangulation of the polygon, each
/// exactly once, in deterministic order. The sink receives foldable members
/// only when foldable_only is set, every member otherwise. Throws
/// ErrorKind::TooLarge when the lattice census exceeds point_limit.
EnumerationReport enumerate_dense_triangulations(
    const LatticePolygon& poly, bool foldable_only,
    const std::function<void(const Triangulation&)>& sink,
    int point_limit = default_enumeration_point_limit);

}  // namespace foldsig

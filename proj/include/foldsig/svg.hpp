#pragma once

#include <string>

#include "foldsig/triangulation.hpp"

namespace foldsig {

struct RenderOptions {
    bool edge_labels = false;  // boundary segment-type labels at edge midpoints
    int unit_px = 40;
};

/// Deterministic SVG: one polygon per triangle (filled by the 2-coloring
/// when the triangulation is foldable, uniform otherwise), lattice dots, and
/// optional boundary labels offset outward. Identical input and options
/// produce byte-identical output.
std::string render_svg(const Triangulation& t, const RenderOptions& options = {});

}  // namespace foldsig

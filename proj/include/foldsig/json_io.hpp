#pragma once

#include <string>
#include <vector>

#include "foldsig/generators.hpp"
#include "foldsig/polygon.hpp"
#include "foldsig/triangulation.hpp"
#include "foldsig/wronski.hpp"

namespace foldsig {

/// Polygon file: {"points": [[x,y], ...]}; the polygon is the hull.
LatticePolygon read_polygon_file(const std::string& path);
LatticePolygon parse_polygon_json(const std::string& text);

/// Triangulation file: {"points": [[x,y],...], "triangles": [[i,j,k],...]},
/// 0-based indices. Out-of-range indices are rejected; clockwise triangles
/// are reoriented with a warning by default and rejected when strict.
Triangulation read_triangulation_file(const std::string& path, bool strict = false,
                                      std::vector<std::string>* warnings = nullptr);
Triangulation parse_triangulation_json(const std::string& text, bool strict = false,
                                       std::vector<std::string>* warnings = nullptr);
std::string triangulation_to_json(const Triangulation& t);

/// Wronski input: {"triangulation": <path or inline object>,
/// "gamma_a": ["1","-1","2"], "gamma_b": ["1","3","5"]} with rationals as
/// integer or "p/q" strings.
struct WronskiInput {
    Triangulation triangulation;
    WronskiCoefficients gamma_a, gamma_b;
};
WronskiInput read_wronski_file(const std::string& path);

std::string solve_report_to_json(const SolveReport& rep);
std::string enumeration_report_to_json(const EnumerationReport& rep);
std::string polygon_to_json(const LatticePolygon& poly);

}  // namespace foldsig

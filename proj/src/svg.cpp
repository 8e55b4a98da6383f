#include "foldsig/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace foldsig {

namespace {

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // normalize -0
    return buf;
}

}  // namespace

std::string render_svg(const Triangulation& t, const RenderOptions& options) {
    ValidationReport v = validate(t);
    if (!v.is_valid) {
        throw Error(ErrorKind::InvalidInput, "render_svg: invalid triangulation");
    }

    FoldabilityResult fold = is_foldable(t);
    std::vector<TriangleColor> colors;
    if (fold.foldable) colors = two_coloring(t).color;

    Coord xmin = t.points[0].x, xmax = t.points[0].x;
    Coord ymin = t.points[0].y, ymax = t.points[0].y;
    for (const auto& p : t.points) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    const double u = options.unit_px;
    const double margin = u;
    auto px = [&](double x) { return (x - static_cast<double>(xmin)) * u + margin; };
    auto py = [&](double y) { return (static_cast<double>(ymax) - y) * u + margin; };
    const double width = (xmax - xmin) * u + 2 * margin;
    const double height = (ymax - ymin) * u + 2 * margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fixed2(width) + " " +
           fixed2(height) + "\">\n";

    for (size_t k = 0; k < t.triangles.size(); ++k) {
        const auto& tri = t.triangles[k];
        const char* fill = "#d9d9d9";
        if (fold.foldable) {
            fill = (colors[k] == TriangleColor::Black) ? "#808080" : "#ffffff";
        }
        out += "<polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            const auto& p = t.points[tri[i]];
            if (i) out += " ";
            out += fixed2(px(static_cast<double>(p.x))) + "," +
                   fixed2(py(static_cast<double>(p.y)));
        }
        out += "\" fill=\"";
        out += fill;
        out += "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }

    for (const auto& p : t.points) {
        out += "<circle cx=\"" + fixed2(px(static_cast<double>(p.x))) + "\" cy=\"" +
               fixed2(py(static_cast<double>(p.y))) + "\" r=\"4\" fill=\"#000000\"/>\n";
    }

    if (options.edge_labels) {
        MeshIndex mesh = MeshIndex::build(t);
        // directed boundary edges as they appear in their unique triangle,
        // so the region lies to the left and outward is to the right
        std::map<std::pair<int, int>, std::pair<int, int>> directed;
        for (const auto& e : mesh.boundary_edges) {
            int owner = mesh.edge_triangles.at(e).front();
            const auto& tri = t.triangles[owner];
            for (int i = 0; i < 3; ++i) {
                int a = tri[i], b = tri[(i + 1) % 3];
                if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) {
                    directed[e] = {a, b};
                }
            }
        }
        for (const auto& [e, dir] : directed) {
            const auto& a = t.points[dir.first];
            const auto& b = t.points[dir.second];
            double mx = (static_cast<double>(a.x) + static_cast<double>(b.x)) / 2;
            double my = (static_cast<double>(a.y) + static_cast<double>(b.y)) / 2;
            double dx = static_cast<double>(b.x - a.x);
            double dy = static_cast<double>(b.y - a.y);
            double len = std::sqrt(dx * dx + dy * dy);
            double ox = dy / len * 0.45, oy = -dx / len * 0.45;
            SegmentType ty = segment_type(a, b);
            out += "<text x=\"" + fixed2(px(mx + ox)) + "\" y=\"" + fixed2(py(my + oy)) +
                   "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
                   segment_type_name(ty) + "</text>\n";
        }
    }

    out += "</svg>\n";
    return out;
}

}  // namespace foldsig

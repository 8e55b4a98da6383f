#include "foldsig/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace foldsig {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::Parse, std::string(what) + ": malformed JSON");
    return j;
}

std::vector<LatticePoint> read_points(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + ": points must be an array");
    std::vector<LatticePoint> pts;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw Error(ErrorKind::Parse, std::string(what) + ": each point must be [x, y]");
        }
        Coord x = entry[0].get<std::int64_t>();
        Coord y = entry[1].get<std::int64_t>();
        if (x < -coord_limit || x > coord_limit || y < -coord_limit || y > coord_limit) {
            throw Error(ErrorKind::Parse, std::string(what) + ": coordinate exceeds limit");
        }
        pts.push_back({x, y});
    }
    return pts;
}

Triangulation triangulation_from_json(const json& j, bool strict,
                                      std::vector<std::string>* warnings) {
    if (!j.is_object() || !j.contains("points") || !j.contains("triangles")) {
        throw Error(ErrorKind::Parse, "triangulation: need \"points\" and \"triangles\"");
    }
    Triangulation t;
    t.points = read_points(j["points"], "triangulation");
    const int np = static_cast<int>(t.points.size());
    for (const auto& entry : j["triangles"]) {
        if (!entry.is_array() || entry.size() != 3) {
            throw Error(ErrorKind::Parse, "triangulation: each triangle must be [i, j, k]");
        }
        std::array<int, 3> tri{};
        for (int i = 0; i < 3; ++i) {
            if (!entry[i].is_number_integer()) {
                throw Error(ErrorKind::Parse, "triangulation: triangle indices must be integers");
            }
            long v = entry[i].get<long>();
            if (v < 0 || v >= np) {
                throw Error(ErrorKind::Parse,
                            "triangulation: index " + std::to_string(v) + " out of range");
            }
            tri[i] = static_cast<int>(v);
        }
        int o = orientation(t.points[tri[0]], t.points[tri[1]], t.points[tri[2]]);
        if (o < 0) {
            if (strict) {
                throw Error(ErrorKind::Parse, "triangulation: clockwise triangle in strict mode");
            }
            std::swap(tri[1], tri[2]);
            if (warnings) warnings->push_back("reoriented clockwise triangle");
        }
        t.triangles.push_back(tri);
    }
    return t;
}

WronskiCoefficients gamma_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw Error(ErrorKind::Parse, std::string(what) + ": expected 3 rational strings");
    }
    auto get = [&](int i) {
        if (j[i].is_string()) return parse_rational(j[i].get<std::string>());
        if (j[i].is_number_integer()) return Rat(j[i].get<long>());
        throw Error(ErrorKind::Parse, std::string(what) + ": entries must be strings or integers");
    };
    return {get(0), get(1), get(2)};
}

json interval_to_json(const IsolatingInterval& iv) {
    return json{{"lo", rational_to_string(iv.lo)},
                {"hi", rational_to_string(iv.hi)},
                {"exact", iv.exact_hit}};
}

}  // namespace

LatticePolygon parse_polygon_json(const std::string& text) {
    json j = parse(text, "polygon");
    if (!j.is_object() || !j.contains("points")) {
        throw Error(ErrorKind::Parse, "polygon: need \"points\"");
    }
    std::vector<LatticePoint> pts = read_points(j["points"], "polygon");
    return hull_of(pts);
}

LatticePolygon read_polygon_file(const std::string& path) {
    return parse_polygon_json(slurp(path));
}

Triangulation parse_triangulation_json(const std::string& text, bool strict,
                                       std::vector<std::string>* warnings) {
    return triangulation_from_json(parse(text, "triangulation"), strict, warnings);
}

Triangulation read_triangulation_file(const std::string& path, bool strict,
                                      std::vector<std::string>* warnings) {
    return parse_triangulation_json(slurp(path), strict, warnings);
}

std::string triangulation_to_json(const Triangulation& t) {
    json points = json::array();
    for (const auto& p : t.points) points.push_back({p.x, p.y});
    json triangles = json::array();
    for (const auto& tri : t.triangles) triangles.push_back({tri[0], tri[1], tri[2]});
    json j{{"points", points}, {"triangles", triangles}};
    return j.dump(1);
}

std::string polygon_to_json(const LatticePolygon& poly) {
    json points = json::array();
    for (const auto& p : poly.vertices) points.push_back({p.x, p.y});
    return json{{"points", points}}.dump(1);
}

WronskiInput read_wronski_file(const std::string& path) {
    json j = parse(slurp(path), "wronski");
    if (!j.is_object() || !j.contains("triangulation") || !j.contains("gamma_a") ||
        !j.contains("gamma_b")) {
        throw Error(ErrorKind::Parse, "wronski: need \"triangulation\", \"gamma_a\", \"gamma_b\"");
    }
    WronskiInput in;
    if (j["triangulation"].is_string()) {
        std::string tpath = j["triangulation"].get<std::string>();
        // relative paths resolve against the input file's directory
        auto slash = path.find_last_of('/');
        if (slash != std::string::npos && !tpath.empty() && tpath[0] != '/') {
            tpath = path.substr(0, slash + 1) + tpath;
        }
        in.triangulation = read_triangulation_file(tpath);
    } else {
        in.triangulation = triangulation_from_json(j["triangulation"], false, nullptr);
    }
    in.gamma_a = gamma_from_json(j["gamma_a"], "gamma_a");
    in.gamma_b = gamma_from_json(j["gamma_b"], "gamma_b");
    return in;
}

std::string solve_report_to_json(const SolveReport& rep) {
    json boxes = json::array();
    for (const auto& box : rep.real_solutions) {
        boxes.push_back({{"x", interval_to_json(box.x)}, {"y", interval_to_json(box.y)}});
    }
    json j{{"kushnirenko_number", rep.kushnirenko_number},
           {"torus_solution_count", rep.torus_solution_count},
           {"real_count", rep.real_count},
           {"real_solutions", boxes},
           {"generic", rep.generic},
           {"axis_solutions", rep.axis_solutions},
           {"notes", rep.notes}};
    return j.dump(1);
}

std::string enumeration_report_to_json(const EnumerationReport& rep) {
    json hist = json::array();
    for (const auto& [sig, count] : rep.signature_histogram) hist.push_back({sig, count});
    json points = json::array();
    for (const auto& p : rep.polygon.vertices) points.push_back({p.x, p.y});
    json j{{"polygon", {{"points", points}}},
           {"total_dense_count", rep.total_dense_count},
           {"foldable_count", rep.foldable_count},
           {"signature_histogram", hist}};
    return j.dump(1);
}

}  // namespace foldsig

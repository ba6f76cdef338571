#include "etri/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "etri/analysis.hpp"

namespace etri {

std::string to_json_text(const Surface& s) {
    nlohmann::ordered_json j;
    j["kind"] = s.is_closed() ? "closed" : "patch";
    j["vertices"] = s.num_vertices();
    j["triangles"] = s.sorted_triangles();
    if (!s.is_closed()) j["boundary"] = s.boundary();
    std::vector<int> deg;
    for (int v = 1; v <= s.num_vertices(); ++v) deg.push_back(s.degree(v));
    j["degrees"] = deg;
    j["elliptic"] = is_elliptic(s);
    if (is_elliptic(s)) {
        Signature g = classify(s);
        j["a3"] = g.a3;
        j["a4"] = g.a4;
        j["a5"] = g.a5;
        j["a6"] = g.a6;
        if (!s.is_closed()) {
            j["b"] = g.b;
            j["beta4"] = g.beta4;
            j["beta5"] = g.beta5;
        }
        j["notation"] = g.notation();
    }
    return j.dump(2) + "\n";
}

namespace {

// Outer cycle pinned on a circle, every other point moved to the average of
// its neighbours (Gauss-Seidel, fixed sweep count so output is stable).
std::vector<std::pair<double, double>> tutte(const Surface& s) {
    const int n = s.num_vertices();
    std::vector<int> outer;
    if (s.is_closed()) {
        Tri f = s.triangles().front();
        outer = {f[0], f[1], f[2]};
    } else {
        outer = s.boundary();
    }
    std::vector<std::pair<double, double>> xy(n + 1, {0.0, 0.0});
    std::vector<char> pinned(n + 1, 0);
    const double pi = std::acos(-1.0);
    for (size_t i = 0; i < outer.size(); ++i) {
        double a = 2 * pi * static_cast<double>(i) / static_cast<double>(outer.size());
        xy[outer[i]] = {std::cos(a), std::sin(a)};
        pinned[outer[i]] = 1;
    }
    for (int sweep = 0; sweep < 500; ++sweep)
        for (int v = 1; v <= n; ++v) {
            if (pinned[v]) continue;
            double x = 0, y = 0;
            for (int w : s.neighbors(v)) {
                x += xy[w].first;
                y += xy[w].second;
            }
            double d = static_cast<double>(s.neighbors(v).size());
            xy[v] = {x / d, y / d};
        }
    return xy;
}

}  // namespace

std::string to_off(const Surface& s) {
    auto xy = tutte(s);
    std::ostringstream o;
    o << "OFF\n" << s.num_vertices() << ' ' << s.num_triangles() << ' ' << s.num_edges() << '\n';
    char buf[64];
    for (int v = 1; v <= s.num_vertices(); ++v) {
        std::snprintf(buf, sizeof buf, "%.6f %.6f 0\n", xy[v].first, xy[v].second);
        o << buf;
    }
    for (const auto& f : s.triangles()) o << "3 " << f[0] - 1 << ' ' << f[1] - 1 << ' ' << f[2] - 1 << '\n';
    return o.str();
}

std::string export_surface(const Surface& s, const std::string& format) {
    if (format == "facelist") return serialize(s);
    if (format == "json") return to_json_text(s);
    if (format == "off") return to_off(s);
    throw Error(Err::UnsupportedFormat, "unknown format '" + format + "' (facelist, json, off)");
}

}  // namespace etri

#include "etri/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "etri/patch_builder.hpp"

namespace etri {

long ParamVector::curvature() const {
    long s = 0;
    for (auto [d, c] : alpha) s += (6 - d) * c;
    return s;
}

std::string Signature::type_tuple() const {
    std::ostringstream os;
    os << "(" << a3 << "," << a4 << "," << a5 << ")";
    return os.str();
}

std::string Signature::notation() const {
    std::ostringstream os;
    os << "(" << a3 << "," << a4 << "," << a5 << "," << a6 << ")";
    if (!closed) os << "_" << b << " β4=" << beta4 << " β5=" << beta5;
    return os.str();
}

int degree(const Surface& s, int v) { return s.degree(v); }

ParamVector parameters(const Surface& s) {
    ParamVector p;
    for (int v = 1; v <= s.num_vertices(); ++v) ++p.alpha[s.degree(v)];
    p.f1 = s.num_vertices();
    p.f2 = s.num_edges();
    p.f3 = s.num_triangles();
    p.euler = p.f1 - p.f2 + p.f3;
    return p;
}

bool is_elliptic(const Surface& s) {
    for (int v = 1; v <= s.num_vertices(); ++v)
        if (s.degree(v) > 6) return false;
    return true;
}

std::vector<int> boundary_degrees(const Surface& s) {
    std::vector<int> out;
    for (int v : s.boundary()) out.push_back(s.degree(v));
    return out;
}

Signature classify(const Surface& s) {
    std::string bad;
    Signature sig;
    sig.closed = s.is_closed();
    for (int v = 1; v <= s.num_vertices(); ++v) {
        int d = s.degree(v);
        switch (d) {
            case 3: ++sig.a3; break;
            case 4: ++sig.a4; break;
            case 5: ++sig.a5; break;
            case 6: ++sig.a6; break;
            default: bad += " " + std::to_string(v) + "(" + std::to_string(d) + ")";
        }
    }
    if (!bad.empty()) throw Error(Err::NotElliptic, "vertices" + bad);
    if (!sig.closed) {
        sig.b = s.boundary_length();
        sig.boundary_degrees = boundary_degrees(s);
        for (int d : sig.boundary_degrees) {
            if (d == 4) ++sig.beta4;
            if (d == 5) ++sig.beta5;
        }
    }
    return sig;
}

std::vector<SpecialPoint> boundary_profile(const Surface& s) {
    std::vector<SpecialPoint> out;
    const auto& bd = s.boundary();
    const int b = static_cast<int>(bd.size());
    for (int i = 0; i < b; ++i) {
        int d = s.degree(bd[i]);
        if (d < 6) out.push_back({i, bd[i], d, 0});
    }
    for (size_t j = 0; j < out.size(); ++j) {
        int nxt = out[(j + 1) % out.size()].index;
        int gap = nxt - out[j].index;
        if (gap <= 0) gap += b;
        out[j].gap = gap;
    }
    return out;
}

int boundary_graph_distance(const Surface& s, int v) {
    std::vector<int> dist(s.num_vertices() + 1, -1);
    std::deque<int> q;
    for (int b : s.boundary()) {
        dist[b] = 0;
        q.push_back(b);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : s.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist[v];
}

DistanceResult interior_distance(const Surface& patch, int v) {
    if (patch.is_closed()) throw Error(Err::KindMismatch, "interior_distance needs a patch");
    if (!patch.has_vertex(v)) throw Error(Err::UnknownVertex, std::to_string(v));
    if (patch.on_boundary(v)) throw Error(Err::VertexOnBoundary, std::to_string(v));
    DistanceResult res;
    res.graph_distance = boundary_graph_distance(patch, v);
    Surface P = patch;
    int x = v;
    int rounds = 0;
    while (true) {
        // cut every corner that can be cut
        bool cut = true;
        while (cut) {
            cut = false;
            for (int c : P.boundary()) {
                if (P.degree(c) != 4) continue;
                try {
                    auto r = cut_corner_tracked(P, c);
                    x = r.old_to_new[x];
                    P = std::move(r.patch);
                    cut = true;
                    break;
                } catch (const Error&) {
                }
            }
        }
        bool all6 = true;
        for (int b : P.boundary())
            if (P.degree(b) != 6) all6 = false;
        if (!all6) break;
        PeelResult pr = peel_belt(P);
        ++rounds;
        if (pr.shape != PeelResult::Shape::Patch) break;
        x = pr.old_to_new[x];
        P = *pr.patch;
        if (P.on_boundary(x)) {
            res.k = rounds;
            return res;
        }
    }
    res.k = res.graph_distance;
    res.approximate = true;
    return res;
}

}  // namespace etri

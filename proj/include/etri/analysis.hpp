#pragma once

#include <map>
#include <string>
#include <vector>

#include "etri/surface.hpp"

namespace etri {

struct ParamVector {
    std::map<int, long> alpha;  // degree -> count, every degree present
    long f1 = 0, f2 = 0, f3 = 0;
    long euler = 0;
    long a(int d) const {
        auto it = alpha.find(d);
        return it == alpha.end() ? 0 : it->second;
    }
    // sum over d of (6-d) * alpha_d
    long curvature() const;
};

struct Signature {
    bool closed = true;
    int a3 = 0, a4 = 0, a5 = 0;
    long a6 = 0;
    int b = 0;
    int beta4 = 0, beta5 = 0;
    std::vector<int> boundary_degrees;
    // (a3,a4,a5,a6) or (a3,a4,a5,a6)_b b4=.. b5=..
    std::string notation() const;
    std::string type_tuple() const;
    bool same_cell(const Signature& o) const {
        return closed == o.closed && a3 == o.a3 && a4 == o.a4 && a5 == o.a5 && a6 == o.a6 && b == o.b;
    }
};

int degree(const Surface& s, int v);
ParamVector parameters(const Surface& s);
// Throws NotElliptic listing the offending vertices.
Signature classify(const Surface& s);
bool is_elliptic(const Surface& s);

// boundary degrees cyclically, starting at boundary()[0]
std::vector<int> boundary_degrees(const Surface& s);

// Cyclic boundary profile: positions (indices into boundary()) of the points
// with degree < 6 and the number of edges to the next such point.
struct SpecialPoint {
    int index = 0;
    int vertex = 0;
    int degree = 0;
    int gap = 0;
};
std::vector<SpecialPoint> boundary_profile(const Surface& s);

struct DistanceResult {
    int k = 0;
    bool approximate = false;
    int graph_distance = 0;  // BFS distance to the boundary, for cross-checking
};

// Rounds of corner cutting plus belt peeling needed to bring v to the
// boundary. Falls back to graph distance (flagged approximate) when the
// peeling process gets stuck.
DistanceResult interior_distance(const Surface& patch, int v);

// plain graph distance from v to the nearest boundary vertex
int boundary_graph_distance(const Surface& patch, int v);

}  // namespace etri

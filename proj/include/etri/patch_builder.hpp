#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "etri/analysis.hpp"
#include "etri/formulas.hpp"
#include "etri/surface.hpp"

namespace etri {

// A disc described by its triangles and a closed boundary walk. Unlike a
// Surface the walk may revisit vertices and the triangle list may be empty;
// this covers the degenerate (2,0,0) path core.
struct Piece {
    int n = 0;
    std::vector<Tri> tris;
    std::vector<int> rim;

    static Piece from(const Surface& s);
    Surface surface() const;  // requires a genuine disc
};

Surface add_belt(const Surface& p);
Surface add_belts(const Surface& p, int m);
Piece add_belt(const Piece& p);

struct PeelResult {
    enum class Shape { Patch, Graph, Points, Empty };
    Shape shape = Shape::Empty;
    std::optional<Surface> patch;
    std::vector<int> vertices;                 // surviving old ids
    std::vector<std::pair<int, int>> edges;    // surviving old edges
    std::vector<int> old_to_new;               // 0 for removed vertices
};

// Requires every boundary point to have degree 6.
PeelResult peel_belt(const Surface& p);

struct TrackedPatch {
    Surface patch;
    std::vector<int> old_to_new;
};

Surface cut_corner(const Surface& p, int x);
TrackedPatch cut_corner_tracked(const Surface& p, int x);

// Lattice triangle with points (i,j), i,j >= 0, g <= i+j <= h.
struct Lattice {
    int h = 0, g = 0;
    std::map<std::pair<int, int>, int> id;
    std::vector<Tri> tris;
    int at(int i, int j) const { return id.at({i, j}); }
    bool has(int i, int j) const { return id.count({i, j}) > 0; }
};
Lattice make_lattice(int h, int g = 0);

Surface tessellation(int h);

struct Truncation {
    Surface patch;
    // vertex ids along each side, in lattice order
    std::vector<int> lower, upper, left, right;
};
Truncation truncate(int k, int g);

// Generic gluing of parts along vertex sequences identified pointwise.
struct AssemblySpec {
    struct Part {
        std::string name;
        std::vector<Tri> tris;
    };
    struct Identification {
        int part_a = 0;
        std::vector<int> seg_a;
        int part_b = 0;
        std::vector<int> seg_b;
    };
    std::vector<Part> parts;
    std::vector<Identification> identifications;
};
struct Assembly {
    Surface patch;
    // part index, local vertex -> glued id
    std::vector<std::map<int, int>> where;
};
Assembly assemble(const AssemblySpec& spec);

struct Build030 {
    Surface patch;
    int beta4 = 0;
    // edge counts of the boundary parts between consecutive boundary
    // points of degree 4, starting after the first one
    std::vector<int> parts;
};

// (h,0,0): tessellation P_h.  (h,k,0) with 0<k<h: [0,0,k].
// (h,k,l) with 0<l<=k<h: [0,l,k].
Build030 build_030(int h, int k, int l);

// Type (2,0,0): a path with k-1 inner points surrounded by r belts.
// For r = 0 the result has no triangles.
Piece build_200(int k, int r);
Signature signature_200(int k, int r);

// Remove the triangles spanned by the points within graph distance g of a
// corner; the removed region must be a copy of P_g.
struct CornerCut {
    Surface patch;
    std::vector<int> old_to_new;
    int end_before = 0;  // new ids of the two ends of the cut line
    int end_after = 0;
};
CornerCut truncate_corner(const Surface& p, int corner, int g);

struct TruncatedPatch {
    int type = 0;
    Surface patch;
    std::map<std::string, int> params;    // construction inputs
    std::map<std::string, int> measured;  // boundary segment lengths read off the patch
};
TruncatedPatch truncate_type(int type, const std::map<std::string, int>& params);

// gaps between consecutive boundary points of degree < 6, walking from the
// special point `start` towards its boundary neighbour `toward`
std::vector<int> measure_boundary(const Surface& p, int start, int toward);

// One layer around the patch: a belt in which every vertex of keep4 stays a
// degree-4 corner and every vertex of push5 stays a degree-5 point.
Surface enlarge_layer(const Surface& p, const std::set<int>& keep4, const std::set<int>& push5);
Surface generic_enlarge(const Surface& p, int use_b4, int use_b5);

// A straight path between boundary points along which a strip can be inserted.
struct StripPath {
    std::vector<int> path;
    int dir = 1;  // rotation direction identifying side A
};
std::vector<StripPath> strip_paths(const Surface& p);
Surface insert_strip(const Surface& p, const StripPath& sp, int rows);

Surface family_patch(char family, int k, int m);

}  // namespace etri

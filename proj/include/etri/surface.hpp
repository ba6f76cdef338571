#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace etri {

using Tri = std::array<int, 3>;

enum class Kind { Closed, Patch };

enum class Err {
    MalformedToken,
    NonManifoldEdge,
    BrokenLink,
    Disconnected,
    BoundaryNotSingleCycle,
    NotSphereOrDisc,
    KindMismatch,
    UnknownVertex,
    NotElliptic,
    VertexOnBoundary,
    Domain,
    BoundaryDegreeNotSix,
    NotDegree4Corner,
    ForbiddenChord,
    InsufficientBoundaryPoints,
    FamilyWitnessUnavailable,
    StaleSite,
    BoundaryLengthMismatch,
    PlacementUnsatisfied,
    InvalidTriangleChoice,
    UnknownEntry,
    CapExceeded,
    NotATypeTuple,
    UnsupportedFormat,
};

const char* err_name(Err e);
// 2 for malformed/invalid input, 3 for everything else
int err_exit_code(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg);
    Err code() const { return code_; }

private:
    Err code_;
};

// Oriented triangulation of the sphere or of a closed disc.
// Vertices are 1..n. Triangles are stored with a consistent orientation,
// and for a patch the boundary cycle runs along the triangle orientation:
// every pair (boundary[i], boundary[i+1]) is a directed edge of some triangle.
class Surface {
public:
    Surface() = default;

    // Labels may be arbitrary positive integers; they are compacted in
    // increasing order. Throws Error on invalid input.
    static Surface from_triangles(const std::vector<Tri>& tris,
                                  const std::optional<std::vector<int>>& boundary = std::nullopt);

    Kind kind() const { return kind_; }
    bool is_closed() const { return kind_ == Kind::Closed; }
    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(tris_.size() * 3 + boundary_.size()) / 2; }
    int num_triangles() const { return static_cast<int>(tris_.size()); }
    int boundary_length() const { return static_cast<int>(boundary_.size()); }

    const std::vector<Tri>& triangles() const { return tris_; }
    const std::vector<int>& boundary() const { return boundary_; }
    bool on_boundary(int v) const { return on_boundary_[v]; }

    // Neighbours of v in rotation order. For a boundary vertex the sequence is
    // linear: it starts at the next boundary vertex and ends at the previous one.
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    bool adjacent(int u, int v) const;
    // w such that (u,v,w) is an oriented triangle, 0 if none
    int third(int u, int v) const;
    // degree with the boundary convention (incident edges + 2 on the boundary)
    int degree(int v) const;
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

    // Triangles with each triple sorted, the list sorted.
    std::vector<Tri> sorted_triangles() const;

    // Same surface with every triangle reversed.
    Surface mirrored() const;
    // Relabel vertex v as perm[v] (perm is 1-based, perm[0] ignored).
    Surface relabeled(const std::vector<int>& perm) const;

private:
    void build_derived();
    static uint64_t key(int u, int v) { return (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v); }

    Kind kind_ = Kind::Closed;
    int n_ = 0;
    std::vector<Tri> tris_;
    std::vector<int> boundary_;
    std::vector<char> on_boundary_;
    std::vector<std::vector<int>> rot_;
    std::unordered_map<uint64_t, int> third_;
};

struct CheckItem {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckItem> items;
    bool ok() const;
    std::string text() const;
};

ValidationReport validate_triangles(const std::vector<Tri>& tris,
                                    const std::optional<std::vector<int>>& boundary = std::nullopt);
ValidationReport validate(const Surface& s);

// Parsed face-list document before validation.
struct FaceList {
    std::vector<std::pair<std::string, std::string>> headers;
    std::vector<Tri> triangles;
    std::optional<std::vector<int>> boundary;
};

int vertex_from_char(char c);   // '1'..'9','A'..'Z'; -1 otherwise
char vertex_to_char(int v);     // inverse, 0 when out of range

FaceList parse_face_list_raw(const std::string& text);
Surface parse_face_list(const std::string& text);

// Canonical text: triangles sorted, letters iff f1 <= 35.
std::string serialize(const Surface& s, const std::vector<std::pair<std::string, std::string>>& headers = {});
std::string triangle_tokens(const Surface& s);
std::string boundary_token(const Surface& s);

struct CanonicalCode {
    std::vector<int> code;
    bool reflections_identified = true;
    bool operator==(const CanonicalCode& o) const {
        return code == o.code && reflections_identified == o.reflections_identified;
    }
    bool operator<(const CanonicalCode& o) const { return code < o.code; }
    std::string hex() const;
};

CanonicalCode canonical_code(const Surface& s, bool identify_reflections = true);

// All vertex labelings achieving the canonical code: labeling[v] is the
// canonical number of v (1-based). A patch's virtual apex is not included.
std::vector<std::vector<int>> optimal_labelings(const Surface& s, bool identify_reflections = true);

bool is_isomorphic(const Surface& a, const Surface& b, bool identify_reflections = true);

}  // namespace etri

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "etri/patch_builder.hpp"
#include "etri/surface.hpp"

namespace etri {

enum class RewriteKind { M1, M2, P1, P2, A, B1, B2, C, D, E1, E2, E3, G };

const char* kind_name(RewriteKind k);
// Throws Domain for an unknown name.
RewriteKind kind_from_name(const std::string& name);
std::vector<RewriteKind> all_kinds();
bool self_reproductive(RewriteKind k);

struct RewriteSite {
    RewriteKind kind = RewriteKind::A;
    int stage = 0;                  // 1..3 for E3, 0 otherwise
    std::string roles;              // role letters in order, e.g. "vwxyz"
    std::vector<int> vertices;      // one vertex per role
    std::string required_degrees;   // per role: digit, or '*' when unconstrained

    std::set<int> vertex_set() const { return {vertices.begin(), vertices.end()}; }
    int at(char role) const;
    std::string text() const;       // e.g. "C v=2 w=3 ..."
};

// (d_alpha3, d_alpha4, d_alpha5, d_alpha6)
std::array<int, 4> rewrite_delta(RewriteKind k, int stage = 0);

// Sites deduplicated by the triangles they remove and add.
std::vector<RewriteSite> find_sites(const Surface& t, RewriteKind kind);
// Sites of the kind on exactly this vertex set.
std::vector<RewriteSite> find_sites_on(const Surface& t, RewriteKind kind, const std::set<int>& vertices);

struct RewriteOutcome {
    Surface surface;
    std::map<char, int> labels;            // roles and new points
    std::optional<RewriteSite> successor;  // for self-reproductive kinds
};

// Throws StaleSite when the tuple no longer matches its pattern.
RewriteOutcome apply_rewrite_tracked(const Surface& t, const RewriteSite& site);
Surface apply_rewrite(const Surface& t, const RewriteSite& site);

// New points x_s per triangle s; triangles {x, x_s, x_t} for s,t sharing an edge.
Surface face_fullering(const Surface& t);
// Every triangle split into four through the edge midpoints. Works on patches.
Surface edge_fullering(const Surface& t);

struct GlueResult {
    Surface surface;
    int offset = 0;
    bool reflected = false;
    bool elliptic = true;
    std::string diagnostic;
};

struct Alignment {
    int offset = 0;
    bool reflected = false;
};

// m belts around p1, then a zigzag strip of 2b triangles to p2. Without an
// alignment all 2b are tried and the first elliptic result is returned.
GlueResult glue_strip(const Surface& p1, const Surface& p2, int m,
                      const std::optional<Alignment>& alignment = std::nullopt);

// Same on pieces, so the bare (2,0,0) path can take part. Alignments that
// do not give a sphere are skipped; throws Domain when none does.
GlueResult glue_strip(const Piece& p1, const Piece& p2, int m,
                      const std::optional<Alignment>& alignment = std::nullopt);

enum class GlueMethod { A, B, C };
// Two (1,1,1) patches glued into a (2,3,0) triangulation by inserting a
// degree-4 point on the edge opposite both degree-5 points.
GlueResult glue_method(const Surface& p1, const Surface& p2, GlueMethod method,
                       const std::optional<Alignment>& alignment = std::nullopt);

// tri1 must be a face of t1 and tri2 a face of t2; tri1[i] is identified with tri2[i].
Surface connected_sum(const Surface& t1, const Tri& tri1, const Surface& t2, const Tri& tri2);

// New point on edge uw, adjacent to u, w and the two opposite points.
Surface split_edge(const Surface& t, int u, int w);

}  // namespace etri

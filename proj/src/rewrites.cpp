#include "etri/rewrites.hpp"

#include <algorithm>
#include <sstream>

#include "etri/analysis.hpp"
#include "etri/patch_builder.hpp"

namespace etri {

namespace {

struct Def {
    RewriteKind kind;
    int stage;
    const char* roles;
    const char* tris;
    const char* degs;
    const char* removed;
    const char* added;
    const char* fresh;
    std::array<int, 4> delta;
    int exact;  // triangles of T inside the vertex set, -1 when unchecked
    RewriteKind succ;
    int succ_stage;
    const char* succ_word;  // empty for kinds without a successor
};

constexpr const char* kHex = "puv pvw pwx pxy pyz pzu";

// Left free because the rewrite never changes them and the known hosts need
// it: y,z of B1 (octahedron) and v,x,z of G. B1 also skips the four-triangle
// count, which fails on the bipyramid host.
const std::vector<Def>& defs() {
    using K = RewriteKind;
    static const std::vector<Def> d = {
        {K::M1, 0, "xyz", "xyz", "555", "xyz", "pxy pxz pyz", "p", {1, 0, -3, 3}, -1, K::M1, 0, ""},
        {K::M2, 0, "xyz", "xyz", "545", "xyz", "pxy pxz pyz", "p", {1, -1, -1, 2}, -1, K::M2, 0, ""},
        {K::P1, 0, "pxqy", "pxy qxy", "4656", "pxy qxy", "pxz pyz qxz qyz", "z", {0, 0, 0, 1}, -1, K::P1, 0, ""},
        {K::P2, 0, "uvwpxyz", "upv vpw wpx xpy ypz upz", "5646454", "upv vpw", "upq uqv pqw qvw", "q",
         {0, 0, 0, 1}, -1, K::P2, 0, ""},
        {K::A, 0, "xyz", "xyz", "345", "xyz", "pxy pxz pyz", "p", {0, 0, 0, 1}, -1, K::A, 0, "pxy"},
        {K::B1, 0, "vwxyz", "vxy vxz wxy wxz", "444**", "vxy vxz wxy wxz", "vpx vpy vqx vqz wpx wpy wqx wqz",
         "pq", {0, 0, 0, 2}, -1, K::B1, 0, "pqvwx"},
        {K::B2, 0, "vwxy", "vwx vwy", "4455", "vwx vwy", "vqx vpq vpy wqx wpq wpy", "pq", {0, 0, 0, 2}, 2, K::B2, 0,
         "pwqv"},
        {K::C, 0, "vwxyz", "vwx wxy xyz", "54555", "wxy xyz", "wpx wpy pxz pyz", "p", {0, 0, 0, 1}, -1, K::C, 0,
         "pywvx"},
        {K::D, 0, "puvwxyz", kHex, "6465555", "puv pvw", "pqu pqw quv qvw", "q", {0, 0, 0, 1}, -1, K::D, 0,
         "pqwxyzu"},
        {K::E1, 0, "puvwxyz", kHex, "6456456", "pvw pwx", "pqv pqx qvw qxw", "q", {0, 0, 0, 1}, -1, K::E2, 0,
         "pqvuzyx"},
        {K::E2, 0, "puvwxyz", kHex, "6464556", "pyz pzu", "pqy pqu qyz qzu", "q", {0, 0, 0, 1}, -1, K::E1, 0,
         "pquvwxy"},
        {K::E3, 1, "puvwxyz", kHex, "6456465", "pvw pwx", "pqv pqx qvw qxw", "q", {0, 0, 0, 1}, -1, K::E3, 2,
         "pqvuzyx"},
        {K::E3, 2, "puvwxyz", kHex, "6464565", "pvw puv", "puq quv pwq qvw", "q", {0, -1, 2, 0}, -1, K::E3, 3,
         "pqwxyzu"},
        {K::E3, 3, "puvwxyz", kHex, "6545565", "pzy pyx", "pqz qyz pqx qyx", "q", {0, 1, -2, 2}, -1, K::E3, 1,
         "pqzuvwx"},
        {K::G, 0, "puvwxyz", kHex, "64*4*4*", kHex,
         "upq uqv pqw qvw psw psy sxw sxy pur pry ruz ryz", "qsr", {0, 0, 0, 3}, -1, K::G, 0, "pqwsyru"},
    };
    return d;
}

const Def& def_of(RewriteKind k, int stage) {
    for (const auto& d : defs())
        if (d.kind == k && d.stage == stage) return d;
    throw Error(Err::Domain, std::string("no rewrite ") + kind_name(k) + " stage " + std::to_string(stage));
}

std::vector<std::string> words(const char* s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

bool is_face(const Surface& t, int a, int b, int c) { return t.third(a, b) == c || t.third(b, a) == c; }

int count_inside(const Surface& t, const std::set<int>& x) {
    int c = 0;
    for (const auto& f : t.triangles())
        if (x.count(f[0]) && x.count(f[1]) && x.count(f[2])) ++c;
    return c;
}

// Role order in which every role after the first shares a triangle with an
// earlier one; anchor[i] is that earlier role.
struct Plan {
    std::string order;
    std::vector<int> anchor;
};

Plan plan_for(const Def& d) {
    Plan p;
    std::string roles = d.roles;
    auto tris = words(d.tris);
    p.order.push_back(roles[0]);
    p.anchor.push_back(-1);
    while (p.order.size() < roles.size()) {
        bool grown = false;
        for (char r : roles) {
            if (p.order.find(r) != std::string::npos) continue;
            for (const auto& w : tris) {
                if (w.find(r) == std::string::npos) continue;
                for (char o : w) {
                    auto at = p.order.find(o);
                    if (o != r && at != std::string::npos) {
                        p.order.push_back(r);
                        p.anchor.push_back(static_cast<int>(at));
                        grown = true;
                        break;
                    }
                }
                if (grown) break;
            }
            if (grown) break;
        }
        if (!grown) throw Error(Err::Domain, "disconnected rewrite pattern");
    }
    return p;
}

int role_index(const Def& d, char r) { return static_cast<int>(std::string(d.roles).find(r)); }

bool degree_ok(const Surface& t, const Def& d, int role, int v) {
    char c = d.degs[role];
    return c == '*' || degree(t, v) == c - '0';
}

bool tuple_matches(const Surface& t, const Def& d, const std::vector<int>& vs) {
    const int n = static_cast<int>(std::string(d.roles).size());
    if (static_cast<int>(vs.size()) != n) return false;
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
        if (!t.has_vertex(vs[i]) || !seen.insert(vs[i]).second) return false;
        if (!degree_ok(t, d, i, vs[i])) return false;
    }
    for (const auto& w : words(d.tris))
        if (!is_face(t, vs[role_index(d, w[0])], vs[role_index(d, w[1])], vs[role_index(d, w[2])])) return false;
    if (d.exact >= 0 && count_inside(t, seen) != d.exact) return false;
    return true;
}

// pattern and removed triangles, then the added ones with the new points in
// every order; tuples related by a symmetry of the pattern share the key
std::vector<Tri> rewrite_key(const Def& d, const std::vector<int>& vs, int n) {
    std::map<char, int> lab;
    for (size_t i = 0; i < vs.size(); ++i) lab[d.roles[i]] = vs[i];
    std::vector<Tri> removed;
    for (const auto& w : words(d.tris)) {
        Tri f{lab[w[0]], lab[w[1]], lab[w[2]]};
        std::sort(f.begin(), f.end());
        removed.push_back(f);
    }
    for (const auto& w : words(d.removed)) {
        Tri f{lab[w[0]], lab[w[1]], lab[w[2]]};
        std::sort(f.begin(), f.end());
        removed.push_back(f);
    }
    std::sort(removed.begin(), removed.end());
    std::string fresh = d.fresh;
    std::vector<int> perm(fresh.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::vector<Tri> best;
    do {
        for (size_t i = 0; i < fresh.size(); ++i) lab[fresh[i]] = n + 1 + perm[i];
        std::vector<Tri> added;
        for (const auto& w : words(d.added)) {
            Tri f{lab[w[0]], lab[w[1]], lab[w[2]]};
            std::sort(f.begin(), f.end());
            added.push_back(f);
        }
        std::sort(added.begin(), added.end());
        if (best.empty() || added < best) best = added;
    } while (std::next_permutation(perm.begin(), perm.end()));
    removed.insert(removed.end(), best.begin(), best.end());
    return removed;
}

void search(const Surface& t, const Def& d, const Plan& plan, std::vector<int>& assigned, size_t depth,
            std::vector<std::vector<int>>& out) {
    const size_t n = plan.order.size();
    if (depth == n) {
        std::vector<int> vs(n);
        for (size_t i = 0; i < n; ++i) vs[role_index(d, plan.order[i])] = assigned[i];
        if (tuple_matches(t, d, vs)) out.push_back(vs);
        return;
    }
    const int role = role_index(d, plan.order[depth]);
    std::vector<int> cand;
    if (plan.anchor[depth] < 0) {
        for (int v = 1; v <= t.num_vertices(); ++v) cand.push_back(v);
    } else {
        cand = t.neighbors(assigned[plan.anchor[depth]]);
    }
    for (int v : cand) {
        if (std::find(assigned.begin(), assigned.begin() + depth, v) != assigned.begin() + depth) continue;
        if (!degree_ok(t, d, role, v)) continue;
        assigned[depth] = v;
        // prune on triangles whose roles are all placed
        bool ok = true;
        for (const auto& w : words(d.tris)) {
            int a = -1, b = -1, c = -1;
            for (size_t i = 0; i <= depth; ++i) {
                if (plan.order[i] == w[0]) a = assigned[i];
                if (plan.order[i] == w[1]) b = assigned[i];
                if (plan.order[i] == w[2]) c = assigned[i];
            }
            if (a > 0 && b > 0 && c > 0 && !is_face(t, a, b, c)) {
                ok = false;
                break;
            }
        }
        if (ok) search(t, d, plan, assigned, depth + 1, out);
    }
}

RewriteSite make_site(const Def& d, const std::vector<int>& vs) {
    RewriteSite s;
    s.kind = d.kind;
    s.stage = d.stage;
    s.roles = d.roles;
    s.vertices = vs;
    s.required_degrees = d.degs;
    return s;
}

std::vector<RewriteSite> sites_for(const Surface& t, const Def& d) {
    std::vector<RewriteSite> out;
    if (!t.is_closed()) return out;
    Plan plan = plan_for(d);
    std::vector<int> assigned(plan.order.size(), 0);
    std::vector<std::vector<int>> found;
    search(t, d, plan, assigned, 0, found);
    std::set<std::vector<Tri>> keys;
    for (const auto& vs : found)
        if (keys.insert(rewrite_key(d, vs, t.num_vertices())).second) out.push_back(make_site(d, vs));
    return out;
}

}  // namespace

const char* kind_name(RewriteKind k) {
    switch (k) {
        case RewriteKind::M1: return "M1";
        case RewriteKind::M2: return "M2";
        case RewriteKind::P1: return "P1";
        case RewriteKind::P2: return "P2";
        case RewriteKind::A: return "A";
        case RewriteKind::B1: return "B1";
        case RewriteKind::B2: return "B2";
        case RewriteKind::C: return "C";
        case RewriteKind::D: return "D";
        case RewriteKind::E1: return "E1";
        case RewriteKind::E2: return "E2";
        case RewriteKind::E3: return "E3";
        case RewriteKind::G: return "G";
    }
    return "?";
}

std::vector<RewriteKind> all_kinds() {
    using K = RewriteKind;
    return {K::M1, K::M2, K::P1, K::P2, K::A, K::B1, K::B2, K::C, K::D, K::E1, K::E2, K::E3, K::G};
}

RewriteKind kind_from_name(const std::string& name) {
    for (auto k : all_kinds())
        if (name == kind_name(k)) return k;
    throw Error(Err::Domain, "unknown rewrite kind " + name);
}

bool self_reproductive(RewriteKind k) {
    using K = RewriteKind;
    return !(k == K::M1 || k == K::M2 || k == K::P1 || k == K::P2);
}

int RewriteSite::at(char role) const {
    auto i = roles.find(role);
    if (i == std::string::npos) throw Error(Err::Domain, std::string("no role ") + role);
    return vertices[i];
}

std::string RewriteSite::text() const {
    std::ostringstream o;
    o << kind_name(kind);
    if (stage) o << " stage " << stage;
    for (size_t i = 0; i < roles.size(); ++i) o << ' ' << roles[i] << '=' << vertices[i];
    return o.str();
}

std::array<int, 4> rewrite_delta(RewriteKind k, int stage) {
    if (k == RewriteKind::E3 && stage == 0) stage = 1;
    return def_of(k, stage).delta;
}

std::vector<RewriteSite> find_sites(const Surface& t, RewriteKind kind) {
    std::vector<RewriteSite> out;
    for (const auto& d : defs()) {
        if (d.kind != kind) continue;
        auto s = sites_for(t, d);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::vector<RewriteSite> find_sites_on(const Surface& t, RewriteKind kind, const std::set<int>& vertices) {
    std::vector<RewriteSite> out;
    for (auto& s : find_sites(t, kind))
        if (s.vertex_set() == vertices) out.push_back(s);
    return out;
}

RewriteOutcome apply_rewrite_tracked(const Surface& t, const RewriteSite& site) {
    int stage = site.stage;
    if (site.kind == RewriteKind::E3 && stage == 0) stage = 1;
    const Def& d = def_of(site.kind, stage);
    if (!t.is_closed() || !tuple_matches(t, d, site.vertices))
        throw Error(Err::StaleSite, site.text() + " does not match the triangulation");
    RewriteOutcome res;
    const int n = t.num_vertices();
    for (size_t i = 0; i < site.vertices.size(); ++i) res.labels[d.roles[i]] = site.vertices[i];
    std::string fresh = d.fresh;
    for (size_t i = 0; i < fresh.size(); ++i) res.labels[fresh[i]] = n + 1 + static_cast<int>(i);

    std::set<Tri> drop;
    for (const auto& w : words(d.removed)) {
        Tri f{res.labels[w[0]], res.labels[w[1]], res.labels[w[2]]};
        std::sort(f.begin(), f.end());
        drop.insert(f);
    }
    std::vector<Tri> tris;
    for (const auto& f : t.triangles()) {
        Tri s = f;
        std::sort(s.begin(), s.end());
        if (!drop.count(s)) tris.push_back(f);
    }
    for (const auto& w : words(d.added)) tris.push_back({res.labels[w[0]], res.labels[w[1]], res.labels[w[2]]});
    res.surface = Surface::from_triangles(tris);

    if (*d.succ_word) {
        std::set<int> want;
        for (const char* c = d.succ_word; *c; ++c) want.insert(res.labels[*c]);
        for (auto& s : sites_for(res.surface, def_of(d.succ, d.succ_stage)))
            if (s.vertex_set() == want) {
                res.successor = s;
                break;
            }
    }
    return res;
}

Surface apply_rewrite(const Surface& t, const RewriteSite& site) { return apply_rewrite_tracked(t, site).surface; }

Surface face_fullering(const Surface& t) {
    if (!t.is_closed()) throw Error(Err::KindMismatch, "face fullering needs a closed triangulation");
    const int n = t.num_vertices();
    std::map<Tri, int> id;  // sorted triangle -> new point
    for (const auto& f : t.triangles()) {
        Tri s = f;
        std::sort(s.begin(), s.end());
        id.emplace(s, n + 1 + static_cast<int>(id.size()));
    }
    auto face_id = [&](int a, int b, int c) {
        Tri s{a, b, c};
        std::sort(s.begin(), s.end());
        return id.at(s);
    };
    std::vector<Tri> tris;
    for (const auto& f : t.triangles())
        for (int i = 0; i < 3; ++i) {
            int x = f[i], y = f[(i + 1) % 3];
            if (x > y) continue;  // each edge once
            int s = face_id(f[0], f[1], f[2]);
            int o = t.third(y, x);
            int r = face_id(x, y, o);
            tris.push_back({x, r, s});
            tris.push_back({y, s, r});
        }
    return Surface::from_triangles(tris);
}

Surface edge_fullering(const Surface& t) {
    const int n = t.num_vertices();
    std::map<std::pair<int, int>, int> mid;
    auto m = [&](int a, int b) {
        auto k = std::minmax(a, b);
        auto it = mid.find(k);
        if (it != mid.end()) return it->second;
        int v = n + 1 + static_cast<int>(mid.size());
        mid.emplace(k, v);
        return v;
    };
    std::vector<Tri> tris;
    for (const auto& f : t.triangles()) {
        int a = f[0], b = f[1], c = f[2];
        int ab = m(a, b), bc = m(b, c), ca = m(c, a);
        tris.push_back({a, ab, ca});
        tris.push_back({ab, b, bc});
        tris.push_back({ca, bc, c});
        tris.push_back({ab, bc, ca});
    }
    if (t.is_closed()) return Surface::from_triangles(tris);
    std::vector<int> rim;
    const auto& bd = t.boundary();
    for (size_t i = 0; i < bd.size(); ++i) {
        rim.push_back(bd[i]);
        rim.push_back(m(bd[i], bd[(i + 1) % bd.size()]));
    }
    return Surface::from_triangles(tris, rim);
}

namespace {

void need_patch(const Surface& p) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "gluing needs patches");
}

// p2's vertices shifted by the vertex count of p1, strip added between rims
Surface zigzag(const Surface& p1, const Surface& p2, const Alignment& al) {
    const auto& a = p1.boundary();
    const auto& c0 = p2.boundary();
    const int b = static_cast<int>(a.size());
    const int shift = p1.num_vertices();
    std::vector<Tri> tris = p1.triangles();
    for (auto f : p2.triangles()) tris.push_back({f[0] + shift, f[1] + shift, f[2] + shift});
    std::vector<int> c(b);
    for (int i = 0; i < b; ++i) {
        int j = al.reflected ? al.offset - i : al.offset + i;
        c[i] = c0[((j % b) + b) % b] + shift;
    }
    for (int i = 0; i < b; ++i) {
        int i1 = (i + 1) % b;
        tris.push_back({a[i], a[i1], c[i]});
        tris.push_back({a[i1], c[i1], c[i]});
    }
    return Surface::from_triangles(tris);
}

std::vector<Alignment> alignments(int b, const std::optional<Alignment>& pinned) {
    if (pinned) {
        if (pinned->offset < 0 || pinned->offset >= b) throw Error(Err::Domain, "alignment offset out of range");
        return {*pinned};
    }
    std::vector<Alignment> out;
    for (int r = 0; r < 2; ++r)
        for (int o = 0; o < b; ++o) out.push_back({o, r == 1});
    return out;
}

std::string bad_degrees(const Surface& s) {
    std::ostringstream o;
    o << "degree above 6 at";
    for (int v = 1; v <= s.num_vertices(); ++v)
        if (degree(s, v) > 6) o << ' ' << v;
    return o.str();
}

}  // namespace

GlueResult glue_strip(const Surface& p1, const Surface& p2, int m, const std::optional<Alignment>& alignment) {
    need_patch(p1);
    need_patch(p2);
    if (m < 0) throw Error(Err::Domain, "m >= 0");
    if (p1.boundary_length() != p2.boundary_length())
        throw Error(Err::BoundaryLengthMismatch, std::to_string(p1.boundary_length()) + " vs " +
                                                     std::to_string(p2.boundary_length()));
    Surface q = add_belts(p1, m);
    std::optional<GlueResult> first;
    for (const auto& al : alignments(q.boundary_length(), alignment)) {
        GlueResult r;
        r.surface = zigzag(q, p2, al);
        r.offset = al.offset;
        r.reflected = al.reflected;
        r.elliptic = is_elliptic(r.surface);
        if (!r.elliptic) r.diagnostic = "NotElliptic: " + bad_degrees(r.surface);
        if (r.elliptic) return r;
        if (!first) first = r;
    }
    return *first;
}

GlueResult glue_strip(const Piece& p1, const Piece& p2, int m, const std::optional<Alignment>& alignment) {
    if (m < 0) throw Error(Err::Domain, "m >= 0");
    if (p1.rim.size() != p2.rim.size())
        throw Error(Err::BoundaryLengthMismatch,
                    std::to_string(p1.rim.size()) + " vs " + std::to_string(p2.rim.size()));
    Piece q = p1;
    for (int i = 0; i < m; ++i) q = add_belt(q);
    const int b = static_cast<int>(q.rim.size());
    std::optional<GlueResult> first;
    for (const auto& al : alignments(b, alignment)) {
        std::vector<Tri> tris = q.tris;
        for (auto f : p2.tris) tris.push_back({f[0] + q.n, f[1] + q.n, f[2] + q.n});
        std::vector<int> c(b);
        for (int i = 0; i < b; ++i) {
            int j = al.reflected ? al.offset - i : al.offset + i;
            c[i] = p2.rim[((j % b) + b) % b] + q.n;
        }
        for (int i = 0; i < b; ++i) {
            int i1 = (i + 1) % b;
            tris.push_back({q.rim[i], q.rim[i1], c[i]});
            tris.push_back({q.rim[i1], c[i1], c[i]});
        }
        if (!validate_triangles(tris).ok()) continue;
        GlueResult r;
        r.surface = Surface::from_triangles(tris);
        r.offset = al.offset;
        r.reflected = al.reflected;
        r.elliptic = is_elliptic(r.surface);
        if (r.elliptic) return r;
        r.diagnostic = "NotElliptic: " + bad_degrees(r.surface);
        if (!first) first = r;
    }
    if (!first) throw Error(Err::Domain, "no alignment closes the two pieces into a sphere");
    return *first;
}

Surface split_edge(const Surface& t, int u, int w) {
    int x = t.third(u, w), y = t.third(w, u);
    if (!x || !y) throw Error(Err::Domain, "not an interior edge");
    const int q = t.num_vertices() + 1;
    std::vector<Tri> tris;
    for (const auto& f : t.triangles()) {
        Tri s = f;
        std::sort(s.begin(), s.end());
        Tri s1{u, w, x}, s2{u, w, y};
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s != s1 && s != s2) tris.push_back(f);
    }
    tris.push_back({u, q, x});
    tris.push_back({q, w, x});
    tris.push_back({w, q, y});
    tris.push_back({q, u, y});
    return Surface::from_triangles(tris);
}

namespace {

int degree5_point(const Surface& p) {
    int hit = 0, count = 0;
    for (int v = 1; v <= p.num_vertices(); ++v)
        if (degree(p, v) == 5) {
            hit = v;
            ++count;
        }
    return count == 1 ? hit : 0;
}

// interior point forming a triangle with a boundary edge
bool almost_on_boundary(const Surface& p, int v) {
    if (p.on_boundary(v)) return false;
    const auto& bd = p.boundary();
    for (size_t i = 0; i < bd.size(); ++i)
        if (p.third(bd[i], bd[(i + 1) % bd.size()]) == v) return true;
    return false;
}

}  // namespace

GlueResult glue_method(const Surface& p1, const Surface& p2, GlueMethod method,
                       const std::optional<Alignment>& alignment) {
    need_patch(p1);
    need_patch(p2);
    Signature s1 = classify(p1), s2 = classify(p2);
    if (s1.type_tuple() != "(1,1,1)" || s2.type_tuple() != "(1,1,1)")
        throw Error(Err::PlacementUnsatisfied, "both patches must be of type (1,1,1)");
    if (p1.boundary_length() != p2.boundary_length())
        throw Error(Err::BoundaryLengthMismatch, std::to_string(p1.boundary_length()) + " vs " +
                                                     std::to_string(p2.boundary_length()));
    int x1 = degree5_point(p1), x2 = degree5_point(p2);
    bool on1 = p1.on_boundary(x1), on2 = p2.on_boundary(x2);
    if (method == GlueMethod::C) {
        bool ok = (on1 && almost_on_boundary(p2, x2)) || (on2 && almost_on_boundary(p1, x1));
        if (!ok)
            throw Error(Err::PlacementUnsatisfied,
                        "method C needs one degree-5 point on the boundary and one opposite a boundary edge");
    } else if (!on1 || !on2) {
        throw Error(Err::PlacementUnsatisfied, "degree-5 points must lie on the boundaries");
    }
    const int m = method == GlueMethod::A ? 1 : 0;
    Surface q = add_belts(p1, m);
    for (const auto& al : alignments(q.boundary_length(), alignment)) {
        Surface t = zigzag(q, p2, al);
        // edges whose opposite points are the two degree-5 points
        std::vector<std::pair<int, int>> cand;
        for (const auto& f : t.triangles())
            for (int i = 0; i < 3; ++i) {
                int u = f[i], w = f[(i + 1) % 3];
                int a = f[(i + 2) % 3], b = t.third(w, u);
                if (u < w && degree(t, a) == 5 && degree(t, b) == 5) cand.push_back({u, w});
            }
        if (cand.empty()) continue;
        std::sort(cand.begin(), cand.end());
        GlueResult r;
        r.surface = split_edge(t, cand[0].first, cand[0].second);
        r.offset = al.offset;
        r.reflected = al.reflected;
        r.elliptic = is_elliptic(r.surface);
        if (!r.elliptic) continue;
        return r;
    }
    throw Error(Err::PlacementUnsatisfied, "no alignment puts the degree-5 points across an edge");
}

Surface connected_sum(const Surface& t1, const Tri& a, const Surface& t2, const Tri& b) {
    if (!t1.is_closed() || !t2.is_closed()) throw Error(Err::KindMismatch, "connected sum needs closed triangulations");
    auto face = [](const Surface& t, const Tri& f) {
        for (int v : f)
            if (!t.has_vertex(v)) return false;
        return f[0] != f[1] && f[1] != f[2] && f[0] != f[2] && is_face(t, f[0], f[1], f[2]);
    };
    if (!face(t1, a)) throw Error(Err::InvalidTriangleChoice, "first triangle is not a face");
    if (!face(t2, b)) throw Error(Err::InvalidTriangleChoice, "second triangle is not a face");
    auto sorted = [](Tri f) {
        std::sort(f.begin(), f.end());
        return f;
    };
    const int n1 = t1.num_vertices();
    std::vector<int> map2(t2.num_vertices() + 1);
    for (int v = 1; v <= t2.num_vertices(); ++v) map2[v] = n1 + v;
    for (int i = 0; i < 3; ++i) map2[b[i]] = a[i];
    std::vector<Tri> tris;
    for (const auto& f : t1.triangles())
        if (sorted(f) != sorted(a)) tris.push_back(f);
    for (const auto& f : t2.triangles())
        if (sorted(f) != sorted(b)) tris.push_back({map2[f[0]], map2[f[1]], map2[f[2]]});
    return Surface::from_triangles(tris);
}

}  // namespace etri

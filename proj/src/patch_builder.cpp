#include "etri/patch_builder.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "etri/catalog.hpp"

namespace etri {

namespace {

int idx_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// rank-compacted labels for the vertices occurring in tris
std::vector<int> compaction(int n, const std::vector<Tri>& tris) {
    std::vector<char> used(n + 1, 0);
    for (const auto& t : tris)
        for (int v : t) used[v] = 1;
    std::vector<int> m(n + 1, 0);
    int c = 0;
    for (int v = 1; v <= n; ++v)
        if (used[v]) m[v] = ++c;
    return m;
}

std::vector<int> bfs_dist(const Surface& s, int src) {
    std::vector<int> d(s.num_vertices() + 1, -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : s.neighbors(x))
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
    }
    return d;
}

// points present iff keep(i,j); a triangle is added when all three corners exist
template <class Keep>
Lattice grid(int imax, int jmax, Keep keep) {
    Lattice L;
    int c = 0;
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= jmax; ++j)
            if (keep(i, j)) L.id[{i, j}] = ++c;
    for (int i = 0; i < imax; ++i)
        for (int j = 0; j <= jmax; ++j) {
            if (L.has(i, j) && L.has(i + 1, j) && L.has(i, j + 1))
                L.tris.push_back({L.at(i, j), L.at(i + 1, j), L.at(i, j + 1)});
            if (L.has(i + 1, j) && L.has(i + 1, j + 1) && L.has(i, j + 1))
                L.tris.push_back({L.at(i + 1, j), L.at(i + 1, j + 1), L.at(i, j + 1)});
        }
    return L;
}

struct Walk {
    std::vector<int> verts;  // special points in walk order
    std::vector<int> degs;
    std::vector<int> gaps;
};

Walk walk_boundary(const Surface& p, int start, int toward) {
    const auto& bd = p.boundary();
    const int b = static_cast<int>(bd.size());
    int i = idx_of(bd, start);
    if (i < 0) throw Error(Err::Domain, "walk start not on boundary");
    int dir;
    if (bd[mod(i + 1, b)] == toward)
        dir = 1;
    else if (bd[mod(i - 1, b)] == toward)
        dir = -1;
    else
        throw Error(Err::Domain, "walk direction is not a boundary neighbour");
    if (p.degree(start) >= 6) throw Error(Err::Domain, "walk must start at a special point");
    Walk w;
    int last = 0;
    for (int s = 0; s < b; ++s) {
        int v = bd[mod(i + dir * s, b)];
        int d = p.degree(v);
        if (d < 6) {
            if (!w.verts.empty()) w.gaps.push_back(s - last);
            w.verts.push_back(v);
            w.degs.push_back(d);
            last = s;
        }
    }
    w.gaps.push_back(b - last);
    return w;
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw Error(Err::Domain, what);
}

int param(const std::map<std::string, int>& p, const char* k) {
    auto it = p.find(k);
    if (it == p.end()) throw Error(Err::Domain, std::string("missing parameter ") + k);
    return it->second;
}

// [0,0,k] as Tr_{2k}(P_{h+k}) with a copy of P_k folded into the cut
struct Built00k {
    Surface patch;
    Lattice tr;
    std::map<int, int> tr_where;
};

Built00k build_00k(int h, int k) {
    const int H = h + k;
    Built00k out;
    out.tr = make_lattice(H, 2 * k);
    Lattice cap = make_lattice(k, 0);
    AssemblySpec spec;
    spec.parts.push_back({"truncated", out.tr.tris});
    spec.parts.push_back({"cap", cap.tris});
    AssemblySpec::Identification lower, upper;
    lower.part_a = upper.part_a = 0;
    lower.part_b = upper.part_b = 1;
    for (int a = 0; a <= k; ++a) {
        lower.seg_a.push_back(out.tr.at(k + a, k - a));
        lower.seg_b.push_back(cap.at(a, 0));
        upper.seg_a.push_back(out.tr.at(k - a, k + a));
        upper.seg_b.push_back(cap.at(0, a));
    }
    spec.identifications = {lower, upper};
    Assembly as = assemble(spec);
    out.patch = std::move(as.patch);
    out.tr_where = std::move(as.where[0]);
    return out;
}

std::vector<int> gaps_between(const Surface& p, int deg) {
    const auto& bd = p.boundary();
    const int b = static_cast<int>(bd.size());
    std::vector<int> pos;
    for (int i = 0; i < b; ++i)
        if (p.degree(bd[i]) == deg) pos.push_back(i);
    std::vector<int> out;
    for (size_t j = 0; j < pos.size(); ++j) {
        int g = pos[(j + 1) % pos.size()] - pos[j];
        if (g <= 0) g += b;
        out.push_back(g);
    }
    return out;
}

}  // namespace

Piece Piece::from(const Surface& s) {
    Piece p;
    p.n = s.num_vertices();
    p.tris = s.triangles();
    p.rim = s.boundary();
    return p;
}

Surface Piece::surface() const {
    if (tris.empty()) throw Error(Err::Domain, "degenerate piece has no triangles");
    return Surface::from_triangles(tris, rim);
}

Piece add_belt(const Piece& p) {
    const int b = static_cast<int>(p.rim.size());
    Piece q;
    q.n = p.n + b;
    q.tris = p.tris;
    auto nv = [&](int i) { return p.n + 1 + mod(i, b); };
    for (int i = 0; i < b; ++i) {
        int w = p.rim[i], w1 = p.rim[(i + 1) % b];
        q.tris.push_back({w1, w, nv(i)});
        q.tris.push_back({nv(i), w, nv(i - 1)});
    }
    for (int i = 0; i < b; ++i) q.rim.push_back(nv(i));
    return q;
}

Surface add_belt(const Surface& p) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "belt needs a patch");
    return add_belt(Piece::from(p)).surface();
}

Surface add_belts(const Surface& p, int m) {
    if (m < 0) throw Error(Err::Domain, "belt count must be >= 0");
    Surface s = p;
    for (int i = 0; i < m; ++i) s = add_belt(s);
    return s;
}

PeelResult peel_belt(const Surface& p) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "peel needs a patch");
    for (int v : p.boundary())
        if (p.degree(v) != 6)
            throw Error(Err::BoundaryDegreeNotSix,
                        "boundary vertex " + std::to_string(v) + " has degree " + std::to_string(p.degree(v)));
    const int n = p.num_vertices();
    PeelResult r;
    std::vector<Tri> keep;
    for (const auto& t : p.triangles())
        if (!p.on_boundary(t[0]) && !p.on_boundary(t[1]) && !p.on_boundary(t[2])) keep.push_back(t);
    for (int v = 1; v <= n; ++v)
        if (!p.on_boundary(v)) r.vertices.push_back(v);
    for (int u : r.vertices)
        for (int v : p.neighbors(u))
            if (u < v && !p.on_boundary(v)) r.edges.push_back({u, v});
    r.old_to_new.assign(n + 1, 0);
    if (!keep.empty()) {
        std::vector<int> m = compaction(n, keep);
        bool all_in = true;
        for (int v : r.vertices)
            if (!m[v]) all_in = false;
        if (all_in) {
            for (auto& t : keep)
                for (int& v : t) v = m[v];
            r.patch = Surface::from_triangles(keep);
            r.shape = PeelResult::Shape::Patch;
            r.old_to_new = m;
            return r;
        }
    }
    for (size_t i = 0; i < r.vertices.size(); ++i) r.old_to_new[r.vertices[i]] = static_cast<int>(i) + 1;
    if (!r.edges.empty())
        r.shape = PeelResult::Shape::Graph;
    else if (!r.vertices.empty())
        r.shape = PeelResult::Shape::Points;
    else
        r.shape = PeelResult::Shape::Empty;
    return r;
}

TrackedPatch cut_corner_tracked(const Surface& p, int x1) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "corner cutting needs a patch");
    if (!p.has_vertex(x1)) throw Error(Err::UnknownVertex, std::to_string(x1));
    if (!p.on_boundary(x1) || p.degree(x1) != 4)
        throw Error(Err::NotDegree4Corner, std::to_string(x1) + " is not a boundary point of degree 4");
    const auto& bd = p.boundary();
    const int b = static_cast<int>(bd.size());
    int i = idx_of(bd, x1);
    int x2 = bd[mod(i + 1, b)], x3 = bd[mod(i - 1, b)];
    const auto& r2 = p.neighbors(x2);
    const auto& r3 = p.neighbors(x3);
    if (b < 6 || r2.size() != 4 || r3.size() != 4)
        throw Error(Err::Domain, "corner neighbourhood too small to cut");
    int x4 = r2[0], x5 = r2[1], x6 = r3[3];
    if (r2[2] != x3 || r2[3] != x1 || r3[0] != x1 || r3[1] != x2 || r3[2] != x5)
        throw Error(Err::Domain, "corner neighbourhood is not the expected fan");
    if (p.on_boundary(x5)) throw Error(Err::Domain, "x5 lies on the boundary");
    if (x4 == x6 || p.adjacent(x4, x6))
        throw Error(Err::ForbiddenChord, std::to_string(x4) + std::to_string(x6) + " is already an edge");
    std::vector<Tri> tris;
    for (const auto& t : p.triangles()) {
        bool gone = false;
        for (int v : t)
            if (v == x1 || v == x2 || v == x3) gone = true;
        if (!gone) tris.push_back(t);
    }
    tris.push_back({x6, x4, x5});
    TrackedPatch out;
    out.old_to_new = compaction(p.num_vertices(), tris);
    for (auto& t : tris)
        for (int& v : t) v = out.old_to_new[v];
    std::vector<int> nb;
    for (int v : bd)
        if (v != x1 && v != x2 && v != x3) nb.push_back(out.old_to_new[v]);
    out.patch = Surface::from_triangles(tris, nb);
    return out;
}

Surface cut_corner(const Surface& p, int x) { return cut_corner_tracked(p, x).patch; }

Lattice make_lattice(int h, int g) {
    if (h < 1) throw Error(Err::Domain, "tessellation needs h >= 1");
    if (g < 0 || g >= h) throw Error(Err::Domain, "need 0 <= g < h");
    return grid(h, h, [&](int i, int j) { return i + j >= g && i + j <= h; });
}

Surface tessellation(int h) { return Surface::from_triangles(make_lattice(h, 0).tris); }

Truncation truncate(int k, int g) {
    if (!(0 < g && g < k)) throw Error(Err::Domain, "truncation needs 0 < g < k");
    Lattice L = make_lattice(k, g);
    Truncation t;
    t.patch = Surface::from_triangles(L.tris);
    for (int i = 0; i <= k; ++i) t.lower.push_back(L.at(i, k - i));
    for (int i = 0; i <= g; ++i) t.upper.push_back(L.at(i, g - i));
    for (int j = g; j <= k; ++j) t.left.push_back(L.at(0, j));
    for (int i = g; i <= k; ++i) t.right.push_back(L.at(i, 0));
    return t;
}

Assembly assemble(const AssemblySpec& spec) {
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> keys;
    for (int p = 0; p < static_cast<int>(spec.parts.size()); ++p) {
        std::set<int> vs;
        for (const auto& t : spec.parts[p].tris) vs.insert(t.begin(), t.end());
        for (int v : vs) {
            index[{p, v}] = static_cast<int>(keys.size());
            keys.push_back({p, v});
        }
    }
    std::vector<int> parent(keys.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& id : spec.identifications) {
        if (id.seg_a.size() != id.seg_b.size()) throw Error(Err::Domain, "identified segments differ in length");
        for (size_t i = 0; i < id.seg_a.size(); ++i) {
            auto a = index.find({id.part_a, id.seg_a[i]});
            auto b = index.find({id.part_b, id.seg_b[i]});
            if (a == index.end() || b == index.end()) throw Error(Err::Domain, "identification names a missing vertex");
            parent[find(a->second)] = find(b->second);
        }
    }
    std::vector<int> label(keys.size(), 0);
    int next = 0;
    Assembly out;
    out.where.resize(spec.parts.size());
    for (size_t k = 0; k < keys.size(); ++k) {
        int r = find(static_cast<int>(k));
        if (!label[r]) label[r] = ++next;
        out.where[keys[k].first][keys[k].second] = label[r];
    }
    std::vector<Tri> tris;
    for (int p = 0; p < static_cast<int>(spec.parts.size()); ++p)
        for (auto t : spec.parts[p].tris) {
            for (int& v : t) v = out.where[p][v];
            tris.push_back(t);
        }
    out.patch = Surface::from_triangles(tris);
    return out;
}

Build030 build_030(int h, int k, int l) {
    Build030 out;
    if (h < 1) throw Error(Err::Domain, "h >= 1");
    if (k == 0 && l == 0) {
        out.patch = tessellation(h);
    } else if (l == 0) {
        if (!(0 < k && k < h)) throw Error(Err::Domain, "[0,0,k] needs 0 < k < h");
        out.patch = build_00k(h, k).patch;
    } else {
        if (!(0 < l && l <= k && k < h)) throw Error(Err::Domain, "[0,l,k] needs 0 < l <= k < h");
        Surface s = k == l ? tessellation(h - l) : build_00k(h - l, k - l).patch;
        for (int i = 0; i < l; ++i) {
            int corner = 0;
            for (int v : s.boundary())
                if (s.degree(v) == 4) {
                    corner = v;
                    break;
                }
            s = enlarge_layer(s, {corner}, {});
        }
        out.patch = std::move(s);
    }
    for (int v : out.patch.boundary())
        if (out.patch.degree(v) == 4) ++out.beta4;
    out.parts = gaps_between(out.patch, 4);
    return out;
}

Piece build_200(int k, int r) {
    if (k < 2 || r < 0) throw Error(Err::Domain, "type (2,0,0) needs k >= 2, r >= 0");
    Piece p;
    p.n = k + 1;
    for (int v = 1; v <= k + 1; ++v) p.rim.push_back(v);
    for (int v = k; v >= 2; --v) p.rim.push_back(v);
    for (int i = 0; i < r; ++i) p = add_belt(p);
    return p;
}

Signature signature_200(int k, int r) {
    Signature s;
    s.closed = false;
    s.a3 = 2;
    s.a6 = 2L * k * r + k - 1;
    s.b = 2 * k;
    return s;
}

CornerCut truncate_corner(const Surface& p, int corner, int g) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "truncation needs a patch");
    if (!p.on_boundary(corner) || p.degree(corner) != 4)
        throw Error(Err::NotDegree4Corner, std::to_string(corner) + " is not a corner");
    if (g < 1) throw Error(Err::Domain, "truncation depth must be >= 1");
    std::vector<int> d = bfs_dist(p, corner);
    int region = 0;
    for (int v = 1; v <= p.num_vertices(); ++v)
        if (d[v] <= g) ++region;
    std::vector<Tri> tris;
    int removed = 0;
    for (const auto& t : p.triangles()) {
        if (d[t[0]] <= g && d[t[1]] <= g && d[t[2]] <= g)
            ++removed;
        else
            tris.push_back(t);
    }
    if (region != binom2(g + 2) || removed != g * g)
        throw Error(Err::Domain, "region around the corner is not a tessellation P_" + std::to_string(g));
    const auto& bd = p.boundary();
    const int b = static_cast<int>(bd.size());
    int i = idx_of(bd, corner);
    CornerCut out;
    out.old_to_new = compaction(p.num_vertices(), tris);
    for (auto& t : tris)
        for (int& v : t) v = out.old_to_new[v];
    out.patch = Surface::from_triangles(tris);
    out.end_before = out.old_to_new[bd[mod(i - g, b)]];
    out.end_after = out.old_to_new[bd[mod(i + g, b)]];
    if (!out.end_before || !out.end_after) throw Error(Err::Domain, "cut ends vanished");
    return out;
}

std::vector<int> measure_boundary(const Surface& p, int start, int toward) {
    return walk_boundary(p, start, toward).gaps;
}

TruncatedPatch truncate_type(int type, const std::map<std::string, int>& prm) {
    TruncatedPatch out;
    out.type = type;
    out.params = prm;
    auto check_degs = [](const Walk& w, std::vector<int> want) {
        expect(w.degs == want, "unexpected arrangement of boundary points");
    };
    switch (type) {
        case 1: {
            int h = param(prm, "h"), c = param(prm, "c");
            expect(2 <= c && c <= h, "type 1 needs 2 <= c <= h");
            Lattice L = make_lattice(h, 0);
            Surface P = Surface::from_triangles(L.tris);
            CornerCut cc = truncate_corner(P, L.at(0, 0), c - 1);
            auto m = [&](int i, int j) { return cc.old_to_new[L.at(i, j)]; };
            Walk w = walk_boundary(cc.patch, m(0, h), m(0, h - 1));
            check_degs(w, {4, 5, 5, 4});
            expect(w.gaps[1] == c - 1 && w.gaps[3] == h, "type 1 boundary segments");
            out.patch = cc.patch;
            out.measured = {{"s", w.gaps[0]}, {"t", w.gaps[2]}, {"c", c}};
            break;
        }
        case 4: {
            int h = param(prm, "h"), c1 = param(prm, "c1"), c2 = param(prm, "c2");
            expect(c1 >= 2 && c2 >= 2 && (c1 - 1) + (c2 - 1) < h, "type 4 needs c1,c2 >= 2 and (c1-1)+(c2-1) < h");
            Lattice L = make_lattice(h, 0);
            Surface P = Surface::from_triangles(L.tris);
            CornerCut a = truncate_corner(P, L.at(0, 0), c1 - 1);
            CornerCut b = truncate_corner(a.patch, a.old_to_new[L.at(h, 0)], c2 - 1);
            auto m = [&](int i, int j) { return b.old_to_new[a.old_to_new[L.at(i, j)]]; };
            Walk w = walk_boundary(b.patch, m(0, h), m(0, h - 1));
            check_degs(w, {4, 5, 5, 5, 5});
            expect(w.gaps[1] == c1 - 1 && w.gaps[3] == c2 - 1, "type 4 boundary segments");
            out.patch = b.patch;
            out.measured = {{"s", w.gaps[0]}, {"r", w.gaps[2]}, {"t", w.gaps[4]}, {"c1", c1}, {"c2", c2}};
            break;
        }
        case 6: {
            int h = param(prm, "h"), c1 = param(prm, "c1"), c2 = param(prm, "c2"), c3 = param(prm, "c3");
            expect(c1 >= 2 && c2 >= 2 && c3 >= 2 && c1 + c2 - 2 < h && c2 + c3 - 2 < h && c1 + c3 - 2 < h,
                   "type 6 needs c_i >= 2 and c_i+c_j-2 < h");
            Lattice L = make_lattice(h, 0);
            Surface P = Surface::from_triangles(L.tris);
            std::vector<int> map(P.num_vertices() + 1);
            std::iota(map.begin(), map.end(), 0);
            const std::pair<int, int> corners[3] = {{0, 0}, {h, 0}, {0, h}};
            const int cs[3] = {c1, c2, c3};
            for (int q = 0; q < 3; ++q) {
                CornerCut cc = truncate_corner(P, map[L.at(corners[q].first, corners[q].second)], cs[q] - 1);
                for (int& v : map) v = v ? cc.old_to_new[v] : 0;
                P = cc.patch;
            }
            auto m = [&](int i, int j) { return map[L.at(i, j)]; };
            Walk w = walk_boundary(P, m(0, h - c3 + 1), m(0, h - c3));
            check_degs(w, {5, 5, 5, 5, 5, 5});
            expect(w.gaps[1] == c1 - 1 && w.gaps[3] == c2 - 1 && w.gaps[5] == c3 - 1, "type 6 boundary segments");
            out.patch = P;
            out.measured = {{"r", w.gaps[0]}, {"s", w.gaps[2]}, {"t", w.gaps[4]}, {"c1", c1}, {"c2", c2}, {"c3", c3}};
            break;
        }
        case 2: {
            int h = param(prm, "h"), k = param(prm, "k"), c = param(prm, "c");
            expect(0 < k && k < h && c >= 2, "type 2 needs 0 < k < h and c >= 2");
            Built00k bk = build_00k(h, k);
            const int H = h + k;
            auto g = [&](int i, int j) { return bk.tr_where.at(bk.tr.at(i, j)); };
            CornerCut cc = truncate_corner(bk.patch, g(H, 0), c - 1);
            Walk w = walk_boundary(cc.patch, cc.old_to_new[g(0, H)], cc.old_to_new[g(1, H - 1)]);
            check_degs(w, {4, 5, 5});
            expect(w.gaps[1] == c - 1, "type 2 boundary segments");
            out.patch = cc.patch;
            out.measured = {{"s", w.gaps[0]}, {"t", w.gaps[2]}, {"c", c}};
            break;
        }
        case 5: {
            int h = param(prm, "h"), k = param(prm, "k"), c1 = param(prm, "c1"), c2 = param(prm, "c2");
            expect(0 < k && k < h && c1 >= 2 && c2 >= 2, "type 5 needs 0 < k < h and c1,c2 >= 2");
            Built00k bk = build_00k(h, k);
            const int H = h + k;
            auto g = [&](int i, int j) { return bk.tr_where.at(bk.tr.at(i, j)); };
            CornerCut a = truncate_corner(bk.patch, g(H, 0), c1 - 1);
            CornerCut b = truncate_corner(a.patch, a.old_to_new[g(0, H)], c2 - 1);
            auto m = [&](int i, int j) { return b.old_to_new[a.old_to_new[g(i, j)]]; };
            Walk w = walk_boundary(b.patch, m(c2 - 1, H - c2 + 1), m(c2, H - c2));
            check_degs(w, {5, 5, 5, 5});
            expect(w.gaps[1] == c1 - 1 && w.gaps[3] == c2 - 1, "type 5 boundary segments");
            out.patch = b.patch;
            out.measured = {{"s", w.gaps[0]}, {"t", w.gaps[2]}, {"c1", c1}, {"c2", c2}};
            break;
        }
        case 3: {
            int h = param(prm, "h"), k = param(prm, "k"), l = param(prm, "l"), c = param(prm, "c");
            expect(c >= 2, "type 3 needs c >= 2");
            Build030 base = build_030(h, k, l);
            expect(base.beta4 == 1, "type 3 needs a [0,l,k] patch");
            const Surface& P = base.patch;
            int corner = 0;
            for (int v : P.boundary())
                if (P.degree(v) == 4) corner = v;
            const auto& bd = P.boundary();
            const int b = static_cast<int>(bd.size());
            int i = idx_of(bd, corner);
            CornerCut cc = truncate_corner(P, corner, c - 1);
            int outside = cc.old_to_new[bd[mod(i - c, b)]];
            const auto& nb = cc.patch.boundary();
            int j = idx_of(nb, cc.end_before);
            const int nbl = static_cast<int>(nb.size());
            int toward = nb[mod(j + 1, nbl)] == outside ? nb[mod(j - 1, nbl)] : nb[mod(j + 1, nbl)];
            Walk w = walk_boundary(cc.patch, cc.end_before, toward);
            check_degs(w, {5, 5});
            expect(w.gaps[0] == c - 1, "type 3 boundary segments");
            out.patch = cc.patch;
            out.measured = {{"s", w.gaps[1]}, {"c", c}, {"k", k}, {"l", l}};
            break;
        }
        case 7: {
            int u = param(prm, "u"), v = param(prm, "v");
            expect(u >= 1 && v >= 1, "type 7 needs u, v >= 1");
            Lattice L = grid(u, v, [&](int i, int j) { return i <= u && j <= v; });
            out.patch = Surface::from_triangles(L.tris);
            Walk w = walk_boundary(out.patch, L.at(0, 0), L.at(1, 0));
            check_degs(w, {4, 5, 4, 5});
            out.measured = {{"u", w.gaps[0]}, {"v", w.gaps[1]}, {"t", w.gaps[2]}, {"s", w.gaps[3]}};
            break;
        }
        default:
            throw Error(Err::Domain, "truncation type must be 1..7");
    }
    return out;
}

Surface enlarge_layer(const Surface& p, const std::set<int>& keep4, const std::set<int>& push5) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "enlargement needs a patch");
    for (int v : keep4)
        if (!p.has_vertex(v) || !p.on_boundary(v) || p.degree(v) != 4)
            throw Error(Err::InsufficientBoundaryPoints, std::to_string(v) + " is not a boundary point of degree 4");
    for (int v : push5)
        if (!p.has_vertex(v) || !p.on_boundary(v) || p.degree(v) != 5)
            throw Error(Err::InsufficientBoundaryPoints, std::to_string(v) + " is not a boundary point of degree 5");
    const auto& rim = p.boundary();
    const int b = static_cast<int>(rim.size());
    int n = p.num_vertices();
    auto nv = [&](int i) { return p.num_vertices() + 1 + mod(i, b); };
    n += b;
    std::vector<Tri> tris = p.triangles();
    std::vector<int> out_rim;
    for (int i = 0; i < b; ++i) {
        int w = rim[i], w1 = rim[(i + 1) % b];
        tris.push_back({w1, w, nv(i)});
        if (keep4.count(w)) {
            int a = ++n, c = ++n, bb = ++n;
            tris.push_back({nv(i), w, bb});
            tris.push_back({bb, w, a});
            tris.push_back({a, w, nv(i - 1)});
            tris.push_back({bb, a, c});
            out_rim.insert(out_rim.end(), {a, c, bb});
        } else if (push5.count(w)) {
            int q = ++n;
            tris.push_back({nv(i), w, q});
            tris.push_back({q, w, nv(i - 1)});
            out_rim.push_back(q);
        } else {
            tris.push_back({nv(i), w, nv(i - 1)});
        }
        out_rim.push_back(nv(i));
    }
    return Surface::from_triangles(tris, out_rim);
}

Surface generic_enlarge(const Surface& p, int use_b4, int use_b5) {
    if (p.is_closed()) throw Error(Err::KindMismatch, "enlargement needs a patch");
    if (use_b4 < 0 || use_b5 < 0) throw Error(Err::Domain, "counts must be >= 0");
    std::set<int> k4, p5;
    for (int v : p.boundary()) {
        int d = p.degree(v);
        if (d == 4 && static_cast<int>(k4.size()) < use_b4) k4.insert(v);
        if (d == 5 && static_cast<int>(p5.size()) < use_b5) p5.insert(v);
    }
    if (static_cast<int>(k4.size()) < use_b4 || static_cast<int>(p5.size()) < use_b5)
        throw Error(Err::InsufficientBoundaryPoints, "patch has too few boundary points of degree 4 or 5");
    return enlarge_layer(p, k4, p5);
}

namespace {

// triangle (v, rot[j], rot[j+1]) positions on side A of the path at v
std::vector<int> side_a(const Surface& s, const std::vector<int>& path, int i, int dir) {
    const int v = path[i];
    const auto& rot = s.neighbors(v);
    const int d = static_cast<int>(rot.size());
    std::vector<int> js;
    const int L = static_cast<int>(path.size()) - 1;
    if (i == 0) {
        if (dir > 0)
            js = {0, 1};
        else
            js = {d - 3, d - 2};
    } else {
        int a = idx_of(rot, path[i - 1]);
        if (i == L) {
            if (dir > 0)
                for (int j = a; j < d - 1; ++j) js.push_back(j);
            else
                for (int j = 0; j < a; ++j) js.push_back(j);
        } else if (dir > 0) {
            js = {mod(a, d), mod(a + 1, d), mod(a + 2, d)};
        } else {
            js = {mod(a - 3, d), mod(a - 2, d), mod(a - 1, d)};
        }
    }
    return js;
}

}  // namespace

std::vector<StripPath> strip_paths(const Surface& s) {
    std::vector<StripPath> out;
    if (s.is_closed()) return out;
    for (int p0 : s.boundary()) {
        const auto& r0 = s.neighbors(p0);
        const int d0 = static_cast<int>(r0.size());
        if (d0 < 3) continue;
        for (int dir : {1, -1}) {
            std::vector<int> path{p0, dir > 0 ? r0[2] : r0[d0 - 3]};
            std::set<int> seen{p0};
            bool ok = false;
            while (true) {
                int cur = path.back();
                if (seen.count(cur)) break;
                seen.insert(cur);
                const auto& rot = s.neighbors(cur);
                const int d = static_cast<int>(rot.size());
                int a = idx_of(rot, path[path.size() - 2]);
                if (s.on_boundary(cur)) {
                    int count = dir > 0 ? d - 1 - a : a;
                    ok = count == 1;
                    break;
                }
                path.push_back(rot[mod(a + 3 * dir, d)]);
            }
            if (ok) out.push_back({path, dir});
        }
    }
    return out;
}

Surface insert_strip(const Surface& s, const StripPath& sp, int rows) {
    if (rows < 0) throw Error(Err::Domain, "rows must be >= 0");
    if (rows == 0) return s;
    const auto& path = sp.path;
    const int L = static_cast<int>(path.size()) - 1;
    if (L < 1) throw Error(Err::Domain, "strip path needs an edge");
    const int n = s.num_vertices();
    auto copy = [&](int i, int r) { return r == 0 ? path[i] : n + (r - 1) * (L + 1) + i + 1; };
    std::vector<Tri> tris = s.triangles();
    std::map<std::array<int, 3>, size_t> where;
    for (size_t t = 0; t < tris.size(); ++t) {
        auto k = tris[t];
        std::sort(k.begin(), k.end());
        where[k] = t;
    }
    std::vector<Tri> out = tris;
    for (int i = 0; i <= L; ++i) {
        const int v = path[i];
        const auto& rot = s.neighbors(v);
        for (int j : side_a(s, path, i, sp.dir)) {
            std::array<int, 3> k{v, rot[j], rot[j + 1 < static_cast<int>(rot.size()) ? j + 1 : 0]};
            std::sort(k.begin(), k.end());
            auto it = where.find(k);
            if (it == where.end()) throw Error(Err::Domain, "strip path does not match the patch");
            for (int& x : out[it->second])
                if (x == v) x = copy(i, rows);
        }
    }
    for (int r = 0; r < rows; ++r)
        for (int i = 0; i < L; ++i) {
            out.push_back({copy(i, r), copy(i + 1, r), copy(i + 1, r + 1)});
            out.push_back({copy(i, r), copy(i, r + 1), copy(i + 1, r + 1)});
        }
    // the top row carries the side-A fans; rows in between are new
    return Surface::from_triangles(out);
}

namespace {

struct FamilyBase {
    char f;
    const char* id;
};

const FamilyBase kGeneric[] = {
    {'H', "2.1/(1,1,1,2)_3"},  {'I', "2.2/(1,1,1,2)_4"},   {'J', "2.3/(1,1,1,5)_5"},
    {'K', "2.4/(1,1,1,5)_6"},  {'L', "2.5/(1,1,1,8)_7"},   {'M', "2.6/(1,1,1,10)_8"},
    {'N', "2.6/(1,1,1,11)_9"}, {'O', "2.6/(1,1,1,15)_10"}, {'P', "2.6/(1,1,1,11)_10"},
};

bool matches(const Surface& s, const Signature& want) {
    Signature got = classify(s);
    if (!got.same_cell(want)) return false;
    return want.beta4 ? got.beta4 == want.beta4 : got.beta5 == want.beta5;
}

std::optional<Surface> strip_with(const Surface& s, int points, int rows) {
    for (const auto& sp : strip_paths(s))
        if (static_cast<int>(sp.path.size()) == points) return insert_strip(s, sp, rows);
    return std::nullopt;
}

Surface unavailable(char f, long k, long m, const std::string& why) {
    throw Error(Err::FamilyWitnessUnavailable, std::string("family ") + f + " k=" + std::to_string(k) +
                                                   " m=" + std::to_string(m) + ": " + why);
}

// For k >= 5 the degree-5 point is pushed out until the last layer, which
// leaves it next to a boundary edge: start from (1,1,1,5)_6 with b4 = b5 = 1,
// add (k-5)/2 layers keeping both points, then one keeping only the corner.
Surface family_a0(int k) {
    if (k == 3) return catalog_get("2.3/(1,1,1,4)_5").surface();
    Surface s = catalog_get("2.4/(1,1,1,5)_6").surface();
    for (int j = 5; j < k; j += 2) s = generic_enlarge(s, 1, 1);
    return generic_enlarge(s, 1, 0);
}

}  // namespace

Surface family_patch(char f, int k, int m) {
    Signature want = family_signature(f, k, m);
    if (f == 'F' || f == 'G') return unavailable(f, k, m, "no construction is given for this family");
    Surface s;
    if (f == 'A') {
        Surface base = family_a0(k);
        if (m == 0) {
            s = base;
        } else if (auto r = strip_with(base, k, m)) {
            s = *r;
        } else {
            return unavailable(f, k, m, "no strip path with k points");
        }
    } else if (f == 'B' || f == 'C' || f == 'D' || f == 'E') {
        const char base_family = f == 'B' ? 'J' : f == 'C' ? 'L' : f == 'D' ? 'H' : 'O';
        const int d = f == 'B' ? 7 : f == 'C' ? 11 : f == 'D' ? 3 : 15;
        Surface base = family_patch(base_family, k, 0);
        if (m == 0) {
            s = base;
        } else if (auto r = strip_with(base, 2 * k - d, m)) {
            s = *r;
        } else {
            return unavailable(f, k, m, "no strip path of the required length");
        }
    } else {
        const FamilyBase* fb = nullptr;
        for (const auto& g : kGeneric)
            if (g.f == f) fb = &g;
        if (!fb) throw Error(Err::Domain, std::string("unknown family ") + f);
        s = catalog_get(fb->id).surface();
        while (s.boundary_length() < k) s = generic_enlarge(s, 0, 1);
    }
    if (!matches(s, want)) return unavailable(f, k, m, "construction does not reach " + want.notation());
    return s;
}

}  // namespace etri

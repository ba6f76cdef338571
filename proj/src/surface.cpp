#include "etri/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace etri {

const char* err_name(Err e) {
    switch (e) {
        case Err::MalformedToken: return "MalformedToken";
        case Err::NonManifoldEdge: return "NonManifoldEdge";
        case Err::BrokenLink: return "BrokenLink";
        case Err::Disconnected: return "Disconnected";
        case Err::BoundaryNotSingleCycle: return "BoundaryNotSingleCycle";
        case Err::NotSphereOrDisc: return "NotSphereOrDisc";
        case Err::KindMismatch: return "KindMismatch";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::NotElliptic: return "NotElliptic";
        case Err::VertexOnBoundary: return "VertexOnBoundary";
        case Err::Domain: return "Domain";
        case Err::BoundaryDegreeNotSix: return "BoundaryDegreeNotSix";
        case Err::NotDegree4Corner: return "NotDegree4Corner";
        case Err::ForbiddenChord: return "ForbiddenChord";
        case Err::InsufficientBoundaryPoints: return "InsufficientBoundaryPoints";
        case Err::FamilyWitnessUnavailable: return "FamilyWitnessUnavailable";
        case Err::StaleSite: return "StaleSite";
        case Err::BoundaryLengthMismatch: return "BoundaryLengthMismatch";
        case Err::PlacementUnsatisfied: return "PlacementUnsatisfied";
        case Err::InvalidTriangleChoice: return "InvalidTriangleChoice";
        case Err::UnknownEntry: return "UnknownEntry";
        case Err::CapExceeded: return "CapExceeded";
        case Err::NotATypeTuple: return "NotATypeTuple";
        case Err::UnsupportedFormat: return "UnsupportedFormat";
    }
    return "Error";
}

int err_exit_code(Err e) {
    switch (e) {
        case Err::MalformedToken:
        case Err::NonManifoldEdge:
        case Err::BrokenLink:
        case Err::Disconnected:
        case Err::BoundaryNotSingleCycle:
        case Err::NotSphereOrDisc:
            return 2;
        default:
            return 3;
    }
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

namespace {

std::string tri_str(const Tri& t) {
    std::ostringstream os;
    os << t[0] << "," << t[1] << "," << t[2];
    return os.str();
}

struct BuildOut {
    ValidationReport report;
    std::optional<Err> first;
    Kind kind = Kind::Closed;
    int n = 0;
    std::vector<Tri> tris;
    std::vector<int> boundary;
};

void fail(BuildOut& out, Err e, const std::string& name, const std::string& detail) {
    out.report.items.push_back({name, false, detail});
    if (!out.first) out.first = e;
}

void pass(BuildOut& out, const std::string& name) { out.report.items.push_back({name, true, ""}); }

// Runs every structural check. Stops at the first check whose failure makes
// later checks meaningless.
BuildOut check_and_build(const std::vector<Tri>& input, const std::optional<std::vector<int>>& decl) {
    BuildOut out;
    if (input.empty()) {
        fail(out, Err::MalformedToken, "tokens", "no triangles");
        return out;
    }
    for (const auto& t : input) {
        if (t[0] <= 0 || t[1] <= 0 || t[2] <= 0 || t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            fail(out, Err::MalformedToken, "tokens", "degenerate triangle " + tri_str(t));
            return out;
        }
    }
    pass(out, "tokens");

    std::vector<int> labels;
    for (const auto& t : input) labels.insert(labels.end(), t.begin(), t.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::map<int, int> compact;
    for (size_t i = 0; i < labels.size(); ++i) compact[labels[i]] = static_cast<int>(i) + 1;
    const int n = static_cast<int>(labels.size());

    std::vector<Tri> tris;
    tris.reserve(input.size());
    for (const auto& t : input) tris.push_back({compact[t[0]], compact[t[1]], compact[t[2]]});

    // duplicate triangles and edge multiplicities
    {
        std::set<Tri> seen;
        std::map<std::pair<int, int>, int> ecount;
        std::string bad;
        for (const auto& t : tris) {
            Tri s = t;
            std::sort(s.begin(), s.end());
            if (!seen.insert(s).second) bad += " duplicate " + tri_str(s);
            for (int i = 0; i < 3; ++i) {
                int a = t[i], b = t[(i + 1) % 3];
                ++ecount[{std::min(a, b), std::max(a, b)}];
            }
        }
        for (const auto& [e, c] : ecount)
            if (c > 2) bad += " edge " + std::to_string(e.first) + "," + std::to_string(e.second) + " in " + std::to_string(c);
        if (!bad.empty()) {
            fail(out, Err::NonManifoldEdge, "manifold_edges", bad.substr(1));
            return out;
        }
        pass(out, "manifold_edges");
    }

    // vertex links: a single path or a single cycle
    {
        std::vector<std::vector<std::pair<int, int>>> link(n + 1);
        for (const auto& t : tris)
            for (int i = 0; i < 3; ++i) link[t[i]].push_back({t[(i + 1) % 3], t[(i + 2) % 3]});
        std::string bad;
        for (int v = 1; v <= n; ++v) {
            std::map<int, std::vector<int>> g;
            for (auto [a, b] : link[v]) {
                g[a].push_back(b);
                g[b].push_back(a);
            }
            int ends = 0;
            for (auto& [x, ys] : g)
                if (ys.size() == 1) ++ends;
            // connectivity of the link graph
            std::set<int> seen;
            std::vector<int> st{g.begin()->first};
            seen.insert(st[0]);
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                for (int y : g[x])
                    if (seen.insert(y).second) st.push_back(y);
            }
            bool ok = seen.size() == g.size() && (ends == 0 || ends == 2);
            if (ends == 0 && g.size() < 3) ok = false;
            if (!ok) bad += " " + std::to_string(labels[v - 1]);
        }
        if (!bad.empty()) {
            fail(out, Err::BrokenLink, "vertex_links", "vertices" + bad);
            return out;
        }
        pass(out, "vertex_links");
    }

    // connectivity through shared edges, and orientation propagation
    std::map<std::pair<int, int>, std::vector<int>> edge_tris;
    for (size_t i = 0; i < tris.size(); ++i)
        for (int j = 0; j < 3; ++j) {
            int a = tris[i][j], b = tris[i][(j + 1) % 3];
            edge_tris[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(i));
        }
    std::vector<int> flip(tris.size(), -1);
    bool orientable = true;
    {
        std::vector<int> queue{0};
        flip[0] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int ti = queue[qi];
            Tri t = tris[ti];
            if (flip[ti]) std::swap(t[1], t[2]);
            for (int j = 0; j < 3; ++j) {
                int a = t[j], b = t[(j + 1) % 3];
                for (int o : edge_tris[{std::min(a, b), std::max(a, b)}]) {
                    if (o == ti) continue;
                    // o must contain the directed edge b->a
                    const Tri& u = tris[o];
                    bool has_ab = false;
                    for (int k = 0; k < 3; ++k)
                        if (u[k] == a && u[(k + 1) % 3] == b) has_ab = true;
                    int want = has_ab ? 1 : 0;
                    if (flip[o] < 0) {
                        flip[o] = want;
                        queue.push_back(o);
                    } else if (flip[o] != want) {
                        orientable = false;
                    }
                }
            }
        }
        if (queue.size() != tris.size()) {
            fail(out, Err::Disconnected, "connected",
                 std::to_string(tris.size() - queue.size()) + " triangles unreachable");
            return out;
        }
        pass(out, "connected");
        if (!orientable) {
            fail(out, Err::NotSphereOrDisc, "orientable", "inconsistent orientation");
            return out;
        }
        pass(out, "orientable");
    }
    for (size_t i = 0; i < tris.size(); ++i)
        if (flip[i]) std::swap(tris[i][1], tris[i][2]);

    std::set<std::pair<int, int>> directed;
    for (const auto& t : tris)
        for (int j = 0; j < 3; ++j) directed.insert({t[j], t[(j + 1) % 3]});
    std::map<int, int> succ;
    int nbound = 0;
    for (auto [a, b] : directed)
        if (!directed.count({b, a})) {
            succ[a] = b;
            ++nbound;
        }
    const long F = static_cast<long>(tris.size());
    const long E = (3 * F + nbound) / 2;
    const long chi = n - E + F;

    if (nbound == 0) {
        if (decl) {
            fail(out, Err::BoundaryNotSingleCycle, "boundary_cycle", "boundary declared on a closed surface");
            return out;
        }
        if (chi != 2 || n < 4) {
            fail(out, Err::NotSphereOrDisc, "euler", "chi=" + std::to_string(chi) + " f1=" + std::to_string(n));
            return out;
        }
        pass(out, "euler");
        out.kind = Kind::Closed;
    } else {
        // single simple cycle
        std::vector<int> cyc;
        int start = succ.begin()->first;
        int x = start;
        do {
            cyc.push_back(x);
            auto it = succ.find(x);
            if (it == succ.end()) break;
            x = it->second;
        } while (x != start && static_cast<int>(cyc.size()) <= nbound);
        if (x != start || static_cast<int>(cyc.size()) != nbound) {
            fail(out, Err::BoundaryNotSingleCycle, "boundary_cycle", "boundary edges do not form one cycle");
            return out;
        }
        if (chi != 1) {
            fail(out, Err::NotSphereOrDisc, "euler", "chi=" + std::to_string(chi));
            return out;
        }
        pass(out, "euler");
        if (decl) {
            std::vector<int> d;
            for (int v : *decl) {
                auto it = compact.find(v);
                if (it == compact.end()) {
                    fail(out, Err::BoundaryNotSingleCycle, "boundary_cycle",
                         "declared boundary vertex " + std::to_string(v) + " not in any triangle");
                    return out;
                }
                d.push_back(it->second);
            }
            bool fwd = false, rev = false;
            if (d.size() == cyc.size()) {
                auto pos = std::find(cyc.begin(), cyc.end(), d[0]);
                if (pos != cyc.end()) {
                    size_t p = pos - cyc.begin(), m = cyc.size();
                    fwd = rev = true;
                    for (size_t i = 0; i < m; ++i) {
                        if (cyc[(p + i) % m] != d[i]) fwd = false;
                        if (cyc[(p + m - i) % m] != d[i]) rev = false;
                    }
                }
            }
            if (!fwd && !rev) {
                fail(out, Err::BoundaryNotSingleCycle, "boundary_cycle", "declared boundary differs from the inferred one");
                return out;
            }
            if (!fwd)
                for (auto& t : tris) std::swap(t[1], t[2]);
            cyc = d;
        } else {
            // start at the smallest boundary vertex
            auto mn = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), mn, cyc.end());
        }
        pass(out, "boundary_cycle");
        out.kind = Kind::Patch;
        out.boundary = cyc;
    }
    out.n = n;
    out.tris = tris;
    return out;
}

}  // namespace

bool ValidationReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

std::string ValidationReport::text() const {
    std::ostringstream os;
    for (const auto& c : items) {
        os << (c.ok ? "pass " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

Surface Surface::from_triangles(const std::vector<Tri>& tris, const std::optional<std::vector<int>>& boundary) {
    BuildOut b = check_and_build(tris, boundary);
    if (b.first) {
        std::string msg;
        for (const auto& c : b.report.items)
            if (!c.ok) msg = c.name + ": " + c.detail;
        throw Error(*b.first, msg);
    }
    Surface s;
    s.kind_ = b.kind;
    s.n_ = b.n;
    s.tris_ = std::move(b.tris);
    s.boundary_ = std::move(b.boundary);
    s.build_derived();
    return s;
}

void Surface::build_derived() {
    on_boundary_.assign(n_ + 1, 0);
    for (int v : boundary_) on_boundary_[v] = 1;
    third_.clear();
    third_.reserve(tris_.size() * 3);
    std::vector<std::vector<std::pair<int, int>>> nxt(n_ + 1);
    for (const auto& t : tris_)
        for (int j = 0; j < 3; ++j) {
            int a = t[j], b = t[(j + 1) % 3], c = t[(j + 2) % 3];
            third_[key(a, b)] = c;
            nxt[a].push_back({b, c});
        }
    rot_.assign(n_ + 1, {});
    for (int v = 1; v <= n_; ++v) {
        auto& lst = nxt[v];
        std::unordered_map<int, int> m;
        std::unordered_map<int, int> has_pred;
        for (auto [x, y] : lst) {
            m[x] = y;
            has_pred[y] = 1;
        }
        int start = lst.front().first;
        if (on_boundary_[v])
            for (auto [x, y] : lst)
                if (!has_pred.count(x)) start = x;
        std::vector<int>& r = rot_[v];
        int x = start;
        while (true) {
            r.push_back(x);
            auto it = m.find(x);
            if (it == m.end()) break;
            x = it->second;
            if (x == start) break;
        }
    }
}

bool Surface::adjacent(int u, int v) const {
    return third_.count(key(u, v)) || third_.count(key(v, u));
}

int Surface::third(int u, int v) const {
    auto it = third_.find(key(u, v));
    return it == third_.end() ? 0 : it->second;
}

int Surface::degree(int v) const {
    if (!has_vertex(v)) throw Error(Err::UnknownVertex, std::to_string(v));
    int d = static_cast<int>(rot_[v].size());
    return on_boundary_[v] ? d + 2 : d;
}

std::vector<Tri> Surface::sorted_triangles() const {
    std::vector<Tri> out = tris_;
    for (auto& t : out) std::sort(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

Surface Surface::mirrored() const {
    Surface s = *this;
    for (auto& t : s.tris_) std::swap(t[1], t[2]);
    std::reverse(s.boundary_.begin(), s.boundary_.end());
    if (!s.boundary_.empty()) std::rotate(s.boundary_.begin(), s.boundary_.end() - 1, s.boundary_.end());
    s.build_derived();
    return s;
}

Surface Surface::relabeled(const std::vector<int>& perm) const {
    Surface s = *this;
    for (auto& t : s.tris_)
        for (int& v : t) v = perm[v];
    for (int& v : s.boundary_) v = perm[v];
    s.build_derived();
    return s;
}

ValidationReport validate_triangles(const std::vector<Tri>& tris, const std::optional<std::vector<int>>& boundary) {
    BuildOut b = check_and_build(tris, boundary);
    if (b.first) return b.report;
    ValidationReport rep = b.report;
    Surface s = Surface::from_triangles(tris, boundary);
    ValidationReport extra = validate(s);
    for (const auto& c : extra.items)
        if (c.name == "degrees" || c.name == "face_relations") rep.items.push_back(c);
    return rep;
}

ValidationReport validate(const Surface& s) {
    ValidationReport rep;
    rep.items.push_back({"tokens", true, ""});
    rep.items.push_back({"manifold_edges", true, ""});
    rep.items.push_back({"vertex_links", true, ""});
    rep.items.push_back({"connected", true, ""});
    rep.items.push_back({"orientable", true, ""});
    const long f1 = s.num_vertices(), f2 = s.num_edges(), f3 = s.num_triangles();
    const long b = s.boundary_length();
    CheckItem eul{"euler", true, ""};
    if (f1 - f2 + f3 != (s.is_closed() ? 2 : 1)) {
        eul.ok = false;
        eul.detail = "chi=" + std::to_string(f1 - f2 + f3);
    }
    rep.items.push_back(eul);
    if (!s.is_closed()) rep.items.push_back({"boundary_cycle", b >= 3, b >= 3 ? "" : "b<3"});

    CheckItem deg{"degrees", true, ""};
    for (int v = 1; v <= s.num_vertices(); ++v) {
        int d = s.degree(v);
        int lo = s.on_boundary(v) ? 4 : 3;
        if (d < lo) {
            deg.ok = false;
            deg.detail += " " + std::to_string(v) + ":" + std::to_string(d);
        }
    }
    rep.items.push_back(deg);

    CheckItem fr{"face_relations", true, ""};
    if (s.is_closed()) {
        fr.ok = 2 * f2 == 3 * f3;
    } else {
        fr.ok = f2 == 3 * f1 - (3 + b) && f3 == 2 * f1 - (2 + b);
    }
    if (!fr.ok) fr.detail = "f=(" + std::to_string(f1) + "," + std::to_string(f2) + "," + std::to_string(f3) + ")";
    rep.items.push_back(fr);
    return rep;
}

int vertex_from_char(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

char vertex_to_char(int v) {
    if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
    if (v >= 10 && v <= 35) return static_cast<char>('A' + v - 10);
    return 0;
}

namespace {

std::vector<std::string> split_parts(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}' || c == '(' ||
            c == ')' || c == '[' || c == ']' || c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

bool is_int(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

FaceList parse_face_list_raw(const std::string& text) {
    FaceList fl;
    std::string tri_text, bnd_text;
    bool have_bnd = false;
    std::istringstream in(text);
    std::string line;
    enum { None, Tris, Bnd } mode = None;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string body = trim(t.substr(1));
            auto c = body.find(':');
            if (c != std::string::npos) fl.headers.push_back({trim(body.substr(0, c)), trim(body.substr(c + 1))});
            continue;
        }
        if (t.rfind("triangles:", 0) == 0) {
            mode = Tris;
            tri_text += " " + t.substr(10);
            continue;
        }
        if (t.rfind("boundary:", 0) == 0) {
            mode = Bnd;
            have_bnd = true;
            bnd_text += " " + t.substr(9);
            continue;
        }
        if (mode == Bnd)
            bnd_text += " " + t;
        else
            tri_text += " " + t;
    }
    auto parts = split_parts(tri_text);
    if (parts.empty()) throw Error(Err::MalformedToken, "no triangle tokens");
    bool compact = std::all_of(parts.begin(), parts.end(), [](const std::string& p) {
        return p.size() == 3 && std::all_of(p.begin(), p.end(), [](char c) { return vertex_from_char(c) > 0; });
    });
    if (compact) {
        for (const auto& p : parts)
            fl.triangles.push_back({vertex_from_char(p[0]), vertex_from_char(p[1]), vertex_from_char(p[2])});
    } else {
        if (parts.size() % 3 != 0) throw Error(Err::MalformedToken, "integer tokens are not a multiple of three");
        std::vector<int> vals;
        for (const auto& p : parts) {
            if (!is_int(p) || p.size() > 9) throw Error(Err::MalformedToken, "bad token '" + p + "'");
            vals.push_back(std::stoi(p));
        }
        for (size_t i = 0; i < vals.size(); i += 3) fl.triangles.push_back({vals[i], vals[i + 1], vals[i + 2]});
    }
    if (have_bnd) {
        std::vector<int> b;
        for (const auto& p : split_parts(bnd_text)) {
            if (compact) {
                for (char c : p) {
                    int v = vertex_from_char(c);
                    if (v < 0) throw Error(Err::MalformedToken, "bad boundary token '" + p + "'");
                    b.push_back(v);
                }
            } else {
                if (!is_int(p)) throw Error(Err::MalformedToken, "bad boundary token '" + p + "'");
                b.push_back(std::stoi(p));
            }
        }
        if (b.size() < 3) throw Error(Err::BoundaryNotSingleCycle, "boundary shorter than 3");
        fl.boundary = b;
    }
    return fl;
}

Surface parse_face_list(const std::string& text) {
    FaceList fl = parse_face_list_raw(text);
    return Surface::from_triangles(fl.triangles, fl.boundary);
}

std::string triangle_tokens(const Surface& s) {
    const bool letters = s.num_vertices() <= 35;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : s.sorted_triangles()) {
        if (!first) os << ' ';
        first = false;
        if (letters)
            os << vertex_to_char(t[0]) << vertex_to_char(t[1]) << vertex_to_char(t[2]);
        else
            os << t[0] << ',' << t[1] << ',' << t[2];
    }
    return os.str();
}

std::string boundary_token(const Surface& s) {
    const bool letters = s.num_vertices() <= 35;
    std::ostringstream os;
    for (size_t i = 0; i < s.boundary().size(); ++i) {
        if (letters)
            os << vertex_to_char(s.boundary()[i]);
        else
            os << (i ? " " : "") << s.boundary()[i];
    }
    return os.str();
}

std::string serialize(const Surface& s, const std::vector<std::pair<std::string, std::string>>& headers) {
    std::ostringstream os;
    for (const auto& [k, v] : headers) os << "# " << k << ": " << v << "\n";
    os << "triangles: " << triangle_tokens(s) << "\n";
    if (!s.is_closed()) os << "boundary: " << boundary_token(s) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

struct RotSys {
    int N = 0;       // vertices 1..N
    int apex = 0;    // virtual apex for patches, 0 for closed
    std::vector<std::vector<int>> rot;
};

RotSys rotation_system(const Surface& s) {
    RotSys rs;
    const int n = s.num_vertices();
    rs.N = s.is_closed() ? n : n + 1;
    rs.rot.assign(rs.N + 1, {});
    for (int v = 1; v <= n; ++v) rs.rot[v] = s.neighbors(v);
    if (!s.is_closed()) {
        rs.apex = n + 1;
        for (int v : s.boundary()) rs.rot[v].push_back(rs.apex);
        std::vector<int> r(s.boundary().rbegin(), s.boundary().rend());
        rs.rot[rs.apex] = r;
    }
    return rs;
}

// BFS code from the directed root edge (r,s), walking rotations forward (dir=+1)
// or backward (dir=-1). Returns -1 if worse than best (abandoned), 0 if equal,
// 1 if better (best replaced). With best empty the code is always taken.
int bfs_code(const RotSys& rs, int r, int s, int dir, std::vector<int>& best, std::vector<int>& label,
             std::vector<int>& ref, std::vector<int>& queue, std::vector<int>* labeling_out) {
    std::fill(label.begin(), label.end(), 0);
    queue.clear();
    int next = 1;
    label[r] = next++;
    ref[r] = s;
    queue.push_back(r);
    size_t pos = 0;
    int state = best.empty() ? 1 : 0;  // 0 equal so far, 1 better
    std::vector<int> cur;
    auto emit = [&](int x) -> bool {
        if (state == 1) {
            cur.push_back(x);
            return true;
        }
        if (pos >= best.size()) return false;
        if (x < best[pos]) {
            state = 1;
            cur.assign(best.begin(), best.begin() + pos);
            cur.push_back(x);
            return true;
        }
        if (x > best[pos]) return false;
        ++pos;
        return true;
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        const auto& rx = rs.rot[x];
        const int d = static_cast<int>(rx.size());
        int p = static_cast<int>(std::find(rx.begin(), rx.end(), ref[x]) - rx.begin());
        for (int i = 0; i < d; ++i) {
            int y = rx[((p + dir * i) % d + d) % d];
            if (!label[y]) {
                label[y] = next++;
                ref[y] = x;
                queue.push_back(y);
            }
            if (!emit(label[y])) return -1;
        }
        if (!emit(0)) return -1;
    }
    if (labeling_out) *labeling_out = label;
    if (state == 1) {
        best = std::move(cur);
        return 1;
    }
    return pos == best.size() ? 0 : 1;
}

template <class F>
void for_each_optimal(const Surface& s, bool mirror, std::vector<int>& best, F on_optimal) {
    RotSys rs = rotation_system(s);
    std::vector<int> label(rs.N + 1), ref(rs.N + 1), queue;
    queue.reserve(rs.N);
    std::vector<std::pair<int, int>> roots;
    if (rs.apex) {
        for (int v : rs.rot[rs.apex]) roots.push_back({rs.apex, v});
    } else {
        size_t mind = SIZE_MAX;
        for (int v = 1; v <= rs.N; ++v) mind = std::min(mind, rs.rot[v].size());
        for (int v = 1; v <= rs.N; ++v)
            if (rs.rot[v].size() == mind)
                for (int w : rs.rot[v]) roots.push_back({v, w});
    }
    std::vector<std::vector<int>> labs;
    std::vector<int> lab;
    for (auto [r, w] : roots)
        for (int dir : {1, -1}) {
            if (dir == -1 && !mirror) continue;
            int res = bfs_code(rs, r, w, dir, best, label, ref, queue, &lab);
            if (res == 1) labs.clear();
            if (res >= 0) labs.push_back(lab);
        }
    for (auto& l : labs) on_optimal(l, rs.apex);
}

}  // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (int x : code) {
        unsigned v = static_cast<unsigned>(x);
        if (v < 255) {
            out.push_back(digits[v >> 4]);
            out.push_back(digits[v & 15]);
        } else {
            out += "ff";
            for (int sh = 28; sh >= 0; sh -= 4) out.push_back(digits[(v >> sh) & 15]);
        }
    }
    return out;
}

CanonicalCode canonical_code(const Surface& s, bool identify_reflections) {
    std::vector<int> best;
    for_each_optimal(s, identify_reflections, best, [](const std::vector<int>&, int) {});
    CanonicalCode c;
    c.reflections_identified = identify_reflections;
    c.code.reserve(best.size() + 3);
    c.code.push_back(s.is_closed() ? 0 : 1);
    c.code.push_back(s.num_vertices());
    c.code.push_back(s.boundary_length());
    c.code.insert(c.code.end(), best.begin(), best.end());
    return c;
}

std::vector<std::vector<int>> optimal_labelings(const Surface& s, bool identify_reflections) {
    std::vector<int> best;
    std::vector<std::vector<int>> out;
    for_each_optimal(s, identify_reflections, best, [&](const std::vector<int>& lab, int apex) {
        std::vector<int> l(s.num_vertices() + 1, 0);
        for (int v = 1; v <= s.num_vertices(); ++v) l[v] = apex ? lab[v] - 1 : lab[v];
        out.push_back(std::move(l));
    });
    return out;
}

bool is_isomorphic(const Surface& a, const Surface& b, bool identify_reflections) {
    if (a.kind() != b.kind()) throw Error(Err::KindMismatch, "closed vs patch");
    if (a.num_vertices() != b.num_vertices() || a.num_triangles() != b.num_triangles()) return false;
    return canonical_code(a, identify_reflections) == canonical_code(b, identify_reflections);
}

}  // namespace etri

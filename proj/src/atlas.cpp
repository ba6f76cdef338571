#include "etri/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "etri/analysis.hpp"
#include "etri/catalog.hpp"
#include "etri/patch_builder.hpp"
#include "etri/rewrites.hpp"

namespace etri {

const std::vector<TypeTuple>& sphere_types() {
    static const std::vector<TypeTuple> rows = {
        {0, 0, 12}, {0, 1, 10}, {0, 2, 8}, {0, 3, 6}, {0, 4, 4}, {0, 5, 2}, {0, 6, 0},
        {1, 0, 9},  {1, 1, 7},  {1, 2, 5}, {1, 3, 3}, {1, 4, 1}, {2, 0, 6}, {2, 1, 4},
        {2, 2, 2},  {2, 3, 0},  {3, 0, 3}, {3, 1, 1}, {4, 0, 0},
    };
    return rows;
}

bool is_sphere_type(int a3, int a4, int a5) {
    return a3 >= 0 && a4 >= 0 && a5 >= 0 && 3 * a3 + 2 * a4 + a5 == 12;
}

const char* printed_name(PrintedStatus s) {
    switch (s) {
        case PrintedStatus::Exists: return "exists";
        case PrintedStatus::NotExists: return "not-exists";
        case PrintedStatus::Unknown: return "not-known";
    }
    return "?";
}

namespace {

struct PrintedRow {
    TypeTuple type;
    std::set<long> never;    // listed as not existing
    std::set<long> open;     // listed as not known
    int parity = -1;         // 0/1: only this parity exists, the other never does
    const char* cite;
};

const std::vector<PrintedRow>& printed_rows() {
    static const char* eb = "Eberhard; Brueckner (stated by Gruenbaum)";
    static const char* gm = "Gruenbaum and Motzkin";
    static const char* arg = "counting argument on the 7-point star of a degree-6 point";
    static const std::vector<PrintedRow> rows = {
        {{0, 0, 12}, {1}, {}, -1, eb},
        {{0, 1, 10}, {0, 1}, {}, -1, eb},
        {{0, 2, 8}, {}, {}, -1, ""},
        {{0, 3, 6}, {}, {}, -1, ""},
        {{0, 4, 4}, {1}, {}, -1, arg},
        {{0, 5, 2}, {1}, {}, -1, arg},
        {{0, 6, 0}, {1}, {}, -1, gm},
        {{1, 0, 9}, {0, 1, 2}, {4}, -1, eb},
        {{1, 1, 7}, {0, 1}, {}, -1, eb},
        {{1, 2, 5}, {0}, {}, -1, eb},
        {{1, 3, 3}, {}, {}, -1, ""},
        {{1, 4, 1}, {0, 1}, {}, -1, eb},
        {{2, 0, 6}, {1}, {}, -1, arg},
        {{2, 1, 4}, {0}, {}, -1, eb},
        {{2, 2, 2}, {}, {}, -1, ""},
        {{2, 3, 0}, {1}, {3, 7, 15, 31}, -1, arg},
        {{3, 0, 3}, {0, 2}, {4, 12}, -1, eb},
        {{3, 1, 1}, {1}, {17}, 1, gm},
        {{4, 0, 0}, {2}, {}, 0, gm},
    };
    return rows;
}

const PrintedRow& printed_row(int a3, int a4, int a5) {
    if (!is_sphere_type(a3, a4, a5))
        throw Error(Err::NotATypeTuple, "3a3 + 2a4 + a5 must be 12 with all entries >= 0");
    for (const auto& r : printed_rows())
        if (r.type == TypeTuple{a3, a4, a5}) return r;
    throw Error(Err::NotATypeTuple, "no such row");
}

}  // namespace

PrintedStatus printed_status(int a3, int a4, int a5, long n6) {
    const auto& r = printed_row(a3, a4, a5);
    if (n6 < 0) throw Error(Err::Domain, "N must be >= 0");
    if (r.parity >= 0 && n6 % 2 != r.parity) return PrintedStatus::NotExists;
    if (r.never.count(n6)) return PrintedStatus::NotExists;
    if (r.open.count(n6)) return PrintedStatus::Unknown;
    return PrintedStatus::Exists;
}

std::string nonexistence_citation(int a3, int a4, int a5, long n6) {
    if (printed_status(a3, a4, a5, n6) != PrintedStatus::NotExists) return "";
    return printed_row(a3, a4, a5).cite;
}

// ---------------------------------------------------------------- recipes

namespace {

bool in_cell(const Surface& s, int a3, int a4, int a5, long n6) {
    if (!s.is_closed() || !validate(s).ok() || !is_elliptic(s)) return false;
    ParamVector p = parameters(s);
    return p.a(3) == a3 && p.a(4) == a4 && p.a(5) == a5 && p.a(6) == n6;
}

long a6_of(const Surface& s) { return parameters(s).a(6); }

Surface cat(const std::string& id) { return catalog_get(id).surface(); }

std::set<int> letters(const std::string& xs) {
    std::set<int> out;
    for (char c : xs) out.insert(vertex_from_char(c));
    return out;
}

Surface tetrahedron() { return Surface::from_triangles({{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}}); }

// Connected sum trying both orientations of the second face.
std::optional<Surface> sum_at(const Surface& t1, const Tri& f1, const Surface& t2, const Tri& f2) {
    for (Tri g : {f2, Tri{f2[0], f2[2], f2[1]}}) {
        try {
            Surface s = connected_sum(t1, f1, t2, g);
            if (validate(s).ok()) return s;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

std::optional<Tri> face_with_degrees(const Surface& t, std::multiset<int> want) {
    for (const auto& f : t.sorted_triangles()) {
        std::multiset<int> d{t.degree(f[0]), t.degree(f[1]), t.degree(f[2])};
        if (d == want) return f;
    }
    return std::nullopt;
}

struct Recipe {
    std::string id;
    TypeTuple type;
    std::function<std::optional<Surface>(long)> build;
};

// Apply a self-reproductive site and its successors until the cell is reached.
// An empty xs takes the first site of the host.
Recipe iterate_from(TypeTuple type, const std::string& host_name, std::function<Surface()> host, RewriteKind kind,
                    const std::string& xs) {
    std::string id = std::string("iterate ") + kind_name(kind) + " on " + host_name + (xs.empty() ? "" : " X=" + xs);
    return {id, type, [=](long n) -> std::optional<Surface> {
                Surface cur = host();
                if (n < a6_of(cur)) return std::nullopt;
                auto sites = xs.empty() ? find_sites(cur, kind) : find_sites_on(cur, kind, letters(xs));
                if (sites.empty()) return std::nullopt;
                RewriteSite site = sites.front();
                for (int step = 0; step < 4 * n + 8; ++step) {
                    if (in_cell(cur, type[0], type[1], type[2], n)) return cur;
                    if (a6_of(cur) > n) return std::nullopt;
                    auto out = apply_rewrite_tracked(cur, site);
                    if (!out.successor) return std::nullopt;
                    cur = out.surface;
                    site = *out.successor;
                }
                return std::nullopt;
            }};
}

Recipe iterate(TypeTuple type, const std::string& host, RewriteKind kind, const std::string& xs) {
    return iterate_from(type, host, [=] { return cat(host); }, kind, xs);
}

using PieceFn = std::function<Piece()>;

PieceFn cat_piece(const std::string& id) {
    return [=] { return Piece::from(cat(id)); };
}
PieceFn path_piece(int k) {
    return [=] { return build_200(k, 0); };
}

// Strip gluing: N = base + step * m for m belts.
Recipe strip(TypeTuple type, const std::string& what, PieceFn p1, PieceFn p2, long base) {
    return {"strip " + what, type, [=](long n) -> std::optional<Surface> {
                Piece a = p1(), b = p2();
                const long step = static_cast<long>(a.rim.size());
                if (n < base || (n - base) % step) return std::nullopt;
                GlueResult g = glue_strip(a, b, static_cast<int>((n - base) / step));
                if (!g.elliptic) return std::nullopt;
                return g.surface;
            }};
}

// Witness of another cell followed by a local move.
Recipe derived(TypeTuple type, const std::string& id, TypeTuple from, long shift,
               std::function<std::optional<Surface>(const Surface&)> move) {
    return {id, type, [=](long n) -> std::optional<Surface> {
                if (n - shift < 0) return std::nullopt;
                auto base = construct(from[0], from[1], from[2], n - shift);
                if (!base) {
                    auto hits = catalog_lookup(from[0], from[1], from[2], n - shift);
                    for (auto* e : hits)
                        if (e->quarantine.empty()) base = Construction{e->surface(), e->id};
                }
                if (!base) return std::nullopt;
                return move(base->surface);
            }};
}

std::function<std::optional<Surface>(const Surface&)> mutant(RewriteKind kind) {
    return [=](const Surface& t) -> std::optional<Surface> {
        auto sites = find_sites(t, kind);
        if (sites.empty()) return std::nullopt;
        return apply_rewrite(t, sites.front());
    };
}

// new degree-3 point in a triangle with the given degrees
std::function<std::optional<Surface>(const Surface&)> stellar(std::multiset<int> degs) {
    return [=](const Surface& t) -> std::optional<Surface> {
        auto f = face_with_degrees(t, degs);
        if (!f) return std::nullopt;
        return sum_at(t, *f, tetrahedron(), {1, 2, 3});
    };
}

// remove a degree-3 point whose neighbours all have degree 6
std::optional<Surface> drop_degree3(const Surface& t) {
    for (int v = 1; v <= t.num_vertices(); ++v) {
        if (t.degree(v) != 3) continue;
        const auto& r = t.neighbors(v);
        if (std::any_of(r.begin(), r.end(), [&](int w) { return t.degree(w) != 6; })) continue;
        std::vector<Tri> tris;
        for (const auto& f : t.triangles())
            if (f[0] != v && f[1] != v && f[2] != v) tris.push_back(f);
        tris.push_back({r[0], r[1], r[2]});
        return Surface::from_triangles(tris);
    }
    return std::nullopt;
}

// Repeated connected sums with `part` at faces of degrees 4,4,4.
Recipe sums(TypeTuple type, const std::string& base_id, const std::string& part_id, long step) {
    return {"connected sum " + base_id + " # copies of " + part_id, type,
            [=](long n) -> std::optional<Surface> {
                Surface cur = cat(base_id);
                const Surface part = cat(part_id);
                long have = a6_of(cur);
                if (n < have || (n - have) % step) return std::nullopt;
                while (have < n) {
                    auto f1 = face_with_degrees(cur, {4, 4, 4});
                    auto f2 = face_with_degrees(part, {4, 4, 4});
                    if (!f1 || !f2) return std::nullopt;
                    auto s = sum_at(cur, *f1, part, *f2);
                    if (!s) return std::nullopt;
                    cur = *s;
                    have = a6_of(cur);
                }
                return cur;
            }};
}

const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> all = [] {
        std::vector<Recipe> r;
        const TypeTuple t0012{0, 0, 12}, t0110{0, 1, 10}, t028{0, 2, 8}, t036{0, 3, 6}, t044{0, 4, 4},
            t052{0, 5, 2}, t060{0, 6, 0}, t109{1, 0, 9}, t117{1, 1, 7}, t125{1, 2, 5}, t133{1, 3, 3},
            t141{1, 4, 1}, t206{2, 0, 6}, t214{2, 1, 4}, t222{2, 2, 2}, t230{2, 3, 0}, t303{3, 0, 3},
            t311{3, 1, 1}, t400{4, 0, 0};

        // (0,0,12): two (0,0,6)_6 patches, residue class of N mod 6 picks the pair
        const std::vector<std::pair<int, int>> hex = {{3, 3}, {3, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
        for (auto [i, j] : hex) {
            std::string a = "2.4/(0,0,6," + std::to_string(i) + ")_6", b = "2.4/(0,0,6," + std::to_string(j) + ")_6";
            r.push_back(strip(t0012, a + " + " + b, cat_piece(a), cat_piece(b), i + j));
        }
        r.push_back(iterate(t0110, "3.2/(0,1,10,3)", RewriteKind::D, "13467DE"));
        r.push_back(iterate(t028, "3.3/(0,2,8,0)", RewriteKind::C, "23459"));
        r.push_back(iterate(t036, "3.4/(0,3,6,0)", RewriteKind::C, "23468"));
        r.push_back(iterate(t044, "3.5/(0,4,4,4)", RewriteKind::E1, "12359BC"));
        r.push_back(iterate(t052, "3.6/(0,5,2,0)", RewriteKind::B1, "12567"));
        r.push_back(iterate(t052, "3.6/(0,5,2,4)", RewriteKind::E3, "136789A"));
        r.push_back(iterate(t052, "3.6/(0,5,2,3)", RewriteKind::G, "124568A"));
        r.push_back(iterate(t052, "3.6/(0,5,2,2)", RewriteKind::G, "1234789"));
        r.push_back(iterate(t060, "3.7/(0,6,0,0)", RewriteKind::B1, "12345"));
        r.push_back(iterate(t060, "3.7/(0,6,0,2)", RewriteKind::G, "1234678"));
        r.push_back(sums(t060, "3.7/(0,6,0,0)", "3.7/(0,6,0,0)", 3));
        // the printed (0,6,0,4) is quarantined; two B1 steps on the octahedron give a host
        r.push_back(iterate_from(t060, "(0,6,0,4) from B1 on 3.7/(0,6,0,0)",
                                 [] { return *iterate(TypeTuple{0, 6, 0}, "3.7/(0,6,0,0)", RewriteKind::B1,
                                                      "12345").build(4); },
                                 RewriteKind::G, ""));
        for (int i : {5, 6, 7, 8, 9})
            for (int j : {1, 2, 3, 4, 6}) {
                std::string a = "2.4/(1,0,3," + std::to_string(i) + ")_6", b = "2.4/(0,0,6," + std::to_string(j) + ")_6";
                r.push_back(strip(t109, a + " + " + b, cat_piece(a), cat_piece(b), i + j));
            }
        r.push_back(strip(t109, "2.3/(1,0,3,5)_5 + 2.3/(0,0,6,0)_5", cat_piece("2.3/(1,0,3,5)_5"),
                          cat_piece("2.3/(0,0,6,0)_5"), 5));
        r.push_back(iterate(t117, "3.9/(1,1,7,2)", RewriteKind::C, "239AB"));
        r.push_back(iterate(t125, "3.10/(1,2,5,1)", RewriteKind::C, "12456"));
        r.push_back(derived(t133, "M1 on a (0,3,6,N-3) witness", t036, 3, mutant(RewriteKind::M1)));
        r.push_back(iterate(t141, "3.12/(1,4,1,3)", RewriteKind::B1, "24567"));
        r.push_back(iterate(t141, "3.12/(1,4,1,3)", RewriteKind::G, "1235678"));
        r.push_back(sums(t141, "3.12/(1,4,1,2)", "3.7/(0,6,0,3)", 6));
        r.push_back(strip(t141, "2.4/(1,1,1,13)_6 + (0,3,0,3)_6", cat_piece("2.4/(1,1,1,13)_6"),
                          [] { return Piece::from(build_030(2, 0, 0).patch); }, 16));
        r.push_back(derived(t206, "degree-3 point in a 4,5,5 triangle of a (1,1,7,N-2) witness", t117, 2,
                            stellar({4, 5, 5})));
        r.push_back(derived(t214, "M2 on a (1,2,5,N-2) witness", t125, 2, mutant(RewriteKind::M2)));
        r.push_back(iterate(t222, "3.15/(2,2,2,0)", RewriteKind::A, "123"));
        r.push_back(iterate(t230, "3.16/(2,3,0,0)", RewriteKind::B1, "12345"));
        r.push_back(strip(t230, "(2,0,0,2)_6 path + (0,3,0,3)_6", path_piece(3),
                          [] { return Piece::from(build_030(2, 0, 0).patch); }, 5));
        r.push_back({"EF of a (2,3,0,2h) witness, N = 9+8h", t230, [t230](long n) -> std::optional<Surface> {
                         if (n < 9 || (n - 9) % 8) return std::nullopt;
                         auto base = construct(t230[0], t230[1], t230[2], (n - 9) / 4);
                         if (!base) return std::nullopt;
                         return edge_fullering(base->surface);
                     }});
        r.push_back({"method A: 2.3/(1,1,1,5)_5 + 2.3/(1,1,1,7)_5", t230, [](long n) -> std::optional<Surface> {
                         if (n != 19) return std::nullopt;
                         return glue_method(cat("2.3/(1,1,1,5)_5"), cat("2.3/(1,1,1,7)_5"), GlueMethod::A).surface;
                     }});
        r.push_back(derived(t303, "degree-3 point removed from a (4,0,0,N+3) witness", t400, -3, drop_degree3));
        r.push_back(strip(t303, "2.4/(1,0,3,8)_6 + (2,0,0,2)_6 path", cat_piece("2.4/(1,0,3,8)_6"), path_piece(3), 10));
        r.push_back(strip(t303, "(1,0,3,12)_6 from 2.3/(1,0,3,6)_5 + (2,0,0,2)_6 path",
                          [] { return Piece::from(generic_enlarge(cat("2.3/(1,0,3,6)_5"), 0, 1)); }, path_piece(3),
                          14));
        r.push_back(strip(t303, "2.6/(1,0,3,15)_8 + (2,0,0,3)_8 path", cat_piece("2.6/(1,0,3,15)_8"), path_piece(4), 18));
        r.push_back(strip(t311, "2.2/(1,1,1,2)_4 + (2,0,0,1)_4 path", cat_piece("2.2/(1,1,1,2)_4"), path_piece(2), 3));
        r.push_back(strip(t311, "2.4/(1,1,1,5)_6 + (2,0,0,2)_6 path", cat_piece("2.4/(1,1,1,5)_6"), path_piece(3), 7));
        r.push_back(strip(t311, "2.4/(1,1,1,13)_6 + (2,0,0,2)_6 path", cat_piece("2.4/(1,1,1,13)_6"), path_piece(3), 15));
        r.push_back(strip(t311, "2.6/(1,1,1,10)_8 + (2,0,0,3)_8 path", cat_piece("2.6/(1,1,1,10)_8"), path_piece(4), 13));
        r.push_back({"two (2,0,0,k-1)_2k paths, k = N/2+1", t400, [](long n) -> std::optional<Surface> {
                         if (n < 4 || n % 2) return std::nullopt;
                         const int k = static_cast<int>(n / 2 + 1);
                         GlueResult g = glue_strip(build_200(k, 0), build_200(k, 0), 0);
                         if (!g.elliptic) return std::nullopt;
                         return g.surface;
                     }});
        return r;
    }();
    return all;
}

}  // namespace

std::optional<Construction> construct(int a3, int a4, int a5, long n6) {
    if (!is_sphere_type(a3, a4, a5))
        throw Error(Err::NotATypeTuple, "3a3 + 2a4 + a5 must be 12 with all entries >= 0");
    if (n6 < 0) return std::nullopt;
    for (const auto& rc : recipes()) {
        if (rc.type != TypeTuple{a3, a4, a5}) continue;
        std::optional<Surface> s;
        try {
            s = rc.build(n6);
        } catch (const Error&) {
            continue;
        }
        if (s && in_cell(*s, a3, a4, a5, n6)) return Construction{*s, rc.id};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- existence

const EnumerationResult& cached_elliptic(int n, int cap) {
    static std::mutex mu;
    static std::map<int, EnumerationResult> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_closed(n, true, {std::max(cap, n), 1})).first;
    return it->second;
}

Existence check_existence(int a3, int a4, int a5, long a6, int enum_cap) {
    if (!is_sphere_type(a3, a4, a5))
        throw Error(Err::NotATypeTuple, "3a3 + 2a4 + a5 must be 12 with all entries >= 0");
    if (a6 < 0) throw Error(Err::Domain, "N must be >= 0");
    Existence out;
    for (auto* e : catalog_lookup(a3, a4, a5, a6)) {
        if (!e->quarantine.empty()) continue;
        out.status = Existence::Status::Exists;
        out.witness = e->surface();
        out.provenance = "catalog " + e->id;
        return out;
    }
    if (auto c = construct(a3, a4, a5, a6)) {
        out.status = Existence::Status::Exists;
        out.witness = c->surface;
        out.provenance = "recipe: " + c->recipe;
        return out;
    }
    const long f1 = a3 + a4 + a5 + a6;
    if (f1 <= enum_cap && f1 >= 4) {
        const auto& res = cached_elliptic(static_cast<int>(f1), enum_cap);
        for (const auto& s : res.objects)
            if (in_cell(s, a3, a4, a5, a6)) {
                out.status = Existence::Status::Exists;
                out.witness = s;
                out.provenance = "enumeration n=" + std::to_string(f1) + " (elliptic)";
                return out;
            }
        out.status = Existence::Status::NotExistsEnumerated;
        out.provenance = "enumeration n=" + std::to_string(f1) + " (elliptic, " + std::to_string(res.codes.size()) +
                         " classes)";
        return out;
    }
    std::string cite = nonexistence_citation(a3, a4, a5, a6);
    if (!cite.empty()) {
        out.status = Existence::Status::NotExistsCited;
        out.provenance = "cited: " + cite;
        return out;
    }
    out.provenance = printed_status(a3, a4, a5, a6) == PrintedStatus::Unknown ? "open in the literature"
                                                                                : "no recipe reaches this cell";
    return out;
}

// ---------------------------------------------------------------- atlas

std::vector<AtlasRow> atlas(long max_n6, int enum_cap, int workers) {
    if (max_n6 < 0 || enum_cap < 4) throw Error(Err::Domain, "bounds must be positive (enum_cap >= 4)");
    std::vector<AtlasRow> rows;
    std::vector<std::pair<size_t, long>> jobs;
    for (const auto& t : sphere_types()) {
        AtlasRow row;
        row.type = t;
        for (long n = 0; n <= max_n6; ++n) {
            AtlasCell c;
            c.n6 = n;
            c.printed = printed_status(t[0], t[1], t[2], n);
            row.cells.push_back(c);
            jobs.push_back({rows.size(), n});
        }
        rows.push_back(row);
    }
    // warm the enumeration cache in order so workers never race to build it
    for (int n = 4; n <= enum_cap; ++n) cached_elliptic(n, enum_cap);
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (size_t j = next++; j < jobs.size(); j = next++) {
            auto [ri, n] = jobs[j];
            const auto& t = rows[ri].type;
            rows[ri].cells[n].result = check_existence(t[0], t[1], t[2], n, enum_cap);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    return rows;
}

std::string status_letter(Existence::Status s) {
    switch (s) {
        case Existence::Status::Exists: return "E";
        case Existence::Status::NotExistsEnumerated: return "N";
        case Existence::Status::NotExistsCited: return "C";
        case Existence::Status::Unknown: return "?";
    }
    return "?";
}

std::string atlas_text(const std::vector<AtlasRow>& rows) {
    std::ostringstream o;
    for (const auto& r : rows) {
        o << '(' << r.type[0] << ',' << r.type[1] << ',' << r.type[2] << ") ";
        for (const auto& c : r.cells) o << status_letter(c.result.status);
        o << '\n';
    }
    return o.str();
}

}  // namespace etri

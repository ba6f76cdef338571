#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etri/analysis.hpp"
#include "etri/catalog.hpp"
#include "etri/enumerator.hpp"
#include "etri/rewrites.hpp"

using namespace etri;

namespace {
Surface cat(const std::string& id) { return catalog_get(id).surface(); }
Surface parse(const std::string& t) { return parse_face_list("triangles: " + t); }
const char* kOcta = "123 134 145 152 623 634 645 652";

std::array<long, 4> alphas(const Surface& s) {
    ParamVector p = parameters(s);
    return {p.a(3), p.a(4), p.a(5), p.a(6)};
}
std::array<long, 4> diff(const Surface& a, const Surface& b) {
    auto x = alphas(a), y = alphas(b);
    return {y[0] - x[0], y[1] - x[1], y[2] - x[2], y[3] - x[3]};
}
std::array<long, 4> widen(std::array<int, 4> d) { return {d[0], d[1], d[2], d[3]}; }

std::vector<Surface> closed_catalog() {
    std::vector<Surface> out;
    for (const auto* e : catalog_all({.closed = true}))
        if (e->quarantine.empty()) out.push_back(e->surface());
    return out;
}
}  // namespace

TEST_CASE("kind names round trip") {
    for (auto k : all_kinds()) CHECK(kind_from_name(kind_name(k)) == k);
    CHECK_THROWS_AS(kind_from_name("Q"), Error);
    CHECK_FALSE(self_reproductive(RewriteKind::M1));
    CHECK(self_reproductive(RewriteKind::G));
}

TEST_CASE("site search") {
    bool found = false;
    for (const auto& s : find_sites(cat("3.3/(0,2,8,0)"), RewriteKind::C))
        if (s.vertex_set() == std::set<int>{2, 3, 4, 5, 9}) found = true;
    CHECK(found);
    CHECK_FALSE(find_sites(cat("3.1/(0,0,12,0)"), RewriteKind::M1).empty());
    CHECK(find_sites(parse("123 124 134 234"), RewriteKind::C).empty());
}

TEST_CASE("printed rewrite examples") {
    Surface t = cat("3.4/(0,3,6,1)");
    auto m1 = find_sites(t, RewriteKind::M1);
    REQUIRE_FALSE(m1.empty());
    CHECK(classify(apply_rewrite(t, m1[0])).notation() == "(1,3,3,4)");

    Surface a = cat("3.15/(2,2,2,0)");
    for (int n = 1; n <= 5; ++n) {
        auto sites = find_sites(a, RewriteKind::A);
        REQUIRE_FALSE(sites.empty());
        a = apply_rewrite(a, sites[0]);
        CHECK(classify(a).notation() == "(2,2,2," + std::to_string(n) + ")");
    }

    Surface o = parse(kOcta);
    auto b1 = find_sites_on(o, RewriteKind::B1, {1, 2, 3, 4, 5});
    REQUIRE_FALSE(b1.empty());
    Surface o2 = apply_rewrite(o, b1[0]);
    CHECK(classify(o2).notation() == "(0,6,0,2)");
    CHECK(is_isomorphic(o2, cat("3.7/(0,6,0,2)")));
}

TEST_CASE("every catalog site changes the parameters by the printed delta") {
    int applied = 0;
    for (const Surface& t : closed_catalog())
        for (auto k : all_kinds())
            for (const auto& site : find_sites(t, k)) {
                Surface u = apply_rewrite(t, site);
                CHECK(validate(u).ok());
                CHECK(diff(t, u) == widen(rewrite_delta(k, site.stage)));
                ++applied;
            }
    CHECK(applied > 100);
}

TEST_CASE("P2 on an enumerated host") {
    const auto& ten = enumerate_closed(10, true, {.cap = 10});
    int hosts = 0;
    for (const auto& t : ten.objects)
        for (const auto& site : find_sites(t, RewriteKind::P2)) {
            CHECK(diff(t, apply_rewrite(t, site)) == widen(rewrite_delta(RewriteKind::P2)));
            ++hosts;
        }
    CHECK(hosts > 0);
}

TEST_CASE("stale sites are rejected") {
    Surface t = cat("3.3/(0,2,8,0)");
    auto sites = find_sites(t, RewriteKind::C);
    REQUIRE_FALSE(sites.empty());
    Surface u = apply_rewrite(t, sites[0]);
    try {
        apply_rewrite(u, sites[0]);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Err::StaleSite);
    }
}

TEST_CASE("self-reproduction for 20 steps") {
    for (auto k : {RewriteKind::A, RewriteKind::B1, RewriteKind::B2, RewriteKind::C, RewriteKind::D, RewriteKind::G}) {
        CAPTURE(kind_name(k));
        std::optional<Surface> host;
        for (const Surface& t : closed_catalog())
            if (!host && !find_sites(t, k).empty()) host = t;
        REQUIRE(host);
        Surface t = *host;
        RewriteSite site = find_sites(t, k)[0];
        long n6 = classify(t).a6;
        for (int step = 0; step < 20; ++step) {
            RewriteOutcome out = apply_rewrite_tracked(t, site);
            REQUIRE(out.successor);
            CHECK(out.successor->kind == k);
            CHECK_FALSE(find_sites_on(out.surface, k, out.successor->vertex_set()).empty());
            t = out.surface;
            site = *out.successor;
        }
        CHECK(classify(t).a6 == n6 + 20 * rewrite_delta(k)[3]);
    }
}

TEST_CASE("E chains") {
    Surface t = cat("3.5/(0,4,4,4)");
    auto e1 = find_sites(t, RewriteKind::E1);
    REQUIRE_FALSE(e1.empty());
    RewriteSite site = e1[0];
    RewriteKind expect = RewriteKind::E2;
    for (int step = 0; step < 6; ++step) {
        RewriteOutcome out = apply_rewrite_tracked(t, site);
        REQUIRE(out.successor);
        CHECK(out.successor->kind == expect);
        CHECK_FALSE(find_sites_on(out.surface, expect, out.successor->vertex_set()).empty());
        t = out.surface;
        site = *out.successor;
        expect = expect == RewriteKind::E1 ? RewriteKind::E2 : RewriteKind::E1;
    }

    Surface h = cat("3.6/(0,5,2,4)");
    auto e3 = find_sites(h, RewriteKind::E3);
    REQUIRE_FALSE(e3.empty());
    site = e3[0];
    for (int step = 0; step < 6; ++step) {
        RewriteOutcome out = apply_rewrite_tracked(h, site);
        CHECK(diff(h, out.surface) == widen(rewrite_delta(RewriteKind::E3, site.stage)));
        REQUIRE(out.successor);
        CHECK(out.successor->stage == site.stage % 3 + 1);
        h = out.surface;
        site = *out.successor;
    }
    CHECK(classify(h).type_tuple() == "(0,5,2)");
}

TEST_CASE("face fullering") {
    Surface tet = parse("123 124 134 234");
    Surface f = face_fullering(tet);
    CHECK(classify(f).notation() == "(4,0,0,4)");
    CHECK(f.num_vertices() == 8);
    CHECK(f.num_edges() == 18);
    CHECK(f.num_triangles() == 12);
    Surface o = face_fullering(parse(kOcta));
    CHECK(classify(o).notation() == "(0,6,0,8)");
    CHECK(o.num_vertices() == 14);
    for (const Surface& t : closed_catalog()) {
        Surface u = face_fullering(t);
        ParamVector a = parameters(t), b = parameters(u);
        CHECK(b.f1 == a.f1 + a.f3);
        CHECK(b.f2 == 3 * a.f2);
        CHECK(b.f3 == 2 * a.f2);
        for (int d = 3; d <= 5; ++d) CHECK(b.a(d) == a.a(d));
        CHECK(b.a(6) == a.a(6) + a.f3);
    }
}

TEST_CASE("edge fullering") {
    CHECK(classify(edge_fullering(cat("3.16/(2,3,0,0)"))).notation() == "(2,3,0,9)");
    Surface ef = edge_fullering(cat("2.4/(1,0,3,7)_6"));
    CHECK(classify(ef).notation().rfind("(1,0,3,31)_12", 0) == 0);
    Surface tet = edge_fullering(parse("123 124 134 234"));
    CHECK(classify(tet).notation() == "(4,0,0,6)");
    CHECK(tet.num_vertices() == 10);
    for (const Surface& t : closed_catalog()) {
        Surface u = edge_fullering(t);
        ParamVector a = parameters(t), b = parameters(u);
        CHECK(b.f1 == a.f1 + a.f2);
        CHECK(b.f2 == 4 * a.f2);
        CHECK(b.f3 == 4 * a.f3);
        CHECK(b.a(6) == a.a(6) + a.f2);
    }
    Surface p = cat("2.2/(1,1,1,2)_4");
    Surface q = edge_fullering(p);
    CHECK(q.boundary_length() == 2 * p.boundary_length());
    CHECK(q.num_triangles() == 4 * p.num_triangles());
}

TEST_CASE("strip glueing") {
    Surface a = cat("2.4/(0,0,6,3)_6");
    for (int m = 0; m <= 2; ++m) {
        GlueResult g = glue_strip(a, a, m);
        CHECK(g.elliptic);
        CHECK(classify(g.surface).notation() == "(0,0,12," + std::to_string(6 + 6 * m) + ")");
        CHECK(parameters(g.surface).euler == 2);
    }
    for (int i : {5, 6, 7})
        for (int j : {1, 2, 3}) {
            GlueResult g = glue_strip(cat("2.4/(1,0,3," + std::to_string(i) + ")_6"),
                                      cat("2.4/(0,0,6," + std::to_string(j) + ")_6"), 1);
            CHECK(classify(g.surface).notation() == "(1,0,9," + std::to_string(i + j + 6) + ")");
        }
    Surface tri = cat("2.1/(0,3,0,0)_3");
    GlueResult s = glue_strip(tri, tri.mirrored(), 0);
    CHECK(s.surface.num_triangles() == 2 + 2 * 3);
    CHECK(validate(s.surface).ok());
    try {
        glue_strip(tri, a, 0);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Err::BoundaryLengthMismatch);
    }
}

TEST_CASE("glue methods") {
    GlueResult a = glue_method(cat("2.3/(1,1,1,5)_5"), cat("2.3/(1,1,1,7)_5"), GlueMethod::A);
    CHECK(classify(a.surface).notation() == "(2,3,0,19)");
    GlueResult b = glue_method(cat("2.1/(1,1,1,2)_3"), cat("2.1/(1,1,1,2)_3"), GlueMethod::A);
    CHECK(classify(b.surface).notation() == "(2,3,0,9)");
    GlueResult c = glue_method(cat("2.3/(1,1,1,4)_5"), cat("2.3/(1,1,1,11)_5"), GlueMethod::C);
    CHECK(classify(c.surface).notation() == "(2,3,0,17)");
}

TEST_CASE("connected sums") {
    Surface o = parse(kOcta);
    Surface s = connected_sum(o, {1, 2, 3}, o, {1, 2, 3});
    CHECK(classify(s).notation() == "(0,6,0,3)");
    // 4,4,4 faces on both sides: every seam point ends at 4 + 4 - 2
    for (int v = 1; v <= s.num_vertices(); ++v) CHECK(degree(s, v) <= 6);
    CHECK(parameters(s).a(6) == 3);

    Surface t = cat("3.12/(1,4,1,2)");
    Surface add = cat("3.7/(0,6,0,3)");
    Tri f1{0, 0, 0}, f2{0, 0, 0};
    for (const auto& f : t.triangles())
        if (degree(t, f[0]) == 4 && degree(t, f[1]) == 4 && degree(t, f[2]) == 4) f1 = f;
    for (const auto& f : add.triangles())
        if (degree(add, f[0]) == 4 && degree(add, f[1]) == 4 && degree(add, f[2]) == 4) f2 = f;
    REQUIRE(f1[0] != 0);
    REQUIRE(f2[0] != 0);
    Surface u = connected_sum(t, f1, add, f2);
    CHECK(classify(u).type_tuple() == "(1,4,1)");
    CHECK(classify(u).a6 == 2 + 3 + 3);

    CHECK_THROWS_AS(connected_sum(o, {1, 2, 6}, o, {1, 2, 3}), Error);
}

TEST_CASE("edge split") {
    Surface o = parse(kOcta);
    Surface s = split_edge(o, 1, 2);
    CHECK(s.num_vertices() == 7);
    CHECK(validate(s).ok());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "etri/analysis.hpp"
#include "etri/catalog.hpp"
#include "etri/patch_builder.hpp"
#include "oracle.hpp"

using namespace etri;

namespace {
Surface parse(const std::string& t) { return parse_face_list("triangles: " + t); }
Surface patch(const std::string& t, const std::string& b) {
    return parse_face_list("triangles: " + t + "\nboundary: " + b + "\n");
}
}  // namespace

TEST_CASE("degree with the boundary convention") {
    Surface tri = patch("123", "123");
    CHECK(degree(tri, 1) == 4);
    Surface p = parse("124 134 234");
    CHECK(degree(p, 4) == 3);
    CHECK(degree(p, 1) == 5);
    Surface o = parse("123 134 145 152 623 634 645 652");
    for (int v = 1; v <= 6; ++v) CHECK(degree(o, v) == 4);
    CHECK_THROWS_AS(degree(o, 7), Error);
}

TEST_CASE("parameters of small objects") {
    Surface ico = catalog_get("3.1/(0,0,12,0)").surface();
    ParamVector p = parameters(ico);
    CHECK(p.a(5) == 12);
    CHECK(p.a(3) + p.a(4) + p.a(6) == 0);
    CHECK(p.euler == 2);

    ParamVector t = parameters(parse("123 124 134 234"));
    CHECK(t.a(3) == 4);
    CHECK(t.curvature() == 12);

    Signature s = classify(parse("123 124 134 235"));
    CHECK(!s.closed);
    CHECK(s.a3 == 1);
    CHECK(s.a4 == 1);
    CHECK(s.a5 == 1);
    CHECK(s.a6 == 2);
    CHECK(s.b == 4);
    CHECK(s.notation() == "(1,1,1,2)_4 β4=1 β5=1");
}

TEST_CASE("classify patches and spheres") {
    Signature s = classify(patch("126 156 236 346 456", "12345"));
    CHECK(s.notation() == "(0,0,6,0)_5 β4=0 β5=5");
    CHECK(s.beta5 == 5);
    CHECK(s.beta4 == 0);

    Signature c = classify(parse("123 124 134 235 245 345"));
    CHECK(c.closed);
    CHECK(c.type_tuple() == "(2,3,0)");
    CHECK(c.a6 == 0);
}

TEST_CASE("degree 7 is not elliptic") {
    // bipyramid over a heptagon: both apices have degree 7
    std::string t;
    for (int i = 0; i < 7; ++i) {
        int a = 3 + i, b = 3 + (i + 1) % 7;
        t += "1" + std::string(1, vertex_to_char(a)) + vertex_to_char(b) + " ";
        t += "2" + std::string(1, vertex_to_char(b)) + vertex_to_char(a) + " ";
    }
    Surface s = parse(t);
    CHECK_FALSE(is_elliptic(s));
    try {
        classify(s);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotElliptic);
        CHECK(std::string(e.what()).find('1') != std::string::npos);
    }
}

TEST_CASE("face number identities on every catalog entry") {
    std::set<std::string> closed_types, patch_types;
    for (const auto* e : catalog_all()) {
        if (!e->quarantine.empty()) continue;
        Surface s = e->surface();
        ParamVector p = parameters(s);
        long sum = 0, dsum = 0;
        for (auto [d, c] : p.alpha) {
            sum += c;
            dsum += d * c;
        }
        CHECK(sum == p.f1);
        Signature g = classify(s);
        if (s.is_closed()) {
            CHECK(dsum == 2 * p.f2);
            CHECK(p.curvature() == 12);
            closed_types.insert(g.type_tuple());
        } else {
            long b = s.boundary_length();
            CHECK(p.f2 == 3 * p.f1 - (3 + b));
            CHECK(p.f3 == 2 * p.f1 - (2 + b));
            CHECK(p.curvature() == 6);
            CHECK(3 * g.a3 + 2 * g.a4 + g.a5 == 6);
            CHECK(g.beta4 <= g.a4);
            CHECK(g.beta5 <= g.a5);
            patch_types.insert(g.type_tuple());
        }
    }
    CHECK(closed_types.size() <= 19);
    CHECK(patch_types.size() <= 7);
}

TEST_CASE("parameters do not depend on labels") {
    Surface s = catalog_get("3.16/(2,3,0,13)").surface();
    for (unsigned seed = 1; seed < 8; ++seed) {
        ParamVector a = parameters(s), b = parameters(oracle::shuffled(s, seed));
        CHECK(a.alpha == b.alpha);
        CHECK(classify(oracle::shuffled(s, seed)).notation() == classify(s).notation());
    }
}

TEST_CASE("interior distance") {
    Surface p = parse("123 145 125 256 236 367");
    int inner = 0;
    for (int v = 1; v <= p.num_vertices(); ++v)
        if (!p.on_boundary(v)) inner = v;
    REQUIRE(inner != 0);
    CHECK(degree(p, inner) == 4);
    CHECK(interior_distance(p, inner).k == 1);

    Surface b = add_belt(patch("123", "123"));
    for (int v = 1; v <= b.num_vertices(); ++v)
        if (!b.on_boundary(v)) CHECK(interior_distance(b, v).k == 1);

    Surface q = build_030(5, 2, 0).patch;
    int four = 0;
    for (int v = 1; v <= q.num_vertices(); ++v)
        if (!q.on_boundary(v) && degree(q, v) == 4) four = v;
    REQUIRE(four != 0);
    DistanceResult d = interior_distance(q, four);
    CHECK(d.k == oracle::boundary_bfs(q, four));
    CHECK(d.k == 2);

    CHECK_THROWS_AS(interior_distance(q, q.boundary()[0]), Error);
}

TEST_CASE("boundary profile gaps sum to b") {
    Surface p = catalog_get("2.2/(1,1,1,2)_4").surface();
    auto prof = boundary_profile(p);
    int total = 0;
    for (const auto& sp : prof) total += sp.gap;
    CHECK(total == p.boundary_length());
    CHECK(boundary_degrees(p).size() == size_t(p.boundary_length()));
}

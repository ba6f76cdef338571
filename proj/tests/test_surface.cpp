#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etri/analysis.hpp"
#include "etri/catalog.hpp"
#include "etri/surface.hpp"
#include "oracle.hpp"

using namespace etri;

namespace {

Surface parse(const std::string& t) { return parse_face_list("triangles: " + t); }

Err parse_error(const std::string& text) {
    try {
        parse_face_list(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return Err::Domain;
}

bool item_failed(const ValidationReport& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return !it.ok;
    return false;
}

const char* kOctahedron = "123 134 145 152 623 634 645 652";

}  // namespace

TEST_CASE("tetrahedron parses closed") {
    Surface t = parse("123 124 134 234");
    CHECK(t.is_closed());
    CHECK(t.num_vertices() == 4);
    CHECK(t.num_triangles() == 4);
    CHECK(validate(t).ok());
}

TEST_CASE("single triangle is a patch") {
    Surface p = parse_face_list("triangles: 123\nboundary: 123\n");
    CHECK_FALSE(p.is_closed());
    CHECK(p.boundary_length() == 3);
    CHECK(p.num_triangles() == 1);
}

TEST_CASE("two triangles infer the boundary 1-3-2-4") {
    Surface p = parse("123 124");
    REQUIRE_FALSE(p.is_closed());
    CHECK(same_cycle(p.boundary(), {1, 3, 2, 4}));
}

TEST_CASE("edge in three triangles is flagged") {
    auto r = validate_triangles({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
    CHECK_FALSE(r.ok());
    CHECK(item_failed(r, "manifold_edges"));
    CHECK(parse_error("triangles: 123 124 125 134 135") == Err::NonManifoldEdge);
}

TEST_CASE("malformed and broken inputs") {
    CHECK(parse_error("triangles: 12") == Err::MalformedToken);
    CHECK(parse_error("triangles: 11 2") == Err::MalformedToken);
    CHECK(parse_error("triangles: 123 456") == Err::Disconnected);
    // two fans meeting at vertex 1 only
    CHECK(parse_error("triangles: 123 145") == Err::BrokenLink);
}

TEST_CASE("octahedron validates with chi 2") {
    Surface o = parse(kOctahedron);
    CHECK(validate(o).ok());
    ParamVector p = parameters(o);
    CHECK(p.euler == 2);
    CHECK(p.a(4) == 6);
}

TEST_CASE("three points do not make a sphere") {
    CHECK_THROWS_AS(Surface::from_triangles({{1, 2, 3}, {1, 3, 2}}), Error);
}

TEST_CASE("orientation is consistent after parsing") {
    Surface o = parse("123 134 145 152 236 346 456 526");  // mixed orientations in the input
    for (int v = 1; v <= o.num_vertices(); ++v)
        for (int w : o.neighbors(v)) {
            CHECK(o.third(v, w) != 0);
            CHECK(o.third(w, v) != 0);
        }
}

TEST_CASE("serialize round trip is byte stable") {
    for (const auto* e : catalog_all()) {
        if (!e->quarantine.empty()) continue;
        Surface s = e->surface();
        std::string a = serialize(s);
        Surface t = parse_face_list(a);
        CHECK(serialize(t) == a);
        CHECK(is_isomorphic(s, t));
    }
}

TEST_CASE("integer triples above 35 points") {
    std::string txt = "triangles:";
    // a 40-gon bipyramid
    for (int i = 0; i < 40; ++i) {
        int a = 3 + i, b = 3 + (i + 1) % 40;
        txt += " " + std::to_string(1) + "," + std::to_string(a) + "," + std::to_string(b);
        txt += " " + std::to_string(2) + "," + std::to_string(b) + "," + std::to_string(a);
    }
    Surface s = parse_face_list(txt);
    CHECK(s.num_vertices() == 42);
    CHECK(serialize(s).find(',') != std::string::npos);
    CHECK(serialize(parse_face_list(serialize(s))) == serialize(s));
}

TEST_CASE("canonical code is label invariant") {
    Surface t = parse("123 124 134 234");
    for (unsigned seed = 1; seed < 6; ++seed) CHECK(canonical_code(oracle::shuffled(t, seed)) == canonical_code(t));
    Surface o = parse(kOctahedron);
    CHECK_FALSE(canonical_code(t) == canonical_code(o));
}

TEST_CASE("two face lists of the octahedron are isomorphic") {
    Surface a = parse(kOctahedron);
    Surface b = parse("124 146 163 132 524 546 563 532");
    CHECK(oracle::permutation_isomorphic(a, b));
    CHECK(is_isomorphic(a, b));
}

TEST_CASE("(0,6,0,0) and (2,3,0,0) differ") {
    Surface a = catalog_get("3.7/(0,6,0,0)").surface();
    Surface b = catalog_get("3.16/(2,3,0,0)").surface();
    CHECK_FALSE(is_isomorphic(a, b));
}

TEST_CASE("mirror images share the reflection-identified code") {
    int chiral = 0;
    for (const auto* e : catalog_all()) {
        if (!e->quarantine.empty()) continue;
        Surface s = e->surface(), m = s.mirrored();
        CHECK(canonical_code(s) == canonical_code(m));
        if (!(canonical_code(s, false) == canonical_code(m, false))) ++chiral;
    }
    CHECK(chiral > 0);
}

TEST_CASE("canonical codes agree with permutation search on small catalog entries") {
    std::vector<Surface> small;
    for (const auto* e : catalog_all())
        if (e->quarantine.empty() && e->surface().num_vertices() <= 8) small.push_back(e->surface());
    REQUIRE(small.size() > 5);
    for (size_t i = 0; i < small.size(); ++i)
        for (size_t j = i; j < small.size(); ++j)
            if (small[i].kind() == small[j].kind())
                CHECK(is_isomorphic(small[i], small[j]) == oracle::permutation_isomorphic(small[i], small[j]));
}

TEST_CASE("relabeled copies are isomorphic") {
    Surface s = catalog_get("3.16/(2,3,0,13)").surface();
    CHECK(is_isomorphic(s, oracle::shuffled(s, 7)));
}

TEST_CASE("kind mismatch") {
    Surface a = parse("123 124 134 234");
    Surface p = parse("123 124");
    CHECK_THROWS_AS(is_isomorphic(a, p), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etri/analysis.hpp"
#include "etri/atlas.hpp"
#include "etri/catalog.hpp"
#include "etri/export.hpp"

using namespace etri;

namespace {
const AtlasRow& row(const std::vector<AtlasRow>& rows, TypeTuple t) {
    for (const auto& r : rows)
        if (r.type == t) return r;
    throw std::runtime_error("missing row");
}
}  // namespace

TEST_CASE("nineteen sphere types") {
    const auto& ts = sphere_types();
    CHECK(ts.size() == 19);
    for (const auto& t : ts) CHECK(3 * t[0] + 2 * t[1] + t[2] == 12);
    CHECK(is_sphere_type(0, 0, 12));
    CHECK_FALSE(is_sphere_type(1, 1, 1));
}

TEST_CASE("printed statuses") {
    CHECK(printed_status(2, 2, 2, 5) == PrintedStatus::Exists);
    CHECK(printed_status(4, 0, 0, 2) == PrintedStatus::NotExists);
    CHECK(printed_status(4, 0, 0, 7) == PrintedStatus::NotExists);
    CHECK(printed_status(3, 1, 1, 17) == PrintedStatus::Unknown);
    CHECK(printed_status(1, 0, 9, 4) == PrintedStatus::Unknown);
    CHECK_FALSE(nonexistence_citation(0, 0, 12, 1).empty());
    CHECK(nonexistence_citation(2, 2, 2, 1).empty());
}

TEST_CASE("recipes land in their cells") {
    int built = 0;
    for (const auto& t : sphere_types())
        for (long n = 0; n <= 20; ++n) {
            auto c = construct(t[0], t[1], t[2], n);
            if (!c) continue;
            CAPTURE(c->recipe);
            CHECK(validate(c->surface).ok());
            Signature s = classify(c->surface);
            CHECK(s.a3 == t[0]);
            CHECK(s.a4 == t[1]);
            CHECK(s.a5 == t[2]);
            CHECK(s.a6 == n);
            ++built;
        }
    CHECK(built > 250);
}

TEST_CASE("small atlas") {
    auto rows = atlas(12, 8, 1);
    CHECK(rows.size() == 19);
    for (const auto& c : row(rows, {2, 2, 2}).cells) CHECK(c.result.status == Existence::Status::Exists);
    for (const auto& c : row(rows, {4, 0, 0}).cells) {
        bool exists = c.n6 % 2 == 0 && c.n6 != 2;
        CHECK((c.result.status == Existence::Status::Exists) == exists);
    }
    for (const auto& r : rows)
        for (const auto& c : r.cells)
            if (c.result.witness) {
                Signature s = classify(*c.result.witness);
                CHECK(s.a6 == c.n6);
                CHECK(s.a3 == r.type[0]);
            }
}

TEST_CASE("the open (3,1,1,17) cell stays unknown") {
    Existence e = check_existence(3, 1, 1, 17, 9);
    CHECK(e.status == Existence::Status::Unknown);
    CHECK_FALSE(e.witness);
}

TEST_CASE("atlas output does not depend on workers") {
    std::string a = atlas_text(atlas(10, 8, 1));
    std::string b = atlas_text(atlas(10, 8, 3));
    CHECK(a == b);
    CHECK(a.find("(2,2,2) EEEEEEEEEEE") != std::string::npos);
}

TEST_CASE("export formats") {
    Surface tet = parse_face_list("triangles: 123 124 134 234");
    std::string off = export_surface(tet, "off");
    CHECK(off.rfind("OFF\n4 4 6\n", 0) == 0);
    Surface p = catalog_get("2.2/(1,1,1,2)_4").surface();
    std::string json = export_surface(p, "json");
    CHECK(json.find("\"beta4\": 1") != std::string::npos);
    CHECK(json.find("\"beta5\": 1") != std::string::npos);
    CHECK(export_surface(p, "json") == json);
    for (const auto* e : catalog_all()) {
        if (!e->quarantine.empty()) continue;
        std::string f = export_surface(e->surface(), "facelist");
        CHECK(export_surface(parse_face_list(f), "facelist") == f);
    }
    try {
        export_surface(tet, "stl");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Err::UnsupportedFormat);
    }
}

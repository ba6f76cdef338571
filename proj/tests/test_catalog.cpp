#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "etri/analysis.hpp"
#include "etri/catalog.hpp"

using namespace etri;

TEST_CASE("lookup by id") {
    const CatalogEntry& e = catalog_get("2.2/(1,1,1,2)_4");
    CHECK(e.faces == "123 124 134 235");
    CHECK(e.boundary == "2435");
    CHECK(e.beta4 == 1);
    CHECK(e.beta5 == 1);
    CHECK(e.f3 == 4);
    CHECK_FALSE(e.closed);
    CHECK(e.notation() == "(1,1,1,2)_4");

    // signature part alone is enough when it is unique
    CHECK(catalog_get("9.9/(2,3,0,13)").id == "3.16/(2,3,0,13)");
    try {
        catalog_get("3.1/(0,0,12,1)");
        FAIL("no throw");
    } catch (const Error& e2) {
        CHECK(e2.code() == Err::UnknownEntry);
    }
}

TEST_CASE("filters") {
    std::set<long> n;
    for (const auto* e : catalog_all({.type = std::array<int, 3>{0, 0, 12}})) n.insert(e->a6);
    CHECK(n == std::set<long>{0, 2, 3, 4});
    for (const auto* e : catalog_all({.b = 5})) CHECK(e->b == 5);
    for (const auto* e : catalog_all({.table = "3.16"})) CHECK(e->table == "3.16");
    CHECK(catalog_lookup(0, 3, 0, 3, 6).size() == 1);
    CHECK(catalog_lookup(0, 0, 12, 1).empty());
}

TEST_CASE("the long (2,3,0,13) row") {
    Surface s = catalog_get("3.16/(2,3,0,13)").surface();
    CHECK(s.num_vertices() == 18);
    CHECK(s.num_triangles() == 2 * 18 - 4);
}

TEST_CASE("golden check over every entry") {
    int quarantined = 0, total = 0;
    for (const auto* e : catalog_all()) {
        GoldenResult g = check_entry(*e);
        CAPTURE(e->id);
        CAPTURE(g.detail);
        CHECK(g.ok);
        if (g.quarantined) ++quarantined;
        ++total;
    }
    CHECK(total > 100);
    CHECK(quarantined == 1);
    CHECK_FALSE(catalog_get("3.7/(0,6,0,4)").quarantine.empty());
}

TEST_CASE("printed remarks match the classified patch") {
    for (const auto* e : catalog_all({.closed = false})) {
        if (!e->quarantine.empty()) continue;
        Surface s = e->surface();
        Signature g = classify(s);
        CAPTURE(e->id);
        if (e->f3 >= 0) CHECK(s.num_triangles() == e->f3);
        if (e->beta4 >= 0) CHECK(g.beta4 == e->beta4);
        if (e->beta5 >= 0) CHECK(g.beta5 == e->beta5);
        std::vector<int> printed;
        for (char c : e->boundary) printed.push_back(vertex_from_char(c));
        CHECK(printed.size() == s.boundary().size());
    }
}

TEST_CASE("cyclic comparison") {
    CHECK(same_cycle({1, 2, 3, 4}, {3, 4, 1, 2}));
    CHECK(same_cycle({1, 2, 3, 4}, {4, 3, 2, 1}));
    CHECK_FALSE(same_cycle({1, 2, 3, 4}, {1, 3, 2, 4}));
    CHECK_FALSE(same_cycle({1, 2, 3}, {1, 2, 3, 4}));
}

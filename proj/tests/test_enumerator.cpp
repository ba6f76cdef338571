#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "etri/analysis.hpp"
#include "etri/enumerator.hpp"
#include "etri/patch_builder.hpp"
#include "oracle.hpp"

using namespace etri;

TEST_CASE("small closed counts") {
    const long expect[] = {1, 1, 2, 5, 14, 50};
    for (int n = 4; n <= 9; ++n) {
        EnumerationResult r = enumerate_closed(n, false);
        CHECK(static_cast<long>(r.objects.size()) == expect[n - 4]);
        std::set<std::string> seen;
        for (size_t i = 0; i < r.objects.size(); ++i) {
            CHECK(validate(r.objects[i]).ok());
            CHECK(r.objects[i].num_vertices() == n);
            CHECK(canonical_code(r.objects[i]) == r.codes[i]);
            CHECK(seen.insert(r.codes[i].hex()).second);
        }
    }
}

TEST_CASE("n = 5 is the bipyramid") {
    EnumerationResult r = enumerate_closed(5, false);
    REQUIRE(r.objects.size() == 1);
    CHECK(classify(r.objects[0]).notation() == "(2,3,0,0)");
    // brute force over face sets agrees
    CHECK(oracle::permutation_isomorphic(r.objects[0],
                                         parse_face_list("triangles: 123 124 134 235 245 345")));
}

TEST_CASE("six and seven points, elliptic") {
    EnumerationResult six = enumerate_closed(6, true);
    CHECK(six.tally.count("(0,6,0,0)") == 1);
    CHECK(six.tally.count("(2,3,0,1)") == 0);
    EnumerationResult seven = enumerate_closed(7, true);
    CHECK(seven.tally.count("(2,3,0,2)") == 1);
}

TEST_CASE("generators agree") {
    for (int n = 4; n <= 7; ++n)
        for (bool ell : {false, true}) {
            CAPTURE(n);
            CHECK(enumerate_closed(n, ell).codes == enumerate_closed_naive(n, ell).codes);
        }
}

TEST_CASE("worker count does not change the output") {
    EnumerationResult a = enumerate_closed(8, true, {.cap = 10, .workers = 1});
    EnumerationResult b = enumerate_closed(8, true, {.cap = 10, .workers = 3});
    CHECK(a.codes == b.codes);
    CHECK(a.tally == b.tally);
}

TEST_CASE("caps") {
    try {
        enumerate_closed(11, false);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Err::CapExceeded);
    }
    CHECK_THROWS_AS(enumerate_closed_naive(8, false), Error);
    CHECK_THROWS_AS(enumerate_patches(10, std::nullopt, 12), Error);
}

TEST_CASE("(0,3,0) patches by boundary length") {
    std::array<int, 3> t{0, 3, 0};
    for (int b : {4, 5}) CHECK(enumerate_patches(b, t, 12).objects.empty());
    EnumerationResult three = enumerate_patches(3, t, 9);
    int triangles = 0;
    for (const auto& p : three.objects)
        if (p.num_vertices() == 3) ++triangles;
    CHECK(triangles == 1);

    std::set<long> with_corner;
    for (const auto& p : enumerate_patches(6, t, 12).objects) {
        Signature s = classify(p);
        if (s.beta4 > 0) {
            with_corner.insert(s.a6);
        } else {
            PeelResult r = peel_belt(p);
            REQUIRE(r.patch);
            CHECK(is_isomorphic(*r.patch, tessellation(2)));
        }
    }
    CHECK(with_corner == std::set<long>{3, 4, 6});
}

TEST_CASE("contractible edges and splits") {
    Surface tet = parse_face_list("triangles: 123 124 134 234");
    // every edge of K4 lies in separating triangles only
    CHECK(contractible_edges(tet).empty());
    Surface oct = parse_face_list("triangles: 123 134 145 152 623 634 645 652");
    CHECK(contractible_edges(oct).size() == 12);
    for (const auto& s : vertex_splits(tet)) CHECK(s.num_vertices() == 5);
}

TEST_CASE("existence queries") {
    Existence a = check_existence(0, 0, 12, 1);
    CHECK(a.status == Existence::Status::NotExistsCited);
    Existence b = check_existence(2, 3, 0, 1);
    CHECK(b.status == Existence::Status::NotExistsEnumerated);
    Existence c = check_existence(1, 0, 9, 4);
    CHECK(c.status == Existence::Status::Unknown);
    Existence d = check_existence(2, 2, 2, 7);
    REQUIRE(d.status == Existence::Status::Exists);
    REQUIRE(d.witness);
    CHECK(classify(*d.witness).notation() == "(2,2,2,7)");
    try {
        check_existence(1, 1, 1, 0);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotATypeTuple);
    }
}

#include "support.hpp"

#include <doctest.h>
#include <lpont/error.hpp>

using namespace lpont;
using namespace testsupport;

TEST_CASE("canonical code is a relabeling invariant") {
    std::mt19937_64 rng(11);
    std::vector<OrientedComplex> spheres{tetrahedron(), octahedron(), bipyramid(), icosahedron()};
    for (int i = 0; i < 5; ++i) spheres.push_back(random_sphere(rng, 25, 11));
    for (const auto& l : spheres) {
        auto code = code_2sphere(l);
        for (int r = 0; r < 100; ++r) CHECK(code_2sphere(random_relabel(l, rng)) == code);
        CHECK(code_2sphere(l.reversed()).bytes == code.mirror_bytes);
        CHECK(code_2sphere(decode_2sphere(code.bytes)).bytes == code.bytes);
        CHECK(from_hex(to_hex(code.bytes)) == code.bytes);
    }
}

TEST_CASE("symmetry and distinctness") {
    CHECK(code_2sphere(tetrahedron()).symmetric());
    CHECK(code_2sphere(octahedron()).symmetric());
    CHECK(code_2sphere(tetrahedron()).bytes != code_2sphere(octahedron()).bytes);
    CHECK_THROWS_AS(code_2sphere(boundary_simplex(4)), Error);
}

TEST_CASE("automorphism groups match brute force") {
    CHECK(automorphisms_2sphere(tetrahedron()).size() == 12);
    CHECK(brute_force_automorphisms(tetrahedron()) == 12);
    CHECK(automorphisms_2sphere(octahedron()).size() == 24);
    CHECK(brute_force_automorphisms(octahedron()) == 24);
    CHECK(automorphisms_2sphere(bipyramid()).size() == brute_force_automorphisms(bipyramid()));
    CHECK(automorphisms_2sphere(icosahedron()).size() == 60);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto l = random_sphere(rng, 20, 8);
        auto auts = automorphisms_2sphere(l);
        CHECK(auts.size() >= 1);
        CHECK(auts.size() == brute_force_automorphisms(l));
        for (const auto& a : auts) CHECK(apply_isomorphism(l, a) == l);
        for (const auto& a : antiautomorphisms_2sphere(l)) CHECK(apply_isomorphism(l, a) == l.reversed());
        CHECK(antiautomorphisms_2sphere(l).empty() != code_2sphere(l).symmetric());
    }
}

TEST_CASE("generic isomorphism") {
    std::mt19937_64 rng(7);
    auto b4 = boundary_simplex(4);
    auto relabeled = random_relabel(b4, rng);
    auto iso = iso_generic(b4, relabeled);
    REQUIRE(iso);
    CHECK(apply_isomorphism(b4, *iso) == relabeled);
    CHECK(!iso_generic(link_L(), b4));
    auto l = link_L();
    auto lr = random_relabel(l, rng);
    auto iso2 = iso_generic(l, lr);
    REQUIRE(iso2);
    CHECK(apply_isomorphism(l, *iso2) == lr);
    auto anti = iso_generic(l, lr.reversed(), false);
    if (anti) CHECK(apply_isomorphism(l, *anti) == lr);
    // The 2-sphere code and the generic search agree.
    for (int i = 0; i < 20; ++i) {
        auto a = random_sphere(rng, 15, 8);
        auto b = random_sphere(rng, 15, 8);
        CHECK((code_2sphere(a).bytes == code_2sphere(b).bytes) == iso_generic(a, b).has_value());
        CHECK(code_2sphere(a).symmetric() == find_antiautomorphism(a).has_value());
    }
}

#include "support.hpp"

#include <doctest.h>
#include <lpont/error.hpp>

using namespace lpont;
using namespace testsupport;

TEST_CASE("admissible move counts") {
    CHECK(admissible_moves(tetrahedron()).size() == 4);
    CHECK(admissible_moves(octahedron()).size() == 20);
    CHECK(admissible_moves(boundary_simplex(4)).size() == 5);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
        auto l = random_sphere(rng, 30, 12);
        CHECK(admissible_moves(l).size() == oracle_move_count_2sphere(l));
    }
}

TEST_CASE("apply and invert") {
    auto t = tetrahedron();
    auto sub = apply_move(t, make_move(t, Simplex{1, 2, 3}, 5));
    CHECK(sub.num_facets() == 6);
    CHECK(sub.vertices().size() == 5);
    std::mt19937_64 rng(2);
    std::vector<OrientedComplex> spheres{t, octahedron(), bipyramid(), icosahedron()};
    for (int i = 0; i < 5; ++i) spheres.push_back(random_sphere(rng, 30, 12));
    for (const auto& l : spheres) {
        for (const auto& m : admissible_moves(l)) {
            auto l2 = apply_move(l, m);
            CHECK(l2.complex().euler_characteristic() == 2);
            CHECK_NOTHROW(OrientedComplex(l2.complex(), l2.signs()));
            CHECK(apply_move(l2, invert_move(m)) == l);
        }
    }
    for (const auto& m : admissible_moves(link_L())) {
        auto l2 = apply_move(link_L(), m);
        CHECK_NOTHROW(OrientedComplex(l2.complex(), l2.signs()));
        CHECK(apply_move(l2, invert_move(m)) == link_L());
    }
    CHECK_THROWS_AS(apply_move(t, Move{Simplex{1, 2}, Simplex{3, 4}}), Error);
}

TEST_CASE("first printed step on the link table") {
    auto l = link_L();
    auto m = make_move(l, Simplex{1, 3}, 0);
    CHECK(m.delta2 == Simplex{2, 4, 7});
    auto l2 = apply_move(l, m);
    CHECK(l2.num_facets() == 19);
    CHECK(l2.complex().has_facet(Simplex{1, 2, 4, 7}));
    CHECK(l2.complex().has_facet(Simplex{2, 3, 4, 7}));
    // Unchanged facets keep their signs.
    for (std::size_t i = 0; i < l.num_facets(); ++i) {
        if (!l.facets()[i].contains(Simplex{1, 3})) CHECK(l2.sign_of(l.facets()[i]) == l.sign(i));
    }
}

TEST_CASE("essential and inessential moves") {
    auto b = bipyramid();
    // Equatorial edge {1,2}: the flip yields the bipyramid with apexes 1, 2.
    auto flip = make_move(b, Simplex{1, 2}, 0);
    CHECK(flip.delta2 == Simplex{4, 5});
    CHECK(code_2sphere(apply_move(b, flip)) == code_2sphere(b));
    CHECK(!is_essential(b, flip));
    CHECK(is_essential(b, make_move(b, Simplex{1, 2, 4}, 6)));
    // Octahedron flips give a sphere with degrees (3,3,4,4,5,5): not isomorphic.
    auto o = octahedron();
    for (const auto& m : admissible_moves(o)) CHECK(is_essential(o, m));
}

TEST_CASE("induced vertex moves") {
    auto b4 = boundary_simplex(4);
    auto m = make_move(b4, Simplex{1, 2, 3, 4}, 6);
    auto recs = induced_vertex_moves(b4, m);
    CHECK(recs.size() == 4);
    for (const auto& r : recs) {
        CHECK(r.essential);
        CHECK(r.vertex != 6);
        auto before = oriented_link(b4, r.vertex);
        CHECK(apply_move(before, r.induced) == oriented_link(apply_move(b4, m), r.vertex));
    }
    // Replay property on every move of the link table and of subdivided complexes.
    auto l = link_L();
    for (const auto& mv : admissible_moves(l)) {
        auto l2 = apply_move(l, mv);
        for (const auto& r : induced_vertex_moves(l, mv)) {
            CHECK(apply_move(oriented_link(l, r.vertex), r.induced) == oriented_link(l2, r.vertex));
            CHECK(simplex_union(mv.delta1, mv.delta2).contains(r.vertex));
        }
    }
    auto recs1 = induced_vertex_moves(l, make_move(l, Simplex{1, 3}, 0));
    std::vector<Vertex> vs;
    for (const auto& r : recs1) vs.push_back(r.vertex);
    CHECK(vs == std::vector<Vertex>{1, 2, 3, 4, 7});
}

TEST_CASE("the sphere L_beta") {
    auto t = tetrahedron();
    auto m = make_move(t, Simplex{1, 2, 3}, 5);
    auto lb = build_L_beta(t, m, 6, 7);
    CHECK(lb.vertices().size() == 7);
    CHECK(lb.num_facets() == 11);
    CHECK(oriented_link(lb, 7) == apply_move(t, m));
    CHECK(oriented_link(lb, 6) == t.reversed());
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        auto l = random_sphere(rng, 25, 9);
        auto moves = admissible_moves(l);
        auto mv = moves[rng() % moves.size()];
        auto l2 = apply_move(l, mv);
        auto fwd = build_L_beta(l, mv);
        auto back = build_L_beta(l2, invert_move(mv));
        CHECK(fwd.num_facets() == l.num_facets() + l2.num_facets() + 1);
        CHECK(iso_generic(fwd, back, false).has_value());
        if (!is_essential(l, mv)) CHECK(find_antiautomorphism(fwd).has_value());
    }
    auto b = bipyramid();
    auto flip = make_move(b, Simplex{1, 2}, 0);
    CHECK(find_antiautomorphism(build_L_beta(b, flip)).has_value());
}

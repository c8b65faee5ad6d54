#include "support.hpp"

#include <doctest.h>
#include <lpont/error.hpp>

using namespace lpont;
using namespace testsupport;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("boundary of the tetrahedron") {
    auto k = build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(k.num_facets() == 4);
    CHECK(k.faces(2).size() == 6);
    CHECK(k.num_vertices() == 4);
    CHECK(k.euler_characteristic() == 2);
    CHECK(k.is_closed_pseudomanifold());
}

TEST_CASE("printed link table is a closed 3-pseudomanifold on 8 vertices") {
    auto l = link_L();
    CHECK(l.dim() == 3);
    CHECK(l.num_facets() == 20);
    CHECK(l.vertices().size() == 8);
    CHECK(l.complex().is_closed_pseudomanifold());
    CHECK(l.complex().f_vector() == std::vector<std::size_t>{8, 28, 40, 20});
    // Row order is a consistent orientation and agrees with the traversal up to sign.
    auto o = orient(l.complex(), 1);
    CHECK((o == l || o == l.reversed()));
}

TEST_CASE("malformed facet lists") {
    CHECK(kind_of([] { build_complex({{1, 2, 3}, {1, 2, 3}}); }) == ErrorKind::DuplicateFacet);
    CHECK(kind_of([] { build_complex({{1, 2, 3}, {1, 2}}); }) == ErrorKind::NotPure);
    CHECK(kind_of([] { orient(build_complex({{1, 2, 3}, {1, 2, 4}}), 1); }) == ErrorKind::RidgeDegreeViolation);
    CHECK(kind_of([] { parse_facet_text("1 2 x\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_facet_text("dim=3\n1 2 3\n"); }) == ErrorKind::Parse);
}

TEST_CASE("orientation") {
    auto k = tetrahedron().complex();
    auto plus = orient(k, 1);
    auto minus = orient(k, -1);
    CHECK(minus == plus.reversed());
    CHECK(!(minus == plus));
    CHECK_NOTHROW(orient(boundary_simplex(5).complex(), 1));
    CHECK(kind_of([] { orient(rp2_6(), 1); }) == ErrorKind::NonOrientable);
    CHECK(rp2_6().is_closed_pseudomanifold());
}

TEST_CASE("links") {
    auto t = tetrahedron();
    auto lk = oriented_link(t, 1);
    CHECK(lk.dim() == 1);
    CHECK(lk.num_facets() == 3);
    auto o = octahedron();
    CHECK(oriented_link(o, 1).num_facets() == 4);
    CHECK(oriented_link(o.reversed(), 1) == oriented_link(o, 1).reversed());
    CHECK(kind_of([&] { link(o.complex(), Simplex{1, 2}); }) == ErrorKind::SimplexNotInComplex);

    // Convention: positive (v, w0, w1) induces positive (w0, w1) on Lk v.
    auto sign_tri = t.sign_of_tuple(std::vector<Vertex>{1, 2, 3});
    auto lk1 = oriented_link(t, 1);
    CHECK(lk1.sign_of_tuple(std::vector<Vertex>{2, 3}) == sign_tri);
    // And the same for a non-leading vertex: (3, 1, 2) is an even rotation of (1, 2, 3).
    auto lk3 = oriented_link(t, 3);
    CHECK(lk3.sign_of_tuple(std::vector<Vertex>{1, 2}) == sign_tri);
}

TEST_CASE("every vertex link of a closed oriented complex is a closed oriented pseudomanifold") {
    for (const auto& k : {octahedron(), icosahedron(), link_L(), boundary_simplex(5)}) {
        for (Vertex v : k.vertices()) {
            auto lk = oriented_link(k, v);
            CHECK(lk.dim() == k.dim() - 1);
            CHECK_NOTHROW(OrientedComplex(lk.complex(), lk.signs()));
        }
    }
}

TEST_CASE("star and full subcomplex") {
    auto t = tetrahedron().complex();
    CHECK(star(t, Simplex{1}).num_facets() == 3);
    auto all = t.vertices();
    CHECK(full_subcomplex(t, all) == t.facets());
    auto o = octahedron().complex();
    std::vector<Vertex> antipodal{1, 2};
    CHECK(full_subcomplex(o, antipodal) == std::vector<Simplex>{Simplex{1}, Simplex{2}});
    for (const auto& k : {octahedron().complex(), link_L().complex()}) {
        for (const auto& s : k.faces(2)) CHECK(link(star(k, s), s) == link(k, s));
    }
}

TEST_CASE("joins, cones and simplex boundaries") {
    auto s0a = SimplicialComplex({Simplex{1}, Simplex{2}});
    auto s0b = SimplicialComplex({Simplex{3}, Simplex{4}});
    auto sq = join(s0a, s0b);
    CHECK(sq.num_facets() == 4);
    CHECK(sq.num_vertices() == 4);
    CHECK(sq.is_closed_pseudomanifold());
    CHECK(kind_of([&] { join(s0a, s0a); }) == ErrorKind::VertexCollision);
    auto tri = boundary_simplex(2).complex();
    auto c = cone(tri, 9);
    CHECK(c.num_facets() == 3);
    for (const auto& f : c.facets()) CHECK(f.contains(9));
    auto b4 = boundary_simplex(4);
    CHECK(b4.num_facets() == 5);
    CHECK(b4.vertices().size() == 5);
    auto susp = suspension(octahedron(), 7, 8);
    CHECK(susp.num_facets() == 16);
    CHECK(oriented_link(susp, 7) == octahedron());
    CHECK(oriented_link(susp, 8) == octahedron().reversed());
}

TEST_CASE("2-spheres have Euler characteristic 2") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) CHECK(random_sphere(rng, 30, 12).complex().euler_characteristic() == 2);
}

TEST_CASE("facet text round trip") {
    auto l = link_L();
    CHECK(to_oriented(parse_facet_text(format_facets(l))) == l);
    auto f = parse_facet_text("# comment\ndim=2\n3 1 2 # trailing\n\n1 2 4\n1 3 4\n2 3 4\n");
    CHECK(f.rows.size() == 4);
    CHECK(f.dim == 2);
    CHECK(!f.explicit_orientation);
}

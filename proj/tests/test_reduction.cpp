#include "support.hpp"

#include <doctest.h>
#include <lpont/error.hpp>
#include <lpont/reduction.hpp>
#include <lpont/serialize.hpp>

using namespace lpont;
using namespace testsupport;

TEST_CASE("printed nine-move sequence reduces the link table") {
    auto l = link_L();
    auto moves = moves_from_json(read_json_file(fixture("sequence_9.json")), l);
    REQUIRE(moves.size() == 9);
    auto final_k = verify_sequence(l, MoveSequence{l, moves});
    CHECK(final_k.vertices() == std::vector<Vertex>{4, 5, 6, 7, 8});
    CHECK(final_k.num_facets() == 5);
    CHECK(is_simplex_boundary(final_k));
    CHECK(moves_from_json(moves_to_json(moves), l) == moves);
}

TEST_CASE("bogus steps are reported with their index") {
    auto l = link_L();
    auto j = read_json_file(fixture("sequence_9.json"));
    j[3]["delta1"] = Json::array({4, 5, 6});
    try {
        moves_from_json(j, l);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MoveNotAdmissible);
        CHECK(std::string(e.what()).find("step 4") != std::string::npos);
    }
    auto moves = moves_from_json(read_json_file(fixture("sequence_9.json")), l);
    std::swap(moves[0], moves[4]);
    CHECK_THROWS_AS(verify_sequence(l, MoveSequence{l, moves}), Error);
    CHECK(verify_sequence(l, MoveSequence{l, {}}) == l);
}

TEST_CASE("reduction search") {
    ReductionConfig cfg;
    auto b4 = boundary_simplex(4);
    CHECK(reduce_sphere(b4, cfg).moves.empty());
    auto oct = reduce_sphere(octahedron(), cfg);
    CHECK(oct.moves.size() >= 2);
    CHECK(is_simplex_boundary(verify_sequence(octahedron(), oct)));
    auto l = link_L();
    for (std::uint64_t seed : {0, 1, 2}) {
        cfg.seed = seed;
        auto seq = reduce_sphere(l, cfg);
        CHECK(is_simplex_boundary(verify_sequence(l, seq)));
        CHECK(reduce_sphere(l, cfg).moves == seq.moves);
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 5; ++i) {
        auto s = random_sphere(rng, 40, 14);
        CHECK(is_simplex_boundary(verify_sequence(s, reduce_sphere(s, cfg))));
        auto susp = suspension(s, 100, 101);
        CHECK(is_simplex_boundary(verify_sequence(susp, reduce_sphere(susp, cfg))));
    }
}

TEST_CASE("non-spheres exhaust the budget") {
    // Torus (7-vertex) is a closed surface that is not a sphere.
    auto torus = orient(build_complex({{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
                                       {1, 2, 6}, {2, 3, 7}, {3, 4, 1}, {4, 5, 2}, {5, 6, 3}, {6, 7, 4}, {7, 1, 5}}),
                        1);
    ReductionConfig cfg;
    cfg.max_steps = 2000;
    cfg.restarts = 2;
    try {
        reduce_sphere(torus, cfg);
        FAIL("expected BudgetExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExhausted);
    }
}

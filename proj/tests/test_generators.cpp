#include "support.hpp"

#include <doctest.h>
#include <lpont/error.hpp>
#include <lpont/generators.hpp>

using namespace lpont;
using namespace testsupport;

namespace {

const std::set<int> kAll{1, 2, 3, 4, 5, 6};

GeneratorSpec spec(GeneratorKind k, std::vector<int> p, int chir = 1) { return GeneratorSpec{k, std::move(p), chir}; }

}  // namespace

TEST_CASE("value table") {
    CHECK(c0_of(spec(GeneratorKind::S1_0, {})) == 0);
    CHECK(c0_of(spec(GeneratorKind::S1_1, {1, 2})) == Rational(1, 210));
    CHECK(c0_of(spec(GeneratorKind::S3_1, {2, 1})) == Rational(-1, 210));
    CHECK(c0_of(spec(GeneratorKind::S1_2, {0, 1})) == Rational(1, 60));
    CHECK(c0_of(spec(GeneratorKind::S2_2, {1, 1})) == Rational(1, 30));
    CHECK(c0_of(spec(GeneratorKind::S2_2, {1, 1}, -1)) == Rational(-1, 30));
    CHECK(c0_of(spec(GeneratorKind::S4, {1, 1, 1})) == 0);
    CHECK(c0_of(spec(GeneratorKind::S5, {0, 1, 1, 0})) == Rational(1, 6));
    CHECK(c0_of(spec(GeneratorKind::S6, {2, 2, 2, 2, 2})) == Rational(1, 6));
    CHECK_THROWS_AS(c0_of(spec(GeneratorKind::S4, {1, 1})), Error);
    CHECK(spec_from_json(to_json(spec(GeneratorKind::S5, {0, 1, 2, 3}, -1))) == spec(GeneratorKind::S5, {0, 1, 2, 3}, -1));
}

TEST_CASE("classification examples") {
    auto t = tetrahedron();
    CHECK(classify(t, {1, {Simplex{1, 2, 3}, Simplex{1, 2, 4}}, {}}) == spec(GeneratorKind::S1_2, {1, 1}));
    auto ico = icosahedron();
    CHECK(classify(ico, {1, {Simplex{1, 2, 3}, Simplex{8, 9, 12}}, {}}).kind == GeneratorKind::S1_0);
    auto s11 = classify(ico, {1, {Simplex{1, 2, 3}, Simplex{1, 4, 5}}, {}});
    CHECK(s11.kind == GeneratorKind::S1_1);
    CHECK(s11.params[0] + s11.params[1] == 3);
    auto back = classify(ico, {1, {Simplex{1, 4, 5}, Simplex{1, 2, 3}}, {}});
    CHECK(back.params == std::vector<int>{s11.params[1], s11.params[0]});
    CHECK(c0_of(back) == -c0_of(s11));
    // Edge containing the triangle's vertex only at an endpoint is not a family member.
    CHECK_THROWS_AS(classify(ico, {2, {Simplex{1, 2, 3}, Simplex{3, 8}}, {}}), Error);
    CHECK(classify(t, {4, {}, {1, 2, 3}}).kind == GeneratorKind::S4);
}

TEST_CASE("alpha4 on the tetrahedron is the zero chain") {
    auto g = build_alpha(tetrahedron(), {4, {}, {1, 2, 3}});
    CHECK(g.chain.empty());
    CHECK(c0_of(g.spec) == 0);
}

TEST_CASE("enumerated loops are cycles and mirror equivariant") {
    std::mt19937_64 rng(17);
    std::vector<OrientedComplex> spheres{tetrahedron(), octahedron(), bipyramid(), icosahedron()};
    for (int i = 0; i < 3; ++i) spheres.push_back(random_sphere(rng, 30, 9));
    std::map<GeneratorKind, int> seen;
    for (const auto& l : spheres) {
        auto gens = enumerate_at(l, kAll);
        CHECK_FALSE(gens.empty());
        auto rev = l.reversed();
        for (const auto& g : gens) {
            ++seen[g.spec.kind];
            CHECK(is_cycle(g.chain));
            auto m = build_alpha(rev, g.anchor);
            CHECK(m.chain == mirror_chain(g.chain));
            CHECK(c0_of(m.spec) == -c0_of(g.spec));
        }
    }
    // Every family shows up across these spheres.
    CHECK(seen.size() == 12);
}

TEST_CASE("alpha1 and alpha3 are antisymmetric in their anchors") {
    auto l = icosahedron();
    for (const auto& g : enumerate_at(l, {1, 3})) {
        Anchor sw = g.anchor;
        std::swap(sw.simplices[0], sw.simplices[1]);
        GeneratorChain h;
        try {
            h = build_alpha(l, sw);
        } catch (const Error&) {
            continue;
        }
        if (g.anchor.alpha == 1)
            CHECK(h.chain == Rational(-1) * g.chain);
        CHECK(c0_of(h.spec) == -c0_of(g.spec));
    }
}

TEST_CASE("classification is stable under relabeling") {
    std::mt19937_64 rng(3);
    auto l = random_sphere(rng, 25, 9);
    auto vs = l.vertices();
    std::map<Vertex, Vertex> map;
    for (std::size_t i = 0; i < vs.size(); ++i) map[vs[i]] = static_cast<Vertex>(vs.size() - i) * 2 + 1;
    auto r = relabel(l, map);
    auto img = [&](const Simplex& s) {
        std::vector<Vertex> v;
        for (Vertex x : s) v.push_back(map.at(x));
        return Simplex(v);
    };
    for (const auto& g : enumerate_at(l, kAll)) {
        Anchor a = g.anchor;
        for (auto& s : a.simplices) s = img(s);
        for (auto& v : a.vertices) v = map.at(v);
        auto h = build_alpha(r, a);
        CHECK(h.spec == g.spec);
        CHECK(h.chain == g.chain);
    }
}

TEST_CASE("regularity") {
    CHECK_FALSE(is_regular(tetrahedron(), {1}));
    CHECK(is_regular(icosahedron(), {1}));
    CHECK(is_regular(octahedron(), {1}));
}

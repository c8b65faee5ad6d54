#pragma once

#include <lpont/canonical.hpp>
#include <lpont/complex.hpp>
#include <lpont/io.hpp>
#include <lpont/pachner.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testsupport {

using namespace lpont;

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(LPONT_FIXTURE_DIR) / name;
}

inline OrientedComplex from_rows(const std::vector<std::vector<Vertex>>& rows) {
    return orient(build_complex(rows), 1);
}

inline OrientedComplex tetrahedron() { return boundary_simplex(3); }

inline OrientedComplex octahedron() {
    // Antipodal pairs (1,2), (3,4), (5,6).
    std::vector<std::vector<Vertex>> rows;
    for (Vertex a : {1, 2})
        for (Vertex b : {3, 4})
            for (Vertex c : {5, 6}) rows.push_back({a, b, c});
    return from_rows(rows);
}

// Suspension of a triangle: apexes 4 and 5 over the equator 1, 2, 3.
inline OrientedComplex bipyramid() {
    return from_rows({{1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 3, 5}});
}

inline OrientedComplex icosahedron() {
    std::vector<std::vector<Vertex>> rows;
    auto u = [](int k) { return static_cast<Vertex>(2 + (k % 5)); };
    auto l = [](int k) { return static_cast<Vertex>(7 + (k % 5)); };
    for (int k = 0; k < 5; ++k) {
        rows.push_back({1, u(k), u(k + 1)});
        rows.push_back({u(k), l(k), u(k + 1)});
        rows.push_back({u(k + 1), l(k), l(k + 1)});
        rows.push_back({12, l(k), l(k + 1)});
    }
    return from_rows(rows);
}

inline SimplicialComplex rp2_6() {
    return build_complex({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                          {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

inline OrientedComplex link_L() { return load_oriented(fixture("link_L.facets")); }

// Random sphere reached from the tetrahedron by `steps` random moves, kept
// within max_vertices.
inline OrientedComplex random_sphere(std::mt19937_64& rng, int steps, std::size_t max_vertices) {
    OrientedComplex l = tetrahedron();
    for (int i = 0; i < steps; ++i) {
        auto moves = admissible_moves(l);
        std::vector<Move> ok;
        for (const auto& m : moves) {
            bool grows = m.delta1.size() == 3;
            if (grows && l.vertices().size() >= max_vertices) continue;
            ok.push_back(m);
        }
        l = apply_move(l, ok[rng() % ok.size()]);
    }
    return l;
}

inline OrientedComplex random_relabel(const OrientedComplex& k, std::mt19937_64& rng) {
    auto vs = k.vertices();
    std::vector<Vertex> img(vs.size());
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    for (auto& x : img) x = x * 3 + 7;
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < vs.size(); ++i) m[vs[i]] = img[i];
    return relabel(k, m);
}

// Brute-force count of orientation-preserving automorphisms over all bijections.
inline std::size_t brute_force_automorphisms(const OrientedComplex& k) {
    auto vs = k.vertices();
    std::vector<Vertex> perm = vs;
    std::size_t count = 0;
    do {
        std::map<Vertex, Vertex> m;
        for (std::size_t i = 0; i < vs.size(); ++i) m[vs[i]] = perm[i];
        bool ok = true;
        for (std::size_t f = 0; f < k.num_facets() && ok; ++f) {
            std::vector<Vertex> img;
            for (Vertex v : k.facets()[f]) img.push_back(m[v]);
            Simplex s(img);
            int idx = k.complex().facet_index(s);
            ok = idx >= 0 && k.sign(static_cast<std::size_t>(idx)) * permutation_sign(img) == k.sign(f);
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Admissible move count of a 2-sphere from local degree conditions.
inline std::size_t oracle_move_count_2sphere(const OrientedComplex& l) {
    const auto& sc = l.complex();
    std::size_t count = l.num_facets();
    auto edges = sc.faces(2);
    std::set<Simplex> edge_set(edges.begin(), edges.end());
    for (const auto& e : edges) {
        std::vector<Vertex> opp;
        for (const auto& f : sc.facets())
            if (f.contains(e)) opp.push_back(simplex_difference(f, e)[0]);
        if (!edge_set.count(Simplex{opp[0], opp[1]})) ++count;
    }
    for (Vertex v : sc.vertices()) {
        std::set<Vertex> nb;
        std::size_t deg = 0;
        for (const auto& f : sc.facets())
            if (f.contains(v)) {
                ++deg;
                for (Vertex w : f)
                    if (w != v) nb.insert(w);
            }
        if (deg == 3) {
            std::vector<Vertex> t(nb.begin(), nb.end());
            if (!sc.has_facet(Simplex(t))) ++count;
        }
    }
    return count;
}

}  // namespace testsupport

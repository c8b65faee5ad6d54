#include <lpont/error.hpp>
#include <lpont/generators.hpp>
#include <lpont/selfcheck.hpp>
#include <lpont/solver.hpp>

namespace lpont {

namespace {

constexpr std::size_t kMaxFailures = 8;

void record(SuiteResult& r, bool ok, const std::string& what) {
    if (ok) {
        ++r.passed;
        return;
    }
    ++r.failed;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(what);
}

OrientedComplex from_rows(const std::vector<std::vector<Vertex>>& rows) {
    OrientedComplex l = orient(build_complex(rows), 1);
    if (l.sign_of_tuple(rows.front()) < 0) l = l.reversed();
    return l;
}

OrientedComplex icosahedron() {
    std::vector<std::vector<Vertex>> rows;
    auto u = [](int k) { return static_cast<Vertex>(2 + (k % 5)); };
    auto w = [](int k) { return static_cast<Vertex>(7 + (k % 5)); };
    for (int k = 0; k < 5; ++k) {
        rows.push_back({1, u(k), u(k + 1)});
        rows.push_back({u(k), w(k), u(k + 1)});
        rows.push_back({u(k + 1), w(k), w(k + 1)});
        rows.push_back({12, w(k), w(k + 1)});
    }
    return from_rows(rows);
}

std::vector<OrientedComplex> codim2_links(const OrientedComplex& k) {
    std::vector<OrientedComplex> out;
    for (const auto& e : k.complex().faces(static_cast<std::size_t>(k.dim() - 2))) out.push_back(oriented_link(k, e));
    return out;
}

}  // namespace

OrientedComplex random_pachner_sphere(std::mt19937_64& rng, int dim, int steps, std::size_t max_vertices) {
    OrientedComplex k = boundary_simplex(dim + 1);
    const std::size_t top = static_cast<std::size_t>(dim + 1);
    for (int i = 0; i < steps; ++i) {
        std::vector<Move> ok;
        for (const auto& m : admissible_moves(k)) {
            if (m.delta1.size() == top && k.vertices().size() >= max_vertices) continue;
            ok.push_back(m);
        }
        k = apply_move(k, ok[rng() % ok.size()]);
    }
    return k;
}

std::vector<OrientedComplex> homotopy_spheres(const OrientedComplex& l, const Move& m) {
    std::vector<OrientedComplex> out{l, apply_move(l, m)};
    for (const auto& rec : induced_vertex_moves(l, m)) {
        if (rec.essential) out.push_back(build_L_beta(oriented_link(l, rec.vertex), rec.induced));
    }
    OrientedComplex lb = build_L_beta(l, m);
    for (Vertex v : lb.vertices()) out.push_back(oriented_link(lb, v));
    return out;
}

SuiteResult homotopy_suite(std::uint64_t seed, int pairs, LinkConvention conv) {
    SuiteResult r;
    r.name = "chain homotopy identity";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < pairs; ++i) {
        auto l = random_pachner_sphere(rng, 2, 30, 12);
        auto moves = admissible_moves(l);
        const Move& m = moves[rng() % moves.size()];
        auto f = LocalFunction::random_on(homotopy_spheres(l, m), rng);
        auto t = homotopy_terms(f, l, m, conv);
        record(r, t.holds(),
               "pair " + std::to_string(i) + ": d=" + to_string(t.d) + " delta s=" + to_string(t.delta_s) +
                   " s delta=" + to_string(t.s_delta));
    }
    return r;
}

SuiteResult delta_squared_suite(std::uint64_t seed, int count) {
    SuiteResult r;
    r.name = "delta squared";
    std::mt19937_64 rng(seed);
    std::vector<OrientedComplex> fours{boundary_simplex(5), suspension(boundary_simplex(4).reversed(), 10, 11)};
    for (int i = 0; i < 6 && static_cast<int>(fours.size()) < count; ++i)
        fours.push_back(suspension(random_pachner_sphere(rng, 3, 15, 8), 50, 51));
    while (static_cast<int>(fours.size()) < count) fours.push_back(random_pachner_sphere(rng, 4, 14, 9));
    for (std::size_t i = 0; i < fours.size(); ++i) {
        auto f = LocalFunction::random_on(codim2_links(fours[i]), rng);
        Rational v = delta_delta_eval(f, fours[i]);
        record(r, v == 0, "sphere " + std::to_string(i) + ": " + to_string(v));
    }
    return r;
}

SuiteResult value_table_suite(std::vector<Chain1>* loops) {
    SuiteResult r;
    r.name = "generator values";
    auto check = [&](GeneratorKind k, std::vector<int> p, const Rational& expect) {
        GeneratorSpec s{k, std::move(p), 1};
        Rational v = c0_of(s);
        record(r, v == expect, std::string(kind_name(k)) + ": " + to_string(v) + " != " + to_string(expect));
    };
    check(GeneratorKind::S1_0, {}, 0);
    check(GeneratorKind::S2_0, {}, 0);
    check(GeneratorKind::S3_0, {}, 0);
    for (int p = 0; p <= 6; ++p) check(GeneratorKind::S1_1, {p, p}, 0);
    check(GeneratorKind::S1_1, {1, 2}, ratio(1, 210));
    check(GeneratorKind::S4, {1, 1, 1}, 0);
    check(GeneratorKind::S6, {2, 2, 2, 2, 2}, ratio(1, 6));

    // The same values from the solver, on explicit loops.
    auto solved = [&](const OrientedComplex& l, const Anchor& a, const Rational& expect) {
        auto g = build_alpha(l, a);
        Rational v = evaluate_c0(g.chain).value;
        if (loops) loops->push_back(g.chain);
        record(r, v == expect && v == c0_of(g.spec),
               std::string("loop ") + kind_name(g.spec.kind) + ": " + to_string(v) + " != " + to_string(expect));
    };
    auto ico = icosahedron();
    solved(ico, {1, {Simplex{8, 9, 12}, Simplex{1, 2, 3}}, {}}, 0);
    auto s11 = classify(ico, {1, {Simplex{1, 2, 3}, Simplex{1, 4, 5}}, {}});
    solved(ico, {1, {Simplex{1, 2, 3}, Simplex{1, 4, 5}}, {}}, s11.params[0] < s11.params[1] ? ratio(1, 210) : ratio(-1, 210));
    solved(boundary_simplex(3), {4, {}, {1, 2, 3}}, 0);
    auto s6 = from_rows({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}});
    solved(s6, {6, {}, {1, 2, 3, 4, 5}}, ratio(1, 6));
    return r;
}

SuiteResult equivariance_suite(std::uint64_t seed, int spheres) {
    SuiteResult r;
    r.name = "mirror equivariance";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < spheres; ++i) {
        auto l = random_pachner_sphere(rng, 2, 30, 9);
        auto gens = enumerate_at(l, {1, 2, 3, 4, 5, 6});
        Chain1 sum;
        for (std::size_t k = i; k < gens.size(); k += 41) {
            const auto& g = gens[k];
            Rational v = evaluate_c0(g.chain).value;
            Rational w = evaluate_c0(mirror_chain(g.chain)).value;
            record(r, w == -v && v == c0_of(g.spec),
                   std::string(kind_name(g.spec.kind)) + ": " + to_string(v) + ", mirror " + to_string(w));
            sum += Rational(static_cast<long>(k % 5) - 2) * g.chain;
        }
        Rational v = evaluate_c0(sum).value;
        Rational w = evaluate_c0(mirror_chain(sum)).value;
        record(r, w == -v, "sum on sphere " + std::to_string(i) + ": " + to_string(v) + ", mirror " + to_string(w));
    }
    return r;
}

}  // namespace lpont

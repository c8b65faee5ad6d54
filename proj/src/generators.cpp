#include <lpont/error.hpp>
#include <lpont/generators.hpp>

#include <algorithm>
#include <map>

namespace lpont {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorKind::AnchorConfigurationInvalid, why); }

// Neighbors of x in the cyclic order of its oriented link: (x, n_i, n_{i+1}) is positive.
std::vector<Vertex> rotation(const OrientedComplex& l, Vertex x) {
    OrientedComplex lk = oriented_link(l, x);
    std::map<Vertex, Vertex> next;
    for (std::size_t i = 0; i < lk.num_facets(); ++i) {
        Vertex a = lk.facets()[i][0], b = lk.facets()[i][1];
        if (lk.sign(i) < 0) std::swap(a, b);
        next[a] = b;
    }
    std::vector<Vertex> out;
    Vertex start = next.begin()->first, y = start;
    do {
        out.push_back(y);
        y = next.at(y);
    } while (y != start && out.size() <= next.size());
    return out;
}

int degree(const OrientedComplex& l, Vertex x) {
    int d = 0;
    for (const auto& f : l.facets()) d += f.contains(x) ? 1 : 0;
    return d;
}

bool positive(const OrientedComplex& l, Vertex a, Vertex b, Vertex c) {
    Vertex t[3] = {a, b, c};
    return l.sign_of_tuple(t) > 0;
}

// Triangles strictly between a and b, walking the oriented link of x from a.
int forward_count(const OrientedComplex& l, Vertex x, const Simplex& a, const Simplex& b) {
    auto rot = rotation(l, x);
    const int d = static_cast<int>(rot.size());
    auto index_of = [&](const Simplex& t) {
        for (int i = 0; i < d; ++i) {
            if (Simplex{x, rot[static_cast<std::size_t>(i)], rot[static_cast<std::size_t>((i + 1) % d)]} == t) return i;
        }
        invalid("triangle " + t.str() + " does not contain " + std::to_string(x));
    };
    return ((index_of(b) - index_of(a) - 1) % d + d) % d;
}

struct EdgeStar {
    Simplex t1, t2;  // the two triangles
    Vertex c1, c2;   // their apexes
};

EdgeStar edge_star(const OrientedComplex& l, const Simplex& e) {
    std::vector<Simplex> ts;
    for (const auto& f : l.facets())
        if (f.contains(e)) ts.push_back(f);
    if (e.size() != 2 || ts.size() != 2) invalid("not an edge of a 2-sphere: " + e.str());
    return {ts[0], ts[1], simplex_difference(ts[0], e)[0], simplex_difference(ts[1], e)[0]};
}

bool has_edge(const OrientedComplex& l, Vertex a, Vertex b) { return l.complex().contains(Simplex{a, b}); }

Move flip_of(const OrientedComplex& k, const Simplex& e) {
    auto m = move_at(k, e, 0);
    if (!m) invalid("edge " + e.str() + " is not admissible");
    return *m;
}

// Common neighbor u of x, y, z with triangles uxy, uyz, uzx.
Vertex alpha4_center(const OrientedComplex& l, Vertex x, Vertex y, Vertex z) {
    for (Vertex u : l.vertices()) {
        if (u == x || u == y || u == z) continue;
        const auto& sc = l.complex();
        if (sc.has_facet(Simplex{u, x, y}) && sc.has_facet(Simplex{u, y, z}) && sc.has_facet(Simplex{u, z, x})) return u;
    }
    invalid("no common neighbor spanning three triangles");
}

void require_full(const OrientedComplex& l, const std::vector<Vertex>& vs, const std::vector<Simplex>& tris) {
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) invalid("repeated anchor vertex");
    auto full = full_subcomplex(l.complex(), sorted);
    std::vector<Simplex> want = tris;
    std::sort(want.begin(), want.end());
    if (full != want) invalid("full subcomplex condition fails");
}

std::vector<Move> loop_moves(const OrientedComplex& l, const Anchor& a) {
    const Vertex f1 = max_vertex(l.complex()) + 1, f2 = f1 + 1;
    std::vector<Move> moves;
    OrientedComplex k = l;
    auto step = [&](const Move& m) {
        if (!is_admissible(k, m)) invalid("loop step at " + m.delta1.str() + " is not admissible");
        k = apply_move_unchecked(k, m);
        moves.push_back(m);
    };
    auto sub = [&](const Simplex& t, Vertex v) {
        if (!k.complex().has_facet(t)) invalid("not a triangle: " + t.str());
        step(Move{t, Simplex{v}});
    };
    auto remove = [&](Vertex v) {
        auto m = move_at(k, Simplex{v}, 0);
        if (!m) invalid("vertex " + std::to_string(v) + " cannot be removed");
        step(*m);
    };
    auto flip = [&](const Simplex& e) {
        auto m = flip_of(k, e);
        step(m);
        return m.delta2;
    };
    switch (a.alpha) {
        case 1: {
            if (a.simplices.size() != 2 || a.simplices[0] == a.simplices[1]) invalid("alpha1 needs two triangles");
            sub(a.simplices[0], f1);
            sub(a.simplices[1], f2);
            remove(f1);
            remove(f2);
            break;
        }
        case 2: {
            if (a.simplices.size() != 2) invalid("alpha2 needs a triangle and an edge");
            const Simplex& t = a.simplices[0];
            const Simplex& e = a.simplices[1];
            if (t.contains(e)) invalid("alpha2 edge lies in the triangle");
            sub(t, f1);
            Simplex e2 = flip(e);
            remove(f1);
            flip(e2);
            break;
        }
        case 3: {
            if (a.simplices.size() != 2) invalid("alpha3 needs two edges");
            const Simplex& e1 = a.simplices[0];
            const Simplex& e2 = a.simplices[1];
            for (const auto& f : l.facets())
                if (f.contains(e1) && f.contains(e2)) invalid("edges share a triangle");
            Simplex e1p = flip(e1);
            Simplex e2p = flip(e2);
            flip(e1p);
            flip(e2p);
            break;
        }
        case 4: {
            if (a.vertices.size() != 3) invalid("alpha4 needs three vertices");
            Vertex x = a.vertices[0], y = a.vertices[1], z = a.vertices[2];
            Vertex u = alpha4_center(l, x, y, z);
            sub(Simplex{u, y, z}, f1);
            if (flip(Simplex{u, z}) != Simplex{x, f1}) invalid("unexpected alpha4 flip");
            remove(u);
            break;
        }
        case 5: {
            if (a.vertices.size() != 4) invalid("alpha5 needs four vertices");
            Vertex x = a.vertices[0], y = a.vertices[1], z = a.vertices[2], u = a.vertices[3];
            require_full(l, a.vertices, {Simplex{x, y, z}, Simplex{x, z, u}});
            sub(Simplex{x, z, u}, f1);
            flip(Simplex{x, z});
            flip(Simplex{f1, z});
            remove(f1);
            flip(Simplex{y, u});
            break;
        }
        case 6: {
            if (a.vertices.size() != 5) invalid("alpha6 needs five vertices");
            Vertex x = a.vertices[0], y = a.vertices[1], z = a.vertices[2], u = a.vertices[3], v = a.vertices[4];
            require_full(l, a.vertices, {Simplex{x, y, z}, Simplex{x, z, u}, Simplex{x, u, v}});
            flip(Simplex{x, z});
            flip(Simplex{x, u});
            flip(Simplex{y, u});
            flip(Simplex{y, v});
            flip(Simplex{z, v});
            break;
        }
        default:
            invalid("alpha index must be 1..6");
    }
    (void)f2;
    return moves;
}

Rational rho(int p, int q) { return ratio(q - p, (p + q + 2) * (p + q + 3) * (p + q + 4)); }
Rational chi(int n) { return ratio(n, (n + 2) * (n + 3) * (n + 4)); }
Rational kappa(int n) { return ratio(1, (n + 2) * (n + 3)); }

}  // namespace

const char* kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::S1_0: return "S1_0";
        case GeneratorKind::S1_1: return "S1_1";
        case GeneratorKind::S1_2: return "S1_2";
        case GeneratorKind::S2_0: return "S2_0";
        case GeneratorKind::S2_1: return "S2_1";
        case GeneratorKind::S2_2: return "S2_2";
        case GeneratorKind::S3_0: return "S3_0";
        case GeneratorKind::S3_1: return "S3_1";
        case GeneratorKind::S3_2: return "S3_2";
        case GeneratorKind::S4: return "S4";
        case GeneratorKind::S5: return "S5";
        case GeneratorKind::S6: return "S6";
    }
    return "?";
}

GeneratorKind kind_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(GeneratorKind::S6); ++i) {
        auto k = static_cast<GeneratorKind>(i);
        if (s == kind_name(k)) return k;
    }
    throw Error(ErrorKind::Parse, "unknown generator kind " + s);
}

GeneratorSpec classify(const OrientedComplex& l, const Anchor& a) {
    GeneratorSpec s;
    switch (a.alpha) {
        case 1: {
            const Simplex &t1 = a.simplices.at(0), &t2 = a.simplices.at(1);
            Simplex common = simplex_intersection(t1, t2);
            if (common.size() == 0) {
                s.kind = GeneratorKind::S1_0;
            } else if (common.size() == 1) {
                Vertex x = common[0];
                int d = degree(l, x);
                int p = forward_count(l, x, t1, t2);
                s.kind = GeneratorKind::S1_1;
                s.params = {p, d - 2 - p};
            } else if (common.size() == 2) {
                Vertex c = simplex_difference(t1, common)[0];
                Vertex x = common[0], y = common[1];
                if (!positive(l, x, y, c)) std::swap(x, y);
                s.kind = GeneratorKind::S1_2;
                s.params = {degree(l, x) - 2, degree(l, y) - 2};
            } else {
                invalid("alpha1 needs distinct triangles");
            }
            return s;
        }
        case 2: {
            const Simplex &t = a.simplices.at(0), &e = a.simplices.at(1);
            EdgeStar st = edge_star(l, e);
            Simplex u = simplex_union(st.t1, st.t2);
            Simplex inter = simplex_intersection(t, u);
            if (inter.size() == 0) {
                s.kind = GeneratorKind::S2_0;
            } else if (inter.size() == 1) {
                Vertex x = inter[0];
                if (x != st.c1 && x != st.c2) invalid("alpha2 triangle meets only an endpoint of the edge");
                const Simplex& t1 = (x == st.c1) ? st.t1 : st.t2;
                int d = degree(l, x);
                int p = forward_count(l, x, t, t1);
                s.kind = GeneratorKind::S2_1;
                s.params = {p, d - 2 - p};
            } else if (inter.size() == 2) {
                Vertex x, y;
                if (inter.contains(st.c1) && !inter.contains(st.c2)) {
                    x = st.c1;
                } else if (inter.contains(st.c2) && !inter.contains(st.c1)) {
                    x = st.c2;
                } else {
                    invalid("alpha2 triangle meets both apexes or contains the edge");
                }
                y = inter.without(x)[0];
                Vertex w = simplex_difference(t, inter)[0];
                s.kind = GeneratorKind::S2_2;
                s.params = {degree(l, x) - 2, degree(l, y) - 3};
                // Drawn chirality: the positive triangle t runs y -> x.
                s.chirality = positive(l, y, x, w) ? 1 : -1;
            } else {
                invalid("alpha2 configuration outside the families");
            }
            return s;
        }
        case 3: {
            const Simplex &e1 = a.simplices.at(0), &e2 = a.simplices.at(1);
            EdgeStar s1 = edge_star(l, e1), s2 = edge_star(l, e2);
            Simplex u1 = simplex_union(s1.t1, s1.t2), u2 = simplex_union(s2.t1, s2.t2);
            Simplex inter = simplex_intersection(u1, u2);
            if (inter.size() == 0) {
                s.kind = GeneratorKind::S3_0;
            } else if (inter.size() == 1) {
                Vertex x = inter[0];
                if (e1.contains(x) || e2.contains(x)) invalid("alpha3 common vertex lies on an edge");
                const Simplex& t1 = (x == s1.c1) ? s1.t1 : s1.t2;
                const Simplex& t2 = (x == s2.c1) ? s2.t1 : s2.t2;
                int d = degree(l, x);
                int p = forward_count(l, x, t1, t2);
                s.kind = GeneratorKind::S3_1;
                s.params = {p, d - 2 - p};
            } else if (inter.size() == 2) {
                // y on e1 and apex over e2; x on e2 and apex over e1.
                Vertex x = -1, y = -1;
                for (Vertex w : inter) {
                    if (e1.contains(w) && (w == s2.c1 || w == s2.c2)) y = w;
                    if (e2.contains(w) && (w == s1.c1 || w == s1.c2)) x = w;
                }
                if (x < 0 || y < 0 || x == y) invalid("alpha3 configuration outside the families");
                Vertex a1 = e1.without(y)[0];
                s.kind = GeneratorKind::S3_2;
                s.params = {degree(l, x) - 3, degree(l, y) - 3};
                // Drawn chirality: the positive triangle of e1 through x runs y -> x.
                s.chirality = positive(l, y, x, a1) ? 1 : -1;
            } else {
                invalid("alpha3 configuration outside the families");
            }
            return s;
        }
        case 4: {
            Vertex x = a.vertices.at(0), y = a.vertices.at(1), z = a.vertices.at(2);
            Vertex u = alpha4_center(l, x, y, z);
            s.kind = GeneratorKind::S4;
            s.params = {degree(l, x) - 2, degree(l, y) - 2, degree(l, z) - 2};
            s.chirality = positive(l, u, x, y) ? 1 : -1;
            return s;
        }
        case 5: {
            Vertex x = a.vertices.at(0), y = a.vertices.at(1), z = a.vertices.at(2), u = a.vertices.at(3);
            require_full(l, a.vertices, {Simplex{x, y, z}, Simplex{x, z, u}});
            s.kind = GeneratorKind::S5;
            s.params = {degree(l, x) - 2, degree(l, y) - 1, degree(l, z) - 2, degree(l, u) - 1};
            s.chirality = positive(l, x, y, z) ? 1 : -1;
            return s;
        }
        case 6: {
            Vertex x = a.vertices.at(0), y = a.vertices.at(1), z = a.vertices.at(2), u = a.vertices.at(3),
                   v = a.vertices.at(4);
            require_full(l, a.vertices, {Simplex{x, y, z}, Simplex{x, z, u}, Simplex{x, u, v}});
            s.kind = GeneratorKind::S6;
            s.params = {degree(l, x) - 3, degree(l, y) - 1, degree(l, z) - 2, degree(l, u) - 2, degree(l, v) - 1};
            s.chirality = positive(l, x, y, z) ? 1 : -1;
            return s;
        }
        default:
            invalid("alpha index must be 1..6");
    }
}

Rational c0_of(const GeneratorSpec& s) {
    const auto& p = s.params;
    auto need = [&](std::size_t n) {
        if (p.size() != n) throw Error(ErrorKind::AnchorConfigurationInvalid, "wrong parameter count");
        for (int x : p)
            if (x < 0) throw Error(ErrorKind::AnchorConfigurationInvalid, "negative parameter");
    };
    Rational v;
    switch (s.kind) {
        case GeneratorKind::S1_0:
        case GeneratorKind::S2_0:
        case GeneratorKind::S3_0:
            need(0);
            v = 0;
            break;
        case GeneratorKind::S1_1:
        case GeneratorKind::S2_1:
        case GeneratorKind::S3_1:
            need(2);
            v = rho(p[0], p[1]);
            break;
        case GeneratorKind::S1_2:
        case GeneratorKind::S3_2:
            need(2);
            v = chi(p[1]) - chi(p[0]);
            break;
        case GeneratorKind::S2_2:
            need(2);
            v = chi(p[1]) + chi(p[0]);
            break;
        case GeneratorKind::S4:
            need(3);
            v = kappa(p[0]) - kappa(p[1]) + kappa(p[2]) - Rational(1, 12);
            break;
        case GeneratorKind::S5:
            need(4);
            v = kappa(p[0]) - kappa(p[1]) - kappa(p[2]) + kappa(p[3]);
            break;
        case GeneratorKind::S6:
            need(5);
            v = kappa(p[0]) + kappa(p[1]) + kappa(p[2]) + kappa(p[3]) + kappa(p[4]) - Rational(1, 12);
            break;
    }
    return s.chirality * v;
}

GeneratorChain build_alpha(const OrientedComplex& l, const Anchor& anchor) {
    GeneratorChain g;
    g.anchor = anchor;
    g.spec = classify(l, anchor);
    g.loop = MoveSequence{l, loop_moves(l, anchor)};
    g.chain = loop_to_chain(l, g.loop.moves);
    return g;
}

std::vector<GeneratorChain> enumerate_at(const OrientedComplex& l, const std::set<int>& alphas) {
    std::vector<Anchor> anchors;
    const auto& tris = l.facets();
    std::vector<Simplex> adm_edges;
    for (const auto& e : l.complex().faces(2))
        if (move_at(l, e, 0)) adm_edges.push_back(e);
    if (alphas.count(1)) {
        for (const auto& a : tris)
            for (const auto& b : tris)
                if (a != b) anchors.push_back({1, {a, b}, {}});
    }
    if (alphas.count(2)) {
        for (const auto& t : tris)
            for (const auto& e : adm_edges)
                if (!t.contains(e)) anchors.push_back({2, {t, e}, {}});
    }
    if (alphas.count(3)) {
        for (const auto& e1 : adm_edges)
            for (const auto& e2 : adm_edges)
                if (e1 != e2) anchors.push_back({3, {e1, e2}, {}});
    }
    for (Vertex x : (alphas.count(4) || alphas.count(6)) ? l.vertices() : std::vector<Vertex>{}) {
        auto rot = rotation(l, x);
        const std::size_t d = rot.size();
        for (int dir : {1, -1}) {
            auto at = [&](std::size_t i, std::size_t k) {
                return dir > 0 ? rot[(i + k) % d] : rot[(i + d * 4 - k) % d];
            };
            for (std::size_t i = 0; i < d; ++i) {
                if (alphas.count(4) && d == 3) anchors.push_back({4, {}, {at(i, 0), at(i, 1), at(i, 2)}});
                if (alphas.count(6) && d >= 4) anchors.push_back({6, {}, {x, at(i, 0), at(i, 1), at(i, 2), at(i, 3)}});
            }
        }
    }
    if (alphas.count(5)) {
        for (const auto& e : l.complex().faces(2)) {
            EdgeStar st = edge_star(l, e);
            if (has_edge(l, st.c1, st.c2)) continue;
            for (int swap_xz = 0; swap_xz < 2; ++swap_xz)
                for (int swap_yu = 0; swap_yu < 2; ++swap_yu) {
                    Vertex x = e[static_cast<std::size_t>(swap_xz)], z = e[static_cast<std::size_t>(1 - swap_xz)];
                    Vertex y = swap_yu ? st.c2 : st.c1, u = swap_yu ? st.c1 : st.c2;
                    anchors.push_back({5, {}, {x, y, z, u}});
                }
        }
    }
    std::vector<GeneratorChain> out;
    std::set<std::pair<GeneratorSpec, Chain1::Terms>> seen;
    for (const auto& a : anchors) {
        GeneratorChain g;
        try {
            g = build_alpha(l, a);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::AnchorConfigurationInvalid) continue;
            throw;
        }
        if (!seen.insert({g.spec, g.chain.terms()}).second) continue;
        out.push_back(std::move(g));
    }
    return out;
}

bool is_regular(const OrientedComplex& l, const std::vector<Vertex>& vertices) {
    std::vector<Simplex> star_facets;
    std::vector<Vertex> span;
    for (const auto& f : l.facets()) {
        if (std::none_of(vertices.begin(), vertices.end(), [&](Vertex v) { return f.contains(v); })) continue;
        star_facets.push_back(f);
        span.insert(span.end(), f.begin(), f.end());
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    auto full = full_subcomplex(l.complex(), span);
    return full == star_facets;
}

Json to_json(const GeneratorSpec& s) {
    Json j;
    j["kind"] = kind_name(s.kind);
    j["params"] = s.params;
    j["chirality"] = s.chirality;
    return j;
}

GeneratorSpec spec_from_json(const Json& j) {
    GeneratorSpec s;
    s.kind = kind_from_name(j.at("kind").get<std::string>());
    s.params = j.at("params").get<std::vector<int>>();
    s.chirality = j.value("chirality", 1);
    return s;
}

}  // namespace lpont

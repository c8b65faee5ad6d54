#include <lpont/error.hpp>
#include <lpont/pachner.hpp>

#include <algorithm>
#include <set>

namespace lpont {

std::optional<Move> move_at(const OrientedComplex& k, const Simplex& delta1, Vertex fresh) {
    const int n = k.dim();
    if (delta1.empty() || delta1.dim() > n) return std::nullopt;
    std::vector<Simplex> lk;
    for (const auto& f : k.facets()) {
        if (f.contains(delta1)) lk.push_back(simplex_difference(f, delta1));
    }
    if (lk.empty()) return std::nullopt;
    if (delta1.dim() == n) {
        auto vs = k.vertices();
        if (std::binary_search(vs.begin(), vs.end(), fresh)) return std::nullopt;
        return Move{delta1, Simplex{fresh}};
    }
    const std::size_t want = static_cast<std::size_t>(n + 2) - delta1.size();
    if (lk.size() != want) return std::nullopt;
    std::vector<Vertex> all;
    for (const auto& s : lk) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() != want) return std::nullopt;
    Simplex delta2(all);
    for (const auto& s : lk) {
        if (s.size() != want - 1) return std::nullopt;
    }
    if (k.complex().contains(delta2)) return std::nullopt;
    return Move{delta1, delta2};
}

Move make_move(const OrientedComplex& k, const Simplex& delta1, Vertex fresh) {
    auto m = move_at(k, delta1, fresh);
    if (!m) throw Error(ErrorKind::MoveNotAdmissible, "no bistellar move at " + delta1.str());
    return *m;
}

bool is_admissible(const OrientedComplex& k, const Move& m) {
    if (m.delta1.dim() == k.dim()) {
        if (m.delta2.size() != 1) return false;
        auto mm = move_at(k, m.delta1, m.delta2[0]);
        return mm.has_value();
    }
    auto mm = move_at(k, m.delta1, 0);
    return mm && mm->delta2 == m.delta2;
}

std::vector<Move> admissible_moves(const OrientedComplex& k) {
    const Vertex fresh = max_vertex(k.complex()) + 1;
    std::vector<Move> out;
    for (int sz = 1; sz <= k.dim() + 1; ++sz) {
        for (const auto& s : k.complex().faces(static_cast<std::size_t>(sz))) {
            if (auto m = move_at(k, s, fresh)) out.push_back(*m);
        }
    }
    return out;
}

OrientedComplex apply_move_unchecked(const OrientedComplex& k, const Move& m) {
    const Simplex& d1 = m.delta1;
    const Simplex& d2 = m.delta2;
    std::vector<Simplex> kept;
    std::vector<std::int8_t> kept_signs;
    for (std::size_t i = 0; i < k.num_facets(); ++i) {
        const Simplex& f = k.facets()[i];
        // Removed facets are exactly those containing delta1 (d1 * boundary(d2)).
        if (f.contains(d1)) continue;
        kept.push_back(f);
        kept_signs.push_back(static_cast<std::int8_t>(k.sign(i)));
    }
    std::vector<Simplex> added;
    std::vector<std::int8_t> added_signs;
    for (Vertex w : d1) {
        Simplex g = simplex_union(d1.without(w), d2);
        // Ridge of g away from d2's boundary: drop a vertex of d2; its outer neighbor is kept.
        const Vertex wp = d2[0];
        Simplex ridge = g.without(wp);
        int sign = 0;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (!kept[j].contains(ridge)) continue;
            Simplex h = kept[j];
            Vertex other = simplex_difference(h, ridge)[0];
            int ind_h = induced_sign(kept_signs[j], static_cast<std::size_t>(h.index_of(other)));
            int ind_g_pos = induced_sign(1, static_cast<std::size_t>(g.index_of(wp)));
            sign = -ind_h * ind_g_pos;
            break;
        }
        if (sign == 0) throw Error(ErrorKind::MoveNotAdmissible, "cannot orient new facet " + g.str());
        added.push_back(g);
        added_signs.push_back(static_cast<std::int8_t>(sign));
    }
    std::vector<Simplex> all = kept;
    all.insert(all.end(), added.begin(), added.end());
    std::vector<std::int8_t> all_signs = kept_signs;
    all_signs.insert(all_signs.end(), added_signs.begin(), added_signs.end());
    SimplicialComplex c(all);
    std::vector<std::int8_t> signs(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) signs[static_cast<std::size_t>(c.facet_index(all[i]))] = all_signs[i];
    return OrientedComplex::trusted(std::move(c), std::move(signs));
}

OrientedComplex apply_move(const OrientedComplex& k, const Move& m) {
    if (!is_admissible(k, m)) {
        throw Error(ErrorKind::MoveNotAdmissible, "move at " + m.delta1.str() + " is not admissible");
    }
    return apply_move_unchecked(k, m);
}

MoveDescriptor move_descriptor(const SphereCanon& canon, const Simplex& delta) {
    MoveDescriptor d;
    d.code = canon.code.bytes;
    bool first = true;
    for (const auto& lab : canon.labelings) {
        std::vector<Vertex> img;
        for (Vertex v : delta) img.push_back(lab.at(v));
        Simplex s(img);
        if (first || s < d.orbit) d.orbit = s;
        first = false;
    }
    return d;
}

MoveDescriptor move_descriptor(const OrientedComplex& sphere, const Simplex& delta) {
    return move_descriptor(canonize_2sphere(sphere), delta);
}

bool is_essential(const OrientedComplex& k, const Move& m) {
    if (m.delta1.size() != m.delta2.size()) return true;
    OrientedComplex k2 = apply_move(k, m);
    return move_descriptor(k, m.delta1) != move_descriptor(k2, m.delta2);
}

namespace {

// Identify the single bistellar move taking old_link to new_link, or throw.
Move diff_move(const OrientedComplex& old_link, const OrientedComplex& new_link, Vertex v) {
    std::vector<Simplex> removed, added;
    const auto& of = old_link.facets();
    const auto& nf = new_link.facets();
    std::set_difference(of.begin(), of.end(), nf.begin(), nf.end(), std::back_inserter(removed));
    std::set_difference(nf.begin(), nf.end(), of.begin(), of.end(), std::back_inserter(added));
    auto fail = [&]() -> Error {
        return Error(ErrorKind::InducedDiffNotABistellarMove,
                     "link change at vertex " + std::to_string(v) + " is not a bistellar move");
    };
    if (removed.empty() || added.empty()) throw fail();
    Simplex d1 = removed.front(), d2 = added.front();
    for (const auto& s : removed) d1 = simplex_intersection(d1, s);
    for (const auto& s : added) d2 = simplex_intersection(d2, s);
    Move m{d1, d2};
    if (d1.empty() || d2.empty() || !is_admissible(old_link, m)) throw fail();
    if (!(apply_move_unchecked(old_link, m) == new_link)) throw fail();
    return m;
}

}  // namespace

std::vector<InducedMoveRecord> induced_vertex_moves(const OrientedComplex& k, const Move& m) {
    OrientedComplex k2 = apply_move(k, m);
    std::vector<InducedMoveRecord> out;
    Simplex support = simplex_union(m.delta1, m.delta2);
    // A vertex created or destroyed by the move is one of delta1, delta2 of size one.
    for (Vertex v : support) {
        if ((m.delta1.size() == 1 && m.delta1[0] == v) || (m.delta2.size() == 1 && m.delta2[0] == v)) continue;
        OrientedComplex before = oriented_link(k, v);
        OrientedComplex after = oriented_link(k2, v);
        if (before == after) continue;
        Move im = diff_move(before, after, v);
        out.push_back({v, im, is_essential(before, im)});
    }
    return out;
}

OrientedComplex build_L_beta(const OrientedComplex& l1, const Move& m, Vertex u1, Vertex u2) {
    OrientedComplex l2 = apply_move(l1, m);
    std::vector<Simplex> facets;
    std::vector<std::int8_t> signs;
    // Cone over L2 at u2 with Lk u2 = L2, and over L1 at u1 with Lk u1 = -L1.
    auto add_cone = [&](const OrientedComplex& base, Vertex apex, int orient_sign) {
        for (std::size_t i = 0; i < base.num_facets(); ++i) {
            std::vector<Vertex> ordered{apex};
            for (Vertex x : base.facets()[i]) ordered.push_back(x);
            facets.push_back(Simplex(ordered));
            signs.push_back(static_cast<std::int8_t>(orient_sign * base.sign(i) * permutation_sign(ordered)));
        }
    };
    add_cone(l2, u2, 1);
    add_cone(l1, u1, -1);
    Simplex core = simplex_union(m.delta1, m.delta2);
    facets.push_back(core);
    signs.push_back(0);
    // Orient the core facet against any neighbor.
    {
        Simplex ridge = core.without_index(0);
        Vertex gone = core[0];
        int sign = 0;
        for (std::size_t j = 0; j + 1 < facets.size(); ++j) {
            if (!facets[j].contains(ridge)) continue;
            Vertex other = simplex_difference(facets[j], ridge)[0];
            int ind_h = induced_sign(signs[j], static_cast<std::size_t>(facets[j].index_of(other)));
            sign = -ind_h * induced_sign(1, static_cast<std::size_t>(core.index_of(gone)));
            break;
        }
        if (sign == 0) throw Error(ErrorKind::MoveNotAdmissible, "degenerate L_beta");
        signs.back() = static_cast<std::int8_t>(sign);
    }
    SimplicialComplex c(facets);
    std::vector<std::int8_t> sorted(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) sorted[static_cast<std::size_t>(c.facet_index(facets[i]))] = signs[i];
    // Validates that the cones and the core glue consistently.
    return OrientedComplex(std::move(c), std::move(sorted));
}

OrientedComplex build_L_beta(const OrientedComplex& l1, const Move& m) {
    Vertex top = std::max(max_vertex(l1.complex()), m.delta2[m.delta2.size() - 1]);
    return build_L_beta(l1, m, top + 1, top + 2);
}

}  // namespace lpont

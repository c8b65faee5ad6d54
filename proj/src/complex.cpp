#include <lpont/complex.hpp>
#include <lpont/error.hpp>

#include <numeric>
#include <set>

namespace lpont {

namespace {

struct RidgeIncidence {
    Simplex ridge;
    std::uint32_t facet;
    std::int8_t induced;  // orientation induced with facet sign +1
};

std::vector<RidgeIncidence> ridge_incidences(const std::vector<Simplex>& facets) {
    std::vector<RidgeIncidence> out;
    for (std::uint32_t f = 0; f < facets.size(); ++f) {
        for (std::size_t i = 0; i < facets[f].size(); ++i) {
            out.push_back({facets[f].without_index(i), f, static_cast<std::int8_t>(induced_sign(1, i))});
        }
    }
    std::sort(out.begin(), out.end(), [](const RidgeIncidence& a, const RidgeIncidence& b) {
        return a.ridge != b.ridge ? a.ridge < b.ridge : a.facet < b.facet;
    });
    return out;
}

template <class F>
void for_each_ridge_group(const std::vector<RidgeIncidence>& inc, F&& fn) {
    for (std::size_t i = 0; i < inc.size();) {
        std::size_t j = i;
        while (j < inc.size() && inc[j].ridge == inc[i].ridge) ++j;
        fn(i, j);
        i = j;
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets) : facets_(std::move(facets)) {
    std::sort(facets_.begin(), facets_.end());
    if (facets_.empty()) return;
    dim_ = facets_.front().dim();
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        if (facets_[i].dim() != dim_) {
            throw Error(ErrorKind::NotPure, "facet " + facets_[i].str() + " has dimension " +
                                                std::to_string(facets_[i].dim()) + ", expected " +
                                                std::to_string(dim_));
        }
        if (i > 0 && facets_[i] == facets_[i - 1]) {
            throw Error(ErrorKind::DuplicateFacet, "duplicate facet " + facets_[i].str());
        }
    }
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> vs;
    for (const auto& f : facets_) vs.insert(vs.end(), f.begin(), f.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

int SimplicialComplex::facet_index(const Simplex& f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    return (it != facets_.end() && *it == f) ? static_cast<int>(it - facets_.begin()) : -1;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return !facets_.empty();
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.contains(s); });
}

std::vector<Simplex> SimplicialComplex::faces(std::size_t k) const {
    std::set<Simplex> out;
    for (const auto& f : facets_) {
        if (k > f.size()) continue;
        // Enumerate k-subsets by bitmask; facets have at most 8 vertices.
        const unsigned n = static_cast<unsigned>(f.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            std::vector<Vertex> vs;
            for (unsigned i = 0; i < n; ++i) {
                if (mask & (1u << i)) vs.push_back(f[i]);
            }
            out.insert(Simplex(vs));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> fv;
    for (int k = 1; k <= dim_ + 1; ++k) fv.push_back(faces(static_cast<std::size_t>(k)).size());
    return fv;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    auto fv = f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(fv[i]);
    return chi;
}

bool SimplicialComplex::is_closed_pseudomanifold() const {
    if (facets_.empty()) return false;
    bool ok = true;
    auto inc = ridge_incidences(facets_);
    for_each_ridge_group(inc, [&](std::size_t i, std::size_t j) { ok = ok && (j - i == 2); });
    return ok;
}

bool SimplicialComplex::is_pseudomanifold() const {
    if (facets_.empty()) return false;
    bool ok = true;
    auto inc = ridge_incidences(facets_);
    for_each_ridge_group(inc, [&](std::size_t i, std::size_t j) { ok = ok && (j - i <= 2); });
    return ok;
}

bool SimplicialComplex::is_connected() const {
    if (facets_.empty()) return false;
    auto vs = vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto idx = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (const auto& f : facets_) {
        for (std::size_t i = 1; i < f.size(); ++i) parent[find(idx(f[i]))] = find(idx(f[0]));
    }
    for (std::size_t i = 1; i < vs.size(); ++i) {
        if (find(i) != find(0)) return false;
    }
    return true;
}

OrientedComplex::OrientedComplex(SimplicialComplex complex, std::vector<std::int8_t> signs)
    : complex_(std::move(complex)), signs_(std::move(signs)) {
    if (signs_.size() != complex_.num_facets()) {
        throw Error(ErrorKind::NonOrientable, "sign count does not match facet count");
    }
    auto inc = ridge_incidences(complex_.facets());
    for_each_ridge_group(inc, [&](std::size_t i, std::size_t j) {
        if (j - i != 2) {
            throw Error(ErrorKind::RidgeDegreeViolation,
                        "ridge " + inc[i].ridge.str() + " lies in " + std::to_string(j - i) + " facets");
        }
        int a = inc[i].induced * signs_[inc[i].facet];
        int b = inc[i + 1].induced * signs_[inc[i + 1].facet];
        if (a == b) {
            throw Error(ErrorKind::NonOrientable, "inconsistent orientation across ridge " + inc[i].ridge.str());
        }
    });
}

OrientedComplex OrientedComplex::trusted(SimplicialComplex complex, std::vector<std::int8_t> signs) {
    OrientedComplex k;
    k.complex_ = std::move(complex);
    k.signs_ = std::move(signs);
    return k;
}

int OrientedComplex::sign_of(const Simplex& f) const {
    int i = complex_.facet_index(f);
    if (i < 0) throw Error(ErrorKind::SimplexNotInComplex, "facet " + f.str() + " not in complex");
    return signs_[static_cast<std::size_t>(i)];
}

int OrientedComplex::sign_of_tuple(std::span<const Vertex> ordered) const {
    return sign_of(Simplex(ordered)) * permutation_sign(ordered);
}

OrientedComplex OrientedComplex::reversed() const {
    std::vector<std::int8_t> s = signs_;
    for (auto& x : s) x = static_cast<std::int8_t>(-x);
    return trusted(complex_, std::move(s));
}

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facet_list) {
    if (facet_list.empty()) throw Error(ErrorKind::NotPure, "empty facet list");
    std::vector<Simplex> facets;
    facets.reserve(facet_list.size());
    for (const auto& row : facet_list) {
        if (row.size() != facet_list.front().size()) {
            throw Error(ErrorKind::NotPure, "facet rows have different lengths");
        }
        facets.emplace_back(std::span<const Vertex>(row));
    }
    return SimplicialComplex(std::move(facets));
}

OrientedComplex orient(const SimplicialComplex& k, int first_facet_sign) {
    const auto& facets = k.facets();
    if (facets.empty()) throw Error(ErrorKind::NonOrientable, "empty complex");
    auto inc = ridge_incidences(facets);
    // Adjacency: (neighbor, product of induced signs) for each ridge.
    std::vector<std::vector<std::pair<std::uint32_t, int>>> adj(facets.size());
    for_each_ridge_group(inc, [&](std::size_t i, std::size_t j) {
        if (j - i != 2) {
            throw Error(ErrorKind::RidgeDegreeViolation,
                        "ridge " + inc[i].ridge.str() + " lies in " + std::to_string(j - i) + " facets");
        }
        int rel = inc[i].induced * inc[i + 1].induced;
        adj[inc[i].facet].push_back({inc[i + 1].facet, rel});
        adj[inc[i + 1].facet].push_back({inc[i].facet, rel});
    });
    std::vector<std::int8_t> signs(facets.size(), 0);
    signs[0] = static_cast<std::int8_t>(first_facet_sign >= 0 ? 1 : -1);
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        auto f = stack.back();
        stack.pop_back();
        for (auto [g, rel] : adj[f]) {
            // Induced orientations must be opposite: s_g * ind_g = -s_f * ind_f.
            auto want = static_cast<std::int8_t>(-signs[f] * rel);
            if (signs[g] == 0) {
                signs[g] = want;
                stack.push_back(g);
            } else if (signs[g] != want) {
                throw Error(ErrorKind::NonOrientable, "parity conflict at facet " + facets[g].str());
            }
        }
    }
    if (std::find(signs.begin(), signs.end(), 0) != signs.end()) {
        throw Error(ErrorKind::NotConnected, "complex is not strongly connected");
    }
    return OrientedComplex::trusted(k, std::move(signs));
}

OrientedComplex orient_explicit(const std::vector<std::vector<Vertex>>& ordered_facets) {
    SimplicialComplex k = build_complex(ordered_facets);
    std::vector<std::int8_t> signs(k.num_facets(), 0);
    for (const auto& row : ordered_facets) {
        int i = k.facet_index(Simplex(std::span<const Vertex>(row)));
        signs[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(permutation_sign(row));
    }
    return OrientedComplex(std::move(k), std::move(signs));
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        if (f.contains(s)) out.push_back(simplex_difference(f, s));
    }
    if (out.empty()) throw Error(ErrorKind::SimplexNotInComplex, "simplex " + s.str() + " not in complex");
    return SimplicialComplex(std::move(out));
}

OrientedComplex oriented_link(const OrientedComplex& k, const Simplex& s) {
    std::vector<Simplex> out;
    std::vector<std::int8_t> signs;
    const auto& facets = k.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const Simplex& f = facets[i];
        if (!f.contains(s)) continue;
        Simplex rest = simplex_difference(f, s);
        std::vector<Vertex> ordered(s.begin(), s.end());
        ordered.insert(ordered.end(), rest.begin(), rest.end());
        out.push_back(rest);
        signs.push_back(static_cast<std::int8_t>(k.sign(i) * permutation_sign(ordered)));
    }
    if (out.empty()) throw Error(ErrorKind::SimplexNotInComplex, "simplex " + s.str() + " not in complex");
    // Pair facets with signs, then sort through the complex constructor.
    std::vector<std::size_t> order(out.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out[a] < out[b]; });
    std::vector<Simplex> sorted;
    std::vector<std::int8_t> sorted_signs;
    for (auto i : order) {
        sorted.push_back(out[i]);
        sorted_signs.push_back(signs[i]);
    }
    return OrientedComplex::trusted(SimplicialComplex(std::move(sorted)), std::move(sorted_signs));
}

OrientedComplex oriented_link(const OrientedComplex& k, Vertex v) { return oriented_link(k, Simplex{v}); }

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
    std::vector<Simplex> out;
    for (const auto& f : k.facets()) {
        if (f.contains(s)) out.push_back(f);
    }
    if (out.empty()) throw Error(ErrorKind::SimplexNotInComplex, "simplex " + s.str() + " not in complex");
    return SimplicialComplex(std::move(out));
}

std::vector<Simplex> full_subcomplex(const SimplicialComplex& k, std::span<const Vertex> vs) {
    std::vector<Vertex> v_set(vs.begin(), vs.end());
    std::sort(v_set.begin(), v_set.end());
    const auto all = k.vertices();
    for (Vertex v : v_set) {
        if (!std::binary_search(all.begin(), all.end(), v)) {
            throw Error(ErrorKind::SimplexNotInComplex, "vertex " + std::to_string(v) + " not in complex");
        }
    }
    std::set<Simplex> candidates;
    for (const auto& f : k.facets()) {
        std::vector<Vertex> inter;
        for (Vertex x : f)
            if (std::binary_search(v_set.begin(), v_set.end(), x)) inter.push_back(x);
        if (!inter.empty()) candidates.insert(Simplex(inter));
    }
    std::vector<Simplex> maximal;
    for (const auto& c : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                     [&](const Simplex& d) { return d != c && d.contains(c); });
        if (!dominated) maximal.push_back(c);
    }
    return maximal;
}

namespace {

void require_disjoint(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto va = a.vertices();
    auto vb = b.vertices();
    std::vector<Vertex> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (!common.empty()) {
        throw Error(ErrorKind::VertexCollision, "join operands share vertex " + std::to_string(common.front()));
    }
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    require_disjoint(a, b);
    if (a.facets().empty()) return b;
    if (b.facets().empty()) return a;
    std::vector<Simplex> out;
    for (const auto& f : a.facets()) {
        for (const auto& g : b.facets()) out.push_back(simplex_union(f, g));
    }
    return SimplicialComplex(std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& a, Vertex apex) {
    return join(a, SimplicialComplex({Simplex{apex}}));
}

OrientedComplex oriented_join(const OrientedComplex& a, const OrientedComplex& b) {
    require_disjoint(a.complex(), b.complex());
    std::vector<Simplex> out;
    std::vector<std::int8_t> signs;
    for (std::size_t i = 0; i < a.num_facets(); ++i) {
        for (std::size_t j = 0; j < b.num_facets(); ++j) {
            std::vector<Vertex> ordered = a.facets()[i].to_vector();
            const auto& g = b.facets()[j];
            ordered.insert(ordered.end(), g.begin(), g.end());
            out.push_back(Simplex(std::span<const Vertex>(ordered)));
            signs.push_back(static_cast<std::int8_t>(a.sign(i) * b.sign(j) * permutation_sign(ordered)));
        }
    }
    SimplicialComplex k(out);
    std::vector<std::int8_t> sorted(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) sorted[static_cast<std::size_t>(k.facet_index(out[i]))] = signs[i];
    return OrientedComplex(std::move(k), std::move(sorted));
}

OrientedComplex suspension(const OrientedComplex& a, Vertex north, Vertex south) {
    // S^0 as the boundary of the 1-simplex (south, north) with south < north irrelevant:
    // {north} positive, {south} negative.
    SimplicialComplex s0({Simplex{north}, Simplex{south}});
    std::vector<std::int8_t> signs(2);
    signs[static_cast<std::size_t>(s0.facet_index(Simplex{north}))] = 1;
    signs[static_cast<std::size_t>(s0.facet_index(Simplex{south}))] = -1;
    return oriented_join(OrientedComplex(std::move(s0), std::move(signs)), a);
}

OrientedComplex boundary_simplex(int n) {
    std::vector<Vertex> all(static_cast<std::size_t>(n + 1));
    std::iota(all.begin(), all.end(), 1);
    Simplex full(all);
    std::vector<Simplex> facets;
    std::vector<std::int8_t> signs;
    for (std::size_t i = 0; i < full.size(); ++i) {
        facets.push_back(full.without_index(i));
        signs.push_back(static_cast<std::int8_t>(induced_sign(1, i)));
    }
    // without_index(i) yields descending order of facets; reverse to sorted order.
    std::reverse(facets.begin(), facets.end());
    std::reverse(signs.begin(), signs.end());
    return OrientedComplex(SimplicialComplex(std::move(facets)), std::move(signs));
}

OrientedComplex relabel(const OrientedComplex& k, const std::map<Vertex, Vertex>& map) {
    std::vector<Simplex> out;
    std::vector<std::int8_t> signs;
    for (std::size_t i = 0; i < k.num_facets(); ++i) {
        std::vector<Vertex> img;
        for (Vertex v : k.facets()[i]) img.push_back(map.at(v));
        out.push_back(Simplex(std::span<const Vertex>(img)));
        signs.push_back(static_cast<std::int8_t>(k.sign(i) * permutation_sign(img)));
    }
    SimplicialComplex c(out);
    std::vector<std::int8_t> sorted(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) sorted[static_cast<std::size_t>(c.facet_index(out[i]))] = signs[i];
    return OrientedComplex::trusted(std::move(c), std::move(sorted));
}

Vertex max_vertex(const SimplicialComplex& k) {
    Vertex m = 0;
    for (const auto& f : k.facets()) m = std::max(m, f[f.size() - 1]);
    return m;
}

}  // namespace lpont

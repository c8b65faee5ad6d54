#include <lpont/canonical.hpp>
#include <lpont/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lpont {

namespace {

// Rotation system on vertex indices 0..n-1. rot[x] lists the neighbors of x in
// the cyclic order of the oriented link of x.
struct Rotation {
    std::vector<Vertex> labels;
    std::vector<std::vector<int>> rot;
    std::vector<std::vector<int>> pos;  // pos[x][y] = index of y in rot[x], or -1
};

Rotation build_rotation(const OrientedComplex& l) {
    if (l.dim() != 2) throw Error(ErrorKind::NotA2Sphere, "not 2-dimensional");
    const auto& sc = l.complex();
    if (!sc.is_closed_pseudomanifold() || !sc.is_connected()) {
        throw Error(ErrorKind::NotA2Sphere, "not a closed connected pseudomanifold");
    }
    Rotation r;
    r.labels = l.vertices();
    const int n = static_cast<int>(r.labels.size());
    if (n > 254) throw Error(ErrorKind::NotA2Sphere, "too many vertices for a byte code");
    auto idx = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(r.labels.begin(), r.labels.end(), v) - r.labels.begin());
    };
    std::vector<std::vector<int>> next(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (std::size_t f = 0; f < l.num_facets(); ++f) {
        const Simplex& t = l.facets()[f];
        int a = idx(t[0]), b = idx(t[1]), c = idx(t[2]);
        if (l.sign(f) < 0) std::swap(b, c);
        // Positive (a,b,c): in Lk a the edge runs b -> c.
        next[a][b] = c;
        next[b][c] = a;
        next[c][a] = b;
        ++degree[a];
        ++degree[b];
        ++degree[c];
    }
    r.rot.resize(static_cast<std::size_t>(n));
    r.pos.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int x = 0; x < n; ++x) {
        int start = -1;
        for (int y = 0; y < n; ++y) {
            if (next[x][y] >= 0) {
                start = y;
                break;
            }
        }
        int y = start;
        do {
            if (r.pos[x][y] >= 0 || y < 0) throw Error(ErrorKind::NotA2Sphere, "vertex link is not a cycle");
            r.pos[x][y] = static_cast<int>(r.rot[x].size());
            r.rot[x].push_back(y);
            y = next[x][y];
        } while (y != start);
        if (static_cast<int>(r.rot[x].size()) != degree[x]) {
            throw Error(ErrorKind::NotA2Sphere, "vertex link is not a single cycle");
        }
    }
    long e = 0;
    for (int x = 0; x < n; ++x) e += static_cast<long>(r.rot[x].size());
    e /= 2;
    if (n - e + static_cast<long>(l.num_facets()) != 2) {
        throw Error(ErrorKind::NotA2Sphere, "Euler characteristic is not 2");
    }
    return r;
}

// Traversal from directed edge (root, first). Writes the code into out and the
// labeling (index -> label) into label. Stops early and returns false as soon as
// the code exceeds `bound` (when bound is non-null).
bool traverse(const Rotation& r, int root, int first, bool reverse, const CodeBytes* bound, CodeBytes& out,
              std::vector<int>& label) {
    const std::size_t n = r.rot.size();
    label.assign(n, 0);
    out.clear();
    std::vector<int> order;
    std::vector<int> parent(n, -1);
    order.reserve(n);
    label[static_cast<std::size_t>(root)] = 1;
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = first;
    int next_label = 2;
    bool tight = bound != nullptr;  // still equal to bound's prefix
    auto emit = [&](std::uint8_t b) {
        if (tight) {
            std::uint8_t c = (*bound)[out.size()];
            if (b > c) return false;
            if (b < c) tight = false;
        }
        out.push_back(b);
        return true;
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int x = order[i];
        const auto& nb = r.rot[static_cast<std::size_t>(x)];
        const int d = static_cast<int>(nb.size());
        const int s = r.pos[static_cast<std::size_t>(x)][static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        for (int k = 0; k < d; ++k) {
            int j = reverse ? ((s - k) % d + d) % d : (s + k) % d;
            int y = nb[static_cast<std::size_t>(j)];
            if (label[static_cast<std::size_t>(y)] == 0) {
                label[static_cast<std::size_t>(y)] = next_label++;
                order.push_back(y);
                parent[static_cast<std::size_t>(y)] = x;
            }
            if (!emit(static_cast<std::uint8_t>(label[static_cast<std::size_t>(y)]))) return false;
        }
        if (!emit(0)) return false;
    }
    return true;
}

struct MinResult {
    CodeBytes code;
    std::vector<std::vector<int>> labelings;
};

MinResult minimize(const Rotation& r, bool reverse) {
    MinResult best;
    CodeBytes cur;
    std::vector<int> label;
    const int n = static_cast<int>(r.rot.size());
    for (int x = 0; x < n; ++x) {
        for (int y : r.rot[static_cast<std::size_t>(x)]) {
            const bool have = !best.code.empty();
            if (!traverse(r, x, y, reverse, have ? &best.code : nullptr, cur, label)) continue;
            if (!have || cur < best.code) {
                best.code = cur;
                best.labelings.clear();
                best.labelings.push_back(label);
            } else if (cur == best.code) {
                best.labelings.push_back(label);
            }
        }
    }
    return best;
}

std::map<Vertex, Vertex> to_map(const Rotation& r, const std::vector<int>& label) {
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < label.size(); ++i) m[r.labels[i]] = label[i];
    return m;
}

}  // namespace

SphereCanon canonize_2sphere(const OrientedComplex& l) {
    Rotation r = build_rotation(l);
    MinResult fwd = minimize(r, false);
    MinResult rev = minimize(r, true);
    SphereCanon out;
    out.code.bytes = fwd.code;
    out.code.mirror_bytes = rev.code;
    for (const auto& lab : fwd.labelings) out.labelings.push_back(to_map(r, lab));
    if (rev.code == fwd.code) {
        for (const auto& lab : rev.labelings) out.mirror_labelings.push_back(to_map(r, lab));
    }
    return out;
}

CanonicalCode code_2sphere(const OrientedComplex& l) { return canonize_2sphere(l).code; }

namespace {

std::vector<Isomorphism> compose_with_first(const std::map<Vertex, Vertex>& first,
                                            const std::vector<std::map<Vertex, Vertex>>& others, bool preserving) {
    // g = first^{-1} o other maps the sphere to itself.
    std::map<Vertex, Vertex> inv;
    for (auto [v, lab] : first) inv[lab] = v;
    std::vector<Isomorphism> out;
    for (const auto& o : others) {
        Isomorphism iso;
        iso.orientation_preserving = preserving;
        for (auto [v, lab] : o) iso.vertex_map[v] = inv.at(lab);
        out.push_back(std::move(iso));
    }
    return out;
}

}  // namespace

std::vector<Isomorphism> automorphisms_2sphere(const OrientedComplex& l) {
    SphereCanon c = canonize_2sphere(l);
    return compose_with_first(c.labelings.front(), c.labelings, true);
}

std::vector<Isomorphism> antiautomorphisms_2sphere(const OrientedComplex& l) {
    SphereCanon c = canonize_2sphere(l);
    return compose_with_first(c.labelings.front(), c.mirror_labelings, false);
}

bool is_2sphere(const OrientedComplex& l) {
    try {
        build_rotation(l);
        return true;
    } catch (const Error&) {
        return false;
    }
}

void require_2sphere(const OrientedComplex& l) { build_rotation(l); }

OrientedComplex decode_2sphere(const CodeBytes& bytes) {
    std::vector<std::vector<Vertex>> rot;
    std::vector<Vertex> cur;
    for (auto b : bytes) {
        if (b == 0) {
            rot.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(b);
        }
    }
    if (!cur.empty() || rot.empty()) throw Error(ErrorKind::NotA2Sphere, "malformed code");
    std::map<Simplex, int> tri;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        const Vertex x = static_cast<Vertex>(i + 1);
        const auto& nb = rot[i];
        for (std::size_t k = 0; k < nb.size(); ++k) {
            Vertex ord[3] = {x, nb[k], nb[(k + 1) % nb.size()]};
            Simplex t(ord);
            int s = permutation_sign(ord);
            auto [it, inserted] = tri.emplace(t, s);
            if (!inserted && it->second != s) throw Error(ErrorKind::NotA2Sphere, "malformed code");
        }
    }
    std::vector<Simplex> facets;
    std::vector<std::int8_t> signs;
    for (auto [t, s] : tri) {
        facets.push_back(t);
        signs.push_back(static_cast<std::int8_t>(s));
    }
    try {
        OrientedComplex k(SimplicialComplex(std::move(facets)), std::move(signs));
        require_2sphere(k);
        return k;
    } catch (const Error& e) {
        throw Error(ErrorKind::NotA2Sphere, std::string("malformed code: ") + e.what());
    }
}

std::string to_hex(const CodeBytes& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

CodeBytes from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw Error(ErrorKind::Parse, "odd-length hex code");
    CodeBytes out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        auto nib = [&](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw Error(ErrorKind::Parse, "bad hex digit");
        };
        out.push_back(static_cast<std::uint8_t>(nib(hex[i]) * 16 + nib(hex[i + 1])));
    }
    return out;
}

namespace {

struct IndexedComplex {
    std::vector<Vertex> labels;
    std::vector<std::vector<int>> facets;  // vertex indices, sorted
    std::vector<int> signs;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<int>> facets_of;  // facet ids per vertex
    std::vector<std::uint64_t> invariant;
    std::map<std::vector<int>, int> facet_lookup;  // sorted index tuple -> sign
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

IndexedComplex index_complex(const OrientedComplex& k) {
    IndexedComplex c;
    c.labels = k.vertices();
    const std::size_t n = c.labels.size();
    auto idx = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(c.labels.begin(), c.labels.end(), v) - c.labels.begin());
    };
    c.adj.assign(n, std::vector<char>(n, 0));
    c.facets_of.resize(n);
    for (std::size_t f = 0; f < k.num_facets(); ++f) {
        std::vector<int> t;
        for (Vertex v : k.facets()[f]) t.push_back(idx(v));
        for (int a : t) {
            c.facets_of[static_cast<std::size_t>(a)].push_back(static_cast<int>(f));
            for (int b : t) {
                if (a != b) c.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
            }
        }
        c.facet_lookup[t] = k.sign(f);
        c.facets.push_back(std::move(t));
        c.signs.push_back(k.sign(f));
    }
    // Initial invariant: vertex star size and degree, then neighborhood refinement.
    c.invariant.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t deg = 0;
        for (std::size_t w = 0; w < n; ++w) deg += static_cast<std::uint64_t>(c.adj[v][w]);
        c.invariant[v] = mix(mix(17, c.facets_of[v].size()), deg);
    }
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for (std::size_t w = 0; w < n; ++w) {
                if (c.adj[v][w]) nb.push_back(c.invariant[w]);
            }
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = mix(31, c.invariant[v]);
            for (auto x : nb) h = mix(h, x);
            next[v] = h;
        }
        c.invariant = std::move(next);
    }
    return c;
}

}  // namespace

std::optional<Isomorphism> iso_generic(const OrientedComplex& a, const OrientedComplex& b, bool orientation_preserving) {
    if (a.dim() != b.dim() || a.num_facets() != b.num_facets()) return std::nullopt;
    IndexedComplex ca = index_complex(a);
    IndexedComplex cb = index_complex(b);
    const std::size_t n = ca.labels.size();
    if (n != cb.labels.size()) return std::nullopt;
    {
        auto ia = ca.invariant, ib = cb.invariant;
        std::sort(ia.begin(), ia.end());
        std::sort(ib.begin(), ib.end());
        if (ia != ib) return std::nullopt;
    }
    // Search order: BFS from the vertex with the rarest invariant.
    std::vector<int> order;
    {
        std::map<std::uint64_t, int> freq;
        for (auto x : ca.invariant) ++freq[x];
        int start = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (freq[ca.invariant[v]] < freq[ca.invariant[static_cast<std::size_t>(start)]]) start = static_cast<int>(v);
        }
        std::vector<char> seen(n, 0);
        for (std::size_t s0 = 0; s0 < n; ++s0) {
            int s = (s0 == 0) ? start : static_cast<int>(s0);
            if (seen[static_cast<std::size_t>(s)]) continue;
            seen[static_cast<std::size_t>(s)] = 1;
            std::size_t head = order.size();
            order.push_back(s);
            while (head < order.size()) {
                int x = order[head++];
                for (std::size_t y = 0; y < n; ++y) {
                    if (ca.adj[static_cast<std::size_t>(x)][y] && !seen[y]) {
                        seen[y] = 1;
                        order.push_back(static_cast<int>(y));
                    }
                }
            }
        }
    }
    std::vector<int> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    const int want = orientation_preserving ? 1 : -1;
    std::vector<int> phi(n, -1);
    std::vector<char> used(n, 0);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        const int x = order[depth];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || cb.invariant[y] != ca.invariant[static_cast<std::size_t>(x)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                int p = order[j];
                ok = ca.adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)] ==
                     cb.adj[y][static_cast<std::size_t>(phi[static_cast<std::size_t>(p)])];
            }
            if (!ok) continue;
            phi[static_cast<std::size_t>(x)] = static_cast<int>(y);
            // Facets completed by x must map to facets with the required sign relation.
            for (int f : ca.facets_of[static_cast<std::size_t>(x)]) {
                const auto& t = ca.facets[static_cast<std::size_t>(f)];
                bool complete = std::all_of(t.begin(), t.end(), [&](int v) { return rank[static_cast<std::size_t>(v)] <= static_cast<int>(depth); });
                if (!complete) continue;
                std::vector<Vertex> img;
                for (int v : t) img.push_back(phi[static_cast<std::size_t>(v)]);
                int par = permutation_sign(img);
                std::vector<int> sorted_img(img.begin(), img.end());
                std::sort(sorted_img.begin(), sorted_img.end());
                auto it = cb.facet_lookup.find(sorted_img);
                if (it == cb.facet_lookup.end() || it->second * par * ca.signs[static_cast<std::size_t>(f)] != want) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[y] = 1;
                if (extend(depth + 1)) return true;
                used[y] = 0;
            }
            phi[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    Isomorphism iso;
    iso.orientation_preserving = orientation_preserving;
    for (std::size_t v = 0; v < n; ++v) iso.vertex_map[ca.labels[v]] = cb.labels[static_cast<std::size_t>(phi[v])];
    return iso;
}

std::optional<Isomorphism> find_antiautomorphism(const OrientedComplex& a) { return iso_generic(a, a, false); }

OrientedComplex apply_isomorphism(const OrientedComplex& k, const Isomorphism& iso) {
    return relabel(k, iso.vertex_map);
}

}  // namespace lpont

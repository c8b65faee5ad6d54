#include <lpont/error.hpp>
#include <lpont/tcomplex.hpp>

namespace lpont {

Rational LocalFunction::value(const CanonicalCode& code) const {
    if (code.symmetric()) return 0;
    bool canonical_side = code.bytes < code.mirror_bytes;
    const CodeBytes& key = canonical_side ? code.bytes : code.mirror_bytes;
    auto it = table_.find(key);
    if (it == table_.end()) return 0;
    return canonical_side ? it->second : Rational(-it->second);
}

Rational LocalFunction::operator()(const OrientedComplex& l) const {
    if (table_.empty()) return 0;
    return value(canonize_2sphere(l).code);
}

void LocalFunction::set(const OrientedComplex& l, const Rational& v) {
    CanonicalCode code = canonize_2sphere(l).code;
    if (code.symmetric()) {
        if (v != 0) throw Error(ErrorKind::NotA2Sphere, "skew function must vanish on a symmetric sphere");
        return;
    }
    bool canonical_side = code.bytes < code.mirror_bytes;
    const CodeBytes& key = canonical_side ? code.bytes : code.mirror_bytes;
    Rational stored = canonical_side ? v : Rational(-v);
    if (stored == 0) {
        table_.erase(key);
    } else {
        table_[key] = stored;
    }
}

LocalFunction LocalFunction::random_on(const std::vector<OrientedComplex>& spheres, std::mt19937_64& rng, int range) {
    LocalFunction f;
    std::uniform_int_distribution<int> dist(-range, range);
    for (const auto& l : spheres) {
        CanonicalCode code = canonize_2sphere(l).code;
        if (code.symmetric()) continue;
        const CodeBytes& key = code.bytes < code.mirror_bytes ? code.bytes : code.mirror_bytes;
        if (f.table_.count(key)) continue;
        int x = dist(rng);
        if (x != 0) f.table_[key] = x;
    }
    return f;
}

Json LocalFunction::to_json() const {
    Json j;
    j["degree"] = degree();
    Json entries = Json::array();
    for (const auto& [code, v] : table_) {
        Json e;
        e["code"] = to_hex(code);
        e["value"] = to_string(v);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

LocalFunction LocalFunction::from_json(const Json& j) {
    try {
        if (j.at("degree").get<int>() != 3) throw Error(ErrorKind::DimensionMismatch, "only degree 3 is supported");
        LocalFunction f;
        for (const auto& e : j.at("entries")) {
            OrientedComplex l = decode_2sphere(from_hex(e.at("code").get<std::string>()));
            f.set(l, parse_rational(e.at("value").get<std::string>()));
        }
        return f;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("bad local function: ") + ex.what());
    }
}

Rational delta_eval(const SphereFunction& f, const OrientedComplex& l, LinkConvention conv) {
    Rational sum = 0;
    for (Vertex v : l.vertices()) {
        OrientedComplex lk = oriented_link(l, v);
        sum += f(conv == LinkConvention::Flipped ? lk.reversed() : lk);
    }
    return sum;
}

Rational delta_eval(const LocalFunction& f, const OrientedComplex& l, LinkConvention conv) {
    if (l.dim() != f.degree()) throw Error(ErrorKind::DimensionMismatch, "delta of a degree-3 function needs a 3-sphere");
    return delta_eval([&](const OrientedComplex& s) { return f(s); }, l, conv);
}

Rational delta_delta_eval(const LocalFunction& f, const OrientedComplex& m) {
    if (m.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "delta delta of a degree-3 function needs a 4-sphere");
    return delta_eval([&](const OrientedComplex& s) { return delta_eval(f, s); }, m);
}

SimplexChain f_sharp(const OrientedComplex& k, const LocalFunction& f) {
    const int m = k.dim();
    if (m < f.degree()) throw Error(ErrorKind::DimensionMismatch, "complex dimension below the function degree");
    SimplexChain out;
    for (const auto& s : k.complex().faces(static_cast<std::size_t>(m - f.degree() + 1))) {
        Rational x = f(oriented_link(k, s));
        if (x != 0) out[s] = x;
    }
    return out;
}

SimplexChain cooriented_boundary(const OrientedComplex& k, const SimplexChain& c) {
    SimplexChain out;
    for (const auto& [s, x] : c) {
        if (s.size() < 2) continue;
        OrientedComplex lk_s = oriented_link(k, s);
        for (Vertex w : s) {
            Simplex t = s.without(w);
            OrientedComplex induced = oriented_link(oriented_link(k, t), w);
            // Same underlying complex, so one facet decides.
            int eps = induced.sign_of(lk_s.facets().front()) * lk_s.sign(0);
            out[t] += eps * x;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool is_cycle_fsharp(const OrientedComplex& k, const SimplexChain& c) { return cooriented_boundary(k, c).empty(); }

Rational s_eval(const SphereFunction& f, const OrientedComplex& l, const Move& m) { return f(build_L_beta(l, m)); }

Rational d_eval(const SphereFunction& f, const OrientedComplex& l, const Move& m) {
    return f(apply_move(l, m)) - f(l);
}

HomotopyTerms homotopy_terms(const LocalFunction& f, const OrientedComplex& l, const Move& m, LinkConvention conv) {
    if (l.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "moves must act on 2-spheres");
    if (!is_admissible(l, m)) throw Error(ErrorKind::MoveNotAdmissible, "move at " + m.delta1.str() + " is not admissible");
    SphereFunction fn = [&](const OrientedComplex& s) { return f(s); };
    HomotopyTerms t;
    t.d = d_eval(fn, l, m);
    for (const auto& rec : induced_vertex_moves(l, m)) {
        if (!rec.essential) continue;
        t.delta_s += s_eval(fn, oriented_link(l, rec.vertex), rec.induced);
    }
    t.s_delta = delta_eval(f, build_L_beta(l, m), conv);
    return t;
}

bool homotopy_holds(const LocalFunction& f, const OrientedComplex& l, const Move& m, LinkConvention conv) {
    return homotopy_terms(f, l, m, conv).holds();
}

}  // namespace lpont

#include <lpont/canonical.hpp>
#include <lpont/error.hpp>
#include <lpont/gamma2.hpp>

#include <mutex>
#include <set>

namespace lpont {

std::optional<SignedEdge> edge_of_move(const SphereCanon& from, const SphereCanon& to, const Move& m) {
    MoveDescriptor d1 = move_descriptor(from, m.delta1);
    MoveDescriptor d2 = move_descriptor(to, m.delta2);
    if (d1 == d2) return std::nullopt;
    if (d1 < d2) return SignedEdge{EdgeKey{std::move(d1), std::move(d2)}, 1};
    return SignedEdge{EdgeKey{std::move(d2), std::move(d1)}, -1};
}

std::optional<SignedEdge> edge_of_move(const OrientedComplex& l, const Move& m) {
    OrientedComplex l2 = apply_move(l, m);
    return edge_of_move(canonize_2sphere(l), canonize_2sphere(l2), m);
}

SignedEdge mirror_edge(const EdgeKey& e) {
    static std::mutex mu;
    static std::map<EdgeKey, SignedEdge> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(e); it != cache.end()) return it->second;
    }
    // Rebuild the move a -> b in canonical labels and run it on the reversed sphere.
    OrientedComplex l = decode_2sphere(e.a.code).reversed();
    Vertex fresh = static_cast<Vertex>(l.vertices().size()) + 1;
    auto m = move_at(l, e.a.orbit, fresh);
    if (!m) throw Error(ErrorKind::MoveNotAdmissible, "edge key does not describe a move");
    auto img = edge_of_move(l, *m);
    if (!img) throw Error(ErrorKind::MoveNotAdmissible, "mirror of an essential move is inessential");
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(e, *img);
    return *img;
}

void Chain1::add(const EdgeKey& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain1& Chain1::operator+=(const Chain1& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Chain1& Chain1::operator-=(const Chain1& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Chain1& Chain1::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Rational Chain1::coefficient(const EdgeKey& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Chain1 mirror_chain(const Chain1& c) {
    Chain1 out;
    for (const auto& [e, x] : c.terms()) out.add(mirror_edge(e), x);
    return out;
}

std::map<CodeBytes, Rational> boundary(const Chain1& c) {
    std::map<CodeBytes, Rational> out;
    for (const auto& [e, x] : c.terms()) {
        if (e.is_loop()) continue;
        out[e.b.code] += x;
        out[e.a.code] -= x;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    }
    return out;
}

bool is_cycle(const Chain1& c) { return boundary(c).empty(); }

std::vector<CodeBytes> support_spheres(const Chain1& c) {
    std::set<CodeBytes> s;
    for (const auto& [e, x] : c.terms()) {
        s.insert(e.a.code);
        s.insert(e.b.code);
    }
    return {s.begin(), s.end()};
}

Chain1 loop_to_chain(const OrientedComplex& l0, const std::vector<Move>& moves) {
    Chain1 out;
    OrientedComplex cur = l0;
    SphereCanon cur_canon = canonize_2sphere(l0);
    const CodeBytes start = cur_canon.code.bytes;
    for (std::size_t j = 0; j < moves.size(); ++j) {
        if (!is_admissible(cur, moves[j])) {
            throw Error(ErrorKind::MoveNotAdmissible, "loop step " + std::to_string(j + 1) + " is not admissible");
        }
        OrientedComplex next = apply_move_unchecked(cur, moves[j]);
        SphereCanon next_canon = canonize_2sphere(next);
        if (auto e = edge_of_move(cur_canon, next_canon, moves[j])) out.add(*e);
        cur = std::move(next);
        cur_canon = std::move(next_canon);
    }
    if (cur_canon.code.bytes != start) throw Error(ErrorKind::LoopNotClosed, "move loop does not return to its start");
    return out;
}

Json to_json(const EdgeKey& e) {
    Json j;
    j["from"] = to_hex(e.a.code);
    j["from_orbit"] = to_json(e.a.orbit);
    j["to"] = to_hex(e.b.code);
    j["to_orbit"] = to_json(e.b.orbit);
    return j;
}

EdgeKey edge_from_json(const Json& j) {
    try {
        EdgeKey e{MoveDescriptor{from_hex(j.at("from").get<std::string>()), simplex_from_json(j.at("from_orbit"))},
                  MoveDescriptor{from_hex(j.at("to").get<std::string>()), simplex_from_json(j.at("to_orbit"))}};
        if (!(e.a < e.b)) throw Error(ErrorKind::Parse, "edge ends out of canonical order");
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, std::string("bad edge: ") + ex.what());
    }
}

Json to_json(const Chain1& c) {
    Json out = Json::array();
    for (const auto& [e, x] : c.terms()) {
        Json t;
        t["edge"] = to_json(e);
        t["coeff"] = to_string(x);
        out.push_back(std::move(t));
    }
    return out;
}

Chain1 chain_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "chain must be an array");
    Chain1 out;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("edge") || !t.contains("coeff")) {
            throw Error(ErrorKind::Parse, "chain term needs edge and coeff");
        }
        const auto& c = t["coeff"];
        Rational x = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        out.add(edge_from_json(t["edge"]), x);
    }
    return out;
}

}  // namespace lpont

#include <lpont/error.hpp>
#include <lpont/p1.hpp>

#include <atomic>
#include <map>
#include <thread>

namespace lpont {

bool ManifoldReport::ok() const {
    for (const auto& l : links)
        if (!l.certified) return false;
    return true;
}

ManifoldReport verify_4manifold(const OrientedComplex& k, const ReductionConfig& cfg, int jobs) {
    if (k.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "expected a 4-dimensional complex");
    if (!k.complex().is_closed_pseudomanifold()) {
        throw Error(ErrorKind::RidgeDegreeViolation, "not a closed pseudomanifold");
    }
    const auto vs = k.vertices();
    ManifoldReport report;
    report.links.resize(vs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < vs.size(); i = next++) {
            LinkReport& r = report.links[i];
            r.vertex = vs[i];
            OrientedComplex lk = oriented_link(k, vs[i]);
            r.vertices = lk.vertices().size();
            r.facets = lk.num_facets();
            ReductionConfig c = cfg;
            c.seed = cfg.seed + i;
            try {
                r.moves = reduce_sphere(lk, c).moves;
                r.certified = true;
            } catch (const Error& e) {
                r.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(vs.size())));
    if (n == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return report;
}

void require_certified(const ManifoldReport& report) {
    for (const auto& l : report.links) {
        if (!l.certified) {
            throw Error(ErrorKind::LinkNotCertified,
                        "link of vertex " + std::to_string(l.vertex) + " not certified: " + l.error);
        }
    }
}

Chain1 link_contribution(const OrientedComplex& link, const std::vector<Move>& reduction) {
    auto states = replay(link, reduction);
    if (!is_simplex_boundary(states.back())) {
        throw Error(ErrorKind::LinkNotCertified, "reduction does not end at a simplex boundary");
    }
    Chain1 out;
    // Walk from the simplex boundary back to the link with inverted moves.
    for (std::size_t j = reduction.size(); j-- > 0;) {
        const OrientedComplex& from = states[j + 1];
        Move beta = invert_move(reduction[j]);
        for (const auto& rec : induced_vertex_moves(from, beta)) {
            if (!rec.essential) continue;
            auto e = edge_of_move(oriented_link(from, rec.vertex), rec.induced);
            if (!e) continue;
            out.add(*e);
            SignedEdge m = mirror_edge(e->key);
            out.add(m.key, Rational(-e->sign * m.sign));
        }
    }
    return out;
}

Chain1 assemble_p1_cycle(const OrientedComplex& k, const std::vector<std::vector<Move>>& reductions) {
    const auto vs = k.vertices();
    if (reductions.size() != vs.size()) throw Error(ErrorKind::DimensionMismatch, "one reduction per vertex expected");
    Chain1 out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += link_contribution(oriented_link(k, vs[i]), reductions[i]);
    if (!is_cycle(out)) throw Error(ErrorKind::AssembledChainNotACycle, "assembled chain has nonzero boundary");
    return out;
}

std::vector<Move> transport_moves(const std::vector<Move>& moves, const OrientedComplex& from, const OrientedComplex& to) {
    auto iso = iso_generic(from, to, true);
    if (!iso) iso = iso_generic(from, to, false);
    if (!iso) throw Error(ErrorKind::DimensionMismatch, "complexes are not isomorphic");
    std::map<Vertex, Vertex> map = iso->vertex_map;
    Vertex next = max_vertex(to.complex()) + 1;
    auto image = [&](const Simplex& s) {
        std::vector<Vertex> out;
        for (Vertex v : s) {
            auto [it, fresh] = map.emplace(v, next);
            if (fresh) ++next;
            out.push_back(it->second);
        }
        return Simplex(out);
    };
    std::vector<Move> out;
    for (const auto& m : moves) out.push_back(Move{image(m.delta1), image(m.delta2)});
    return out;
}

P1Result pontryagin_number(const OrientedComplex& k, const P1Config& cfg) {
    P1Result r;
    if (cfg.reductions) {
        const auto vs = k.vertices();
        if (cfg.reductions->size() != vs.size()) {
            throw Error(ErrorKind::DimensionMismatch, "one reduction per vertex expected");
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            LinkReport lr;
            lr.vertex = vs[i];
            OrientedComplex lk = oriented_link(k, vs[i]);
            lr.vertices = lk.vertices().size();
            lr.facets = lk.num_facets();
            lr.moves = (*cfg.reductions)[i];
            try {
                lr.certified = is_simplex_boundary(replay(lk, lr.moves).back());
                if (!lr.certified) lr.error = "given reduction does not end at a simplex boundary";
            } catch (const Error& e) {
                lr.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
            }
            r.report.links.push_back(std::move(lr));
        }
    } else {
        r.report = verify_4manifold(k, cfg.reduction, cfg.jobs);
    }
    require_certified(r.report);
    std::vector<std::vector<Move>> seqs;
    for (const auto& l : r.report.links) seqs.push_back(l.moves);
    r.cycle = assemble_p1_cycle(k, seqs);
    r.solve = evaluate_c0(r.cycle, cfg.solver);
    r.c0 = r.solve.value;
    r.p1 = r.c0 / 2;
    return r;
}

Json to_json(const P1Result& r, bool with_certificate) {
    Json j;
    j["p1"] = to_string(r.p1);
    j["c0"] = to_string(r.c0);
    Json links = Json::array();
    for (const auto& l : r.report.links) {
        Json x;
        x["vertex"] = l.vertex;
        x["vertices"] = l.vertices;
        x["facets"] = l.facets;
        x["certified"] = l.certified;
        x["moves"] = l.moves.size();
        links.push_back(std::move(x));
    }
    j["links"] = std::move(links);
    j["cycle_size"] = r.cycle.size();
    j["support_spheres"] = support_spheres(r.cycle).size();
    j["radius_used"] = r.solve.radius_used;
    j["candidates"] = r.solve.candidates;
    j["rank"] = r.solve.rank;
    if (with_certificate) j["certificate"] = to_json(r.solve.certificate);
    return j;
}

}  // namespace lpont

#include <lpont/error.hpp>
#include <lpont/reduction.hpp>

#include <cmath>
#include <random>

namespace lpont {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Energy {
    long v;
    long f;
};

Energy energy_of(const OrientedComplex& k) {
    return {static_cast<long>(k.vertices().size()), static_cast<long>(k.num_facets())};
}

bool at_target(const OrientedComplex& k) {
    const auto n = static_cast<std::size_t>(k.dim() + 2);
    return k.num_facets() == n && k.vertices().size() == n;
}

std::optional<std::vector<Move>> attempt(const OrientedComplex& l, const ReductionConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    OrientedComplex k = l;
    std::vector<Move> path;
    const std::size_t top = static_cast<std::size_t>(k.dim() + 1);
    double t = cfg.initial_temperature;
    Energy best = energy_of(k);
    long since_best = 0;
    std::optional<Move> last;
    auto delta_e = [&](const Move& m) {
        long dv = (m.delta1.size() == 1) ? -1 : (m.delta2.size() == 1 ? 1 : 0);
        long df = static_cast<long>(m.delta1.size()) - static_cast<long>(m.delta2.size());
        return cfg.weight_vertices * static_cast<double>(dv) + cfg.weight_facets * static_cast<double>(df);
    };
    for (long step = 0; step < cfg.max_steps; ++step) {
        if (at_target(k)) return path;
        std::vector<Move> moves;
        for (auto& m : admissible_moves(k)) {
            if (m.delta1.size() == top) continue;  // never subdivide
            if (last && m.delta1 == last->delta2 && m.delta2 == last->delta1) continue;
            moves.push_back(m);
        }
        if (moves.empty()) return std::nullopt;
        double best_de = 0;
        std::vector<std::size_t> down;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            double de = delta_e(moves[i]);
            if (de < best_de) {
                best_de = de;
                down.clear();
            }
            if (de < 0 && de == best_de) down.push_back(i);
        }
        const Move* chosen = nullptr;
        if (!down.empty()) {
            chosen = &moves[down[rng() % down.size()]];
        } else {
            const Move& cand = moves[rng() % moves.size()];
            double de = delta_e(cand);
            if (de <= 0 || uniform01(rng) < std::exp(-de / std::max(t, 1e-9))) chosen = &cand;
        }
        t *= cfg.cooling;
        if (!chosen) continue;
        k = apply_move_unchecked(k, *chosen);
        path.push_back(*chosen);
        last = *chosen;
        Energy e = energy_of(k);
        if (e.v < best.v || (e.v == best.v && e.f < best.f)) {
            best = e;
            since_best = 0;
        } else if (++since_best >= cfg.reheat_after) {
            t = cfg.initial_temperature;
            since_best = 0;
        }
    }
    if (at_target(k)) return path;
    return std::nullopt;
}

}  // namespace

bool is_simplex_boundary(const OrientedComplex& k) {
    if (!at_target(k)) return false;
    OrientedComplex target = boundary_simplex(k.dim() + 1);
    return iso_generic(k, target, true).has_value() || iso_generic(k, target, false).has_value();
}

MoveSequence reduce_sphere(const OrientedComplex& l, const ReductionConfig& cfg) {
    if (cfg.max_steps <= 0 || !(cfg.cooling > 0 && cfg.cooling < 1)) {
        throw Error(ErrorKind::BudgetExhausted, "invalid reduction configuration");
    }
    if (l.dim() < 1 || !l.complex().is_closed_pseudomanifold()) {
        throw Error(ErrorKind::BudgetExhausted, "input is not a closed pseudomanifold");
    }
    for (int r = 0; r < std::max(cfg.restarts, 1); ++r) {
        auto path = attempt(l, cfg, splitmix(cfg.seed * 1000003ull + static_cast<std::uint64_t>(r)));
        if (!path) continue;
        MoveSequence seq{l, std::move(*path)};
        if (is_simplex_boundary(verify_sequence(l, seq))) return seq;
    }
    throw Error(ErrorKind::BudgetExhausted, "no reduction to a simplex boundary found within budget");
}

std::vector<OrientedComplex> replay(const OrientedComplex& l, const std::vector<Move>& moves) {
    std::vector<OrientedComplex> out{l};
    for (std::size_t j = 0; j < moves.size(); ++j) {
        if (!is_admissible(out.back(), moves[j])) {
            throw Error(ErrorKind::MoveNotAdmissible,
                        "step " + std::to_string(j + 1) + ": move at " + moves[j].delta1.str() + " is not admissible");
        }
        out.push_back(apply_move_unchecked(out.back(), moves[j]));
    }
    return out;
}

OrientedComplex verify_sequence(const OrientedComplex& l, const MoveSequence& seq) {
    if (!(seq.initial == l)) throw Error(ErrorKind::MoveNotAdmissible, "sequence starts from a different complex");
    return replay(l, seq.moves).back();
}

}  // namespace lpont

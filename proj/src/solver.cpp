#include <lpont/error.hpp>
#include <lpont/solver.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

namespace lpont {

namespace {

using SparseVec = std::vector<std::pair<int, Rational>>;

// a - c * b over sorted sparse vectors.
SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -c * b[j].second);
            ++j;
        } else {
            Rational x = a[i].second - c * b[j].second;
            if (x != 0) out.emplace_back(a[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

struct Candidate {
    CodeBytes sphere;
    bool reversed;
    Anchor anchor;
    GeneratorSpec spec;
    Rational value;
};

// Row echelon form keyed by the smallest edge id of each row.
class Echelon {
public:
    struct Row {
        SparseVec v;
        Rational value;
        int candidate;
        std::vector<std::pair<int, Rational>> steps;  // earlier rows subtracted
    };

    // Reduces v as far as the basis allows; returns the steps taken.
    std::vector<std::pair<int, Rational>> reduce(SparseVec& v, Rational& value) const {
        std::vector<std::pair<int, Rational>> steps;
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) break;
            const Row& r = rows_[static_cast<std::size_t>(it->second)];
            Rational c = v.front().second / r.v.front().second;
            v = axpy(v, c, r.v);
            value -= c * r.value;
            steps.emplace_back(it->second, c);
        }
        return steps;
    }

    // False when v is dependent; then `residual_value` is the value of the zero chain
    // it reduced to, which must vanish.
    bool insert(SparseVec v, Rational value, int candidate, Rational& residual_value) {
        auto steps = reduce(v, value);
        if (v.empty()) {
            residual_value = value;
            return false;
        }
        pivots_[v.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(Row{std::move(v), std::move(value), candidate, std::move(steps)});
        return true;
    }

    // Candidate coefficients reproducing sum_r w[r] * row_r.
    std::map<int, Rational> expand(const std::vector<std::pair<int, Rational>>& steps) const {
        std::vector<Rational> w(rows_.size());
        for (const auto& [r, c] : steps) w[static_cast<std::size_t>(r)] += c;
        std::map<int, Rational> out;
        for (std::size_t r = rows_.size(); r-- > 0;) {
            if (w[r] == 0) continue;
            const Row& row = rows_[r];
            out[row.candidate] += w[r];
            for (const auto& [s, c] : row.steps) w[static_cast<std::size_t>(s)] -= w[r] * c;
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<Row> rows_;
    std::map<int, int> pivots_;
};

class EdgeIds {
public:
    int id(const EdgeKey& e) {
        auto [it, inserted] = ids_.emplace(e, static_cast<int>(ids_.size()));
        return it->second;
    }
    SparseVec vec(const Chain1& c) {
        SparseVec v;
        for (const auto& [e, x] : c.terms()) v.emplace_back(id(e), x);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

private:
    std::map<EdgeKey, int> ids_;
};

OrientedComplex rebuild_sphere(const CodeBytes& code, bool reversed) {
    OrientedComplex l = decode_2sphere(code);
    return reversed ? l.reversed() : l;
}

}  // namespace

SolveResult evaluate_c0(const Chain1& gamma, const SolverConfig& cfg) {
    if (!is_cycle(gamma)) throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");
    SolveResult res;
    if (gamma.empty()) return res;

    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(cfg.shuffle_seed);
    EdgeIds ids;
    const SparseVec target = ids.vec(gamma);
    Echelon ech;
    std::vector<Candidate> cands;
    std::map<SparseVec, Rational> seen;
    std::set<CodeBytes> expanded;

    auto solved = [&](std::vector<std::pair<int, Rational>>& steps, Rational& value) {
        SparseVec v = target;
        Rational residual = 0;
        steps = ech.reduce(v, residual);
        // The reduced chain is zero, so its value gamma - sum vanishes.
        value = -residual;
        return v.empty();
    };

    // Fills res and returns true when the basis spans gamma.
    auto try_finish = [&](int radius) {
        std::vector<std::pair<int, Rational>> steps;
        Rational value;
        if (!solved(steps, value)) return false;
        res.value = value;
        res.radius_used = radius;
        res.candidates = cands.size();
        res.rank = ech.rank();
        res.certificate.value = value;
        for (const auto& [k, c] : ech.expand(steps)) {
            const Candidate& cd = cands[static_cast<std::size_t>(k)];
            res.certificate.terms.push_back(CertificateTerm{cd.sphere, cd.reversed, cd.anchor, cd.spec, c});
        }
        Rational check = 0;
        for (const auto& t : res.certificate.terms) check += t.coeff * c0_of(t.spec);
        if (check != value) throw Error(ErrorKind::InconsistentGeneratorValues, "certificate value mismatch");
        return true;
    };

    std::vector<CodeBytes> ring = support_spheres(gamma);
    for (int radius = 0; radius <= cfg.radius_max; ++radius) {
        std::sort(ring.begin(), ring.end(), [](const CodeBytes& a, const CodeBytes& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        if (cfg.shuffle_seed != 0) std::shuffle(ring.begin(), ring.end(), rng);
        std::set<CodeBytes> next;
        for (const auto& code : ring) {
            if (expanded.count(code)) continue;
            OrientedComplex base = decode_2sphere(code);
            for (bool rev : {false, true}) {
                OrientedComplex l = rev ? base.reversed() : base;
                CodeBytes own = rev ? canonize_2sphere(l).code.bytes : code;
                if (!expanded.insert(own).second) continue;
                ++res.spheres_expanded;
                auto gens = enumerate_at(l, {1, 2, 3, 4, 5, 6});
                if (cfg.shuffle_seed != 0) std::shuffle(gens.begin(), gens.end(), rng);
                for (auto& g : gens) {
                    Rational value = c0_of(g.spec);
                    SparseVec v = ids.vec(g.chain);
                    auto [it, fresh] = seen.emplace(v, value);
                    if (!fresh) {
                        if (it->second != value) {
                            throw Error(ErrorKind::InconsistentGeneratorValues,
                                        std::string("equal chains with values ") + to_string(it->second) + " and " +
                                            to_string(value) + " (" + kind_name(g.spec.kind) + ")");
                        }
                        continue;
                    }
                    for (const auto& s : support_spheres(g.chain))
                        if (!expanded.count(s)) next.insert(s);
                    int idx = static_cast<int>(cands.size());
                    cands.push_back(Candidate{code, rev, g.anchor, g.spec, value});
                    Rational residual;
                    if (!ech.insert(std::move(v), value, idx, residual) && residual != 0) {
                        throw Error(ErrorKind::InconsistentGeneratorValues,
                                    std::string("dependent generator ") + kind_name(g.spec.kind) +
                                        " leaves value " + to_string(residual));
                    }
                    if (cands.size() > cfg.candidate_max) {
                        throw Error(ErrorKind::NoDecompositionWithinBudget, "candidate budget exhausted");
                    }
                }
                double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (elapsed > cfg.time_max_seconds) {
                    throw Error(ErrorKind::NoDecompositionWithinBudget, "time budget exhausted");
                }
            }
            if (radius >= cfg.radius_min && try_finish(radius)) return res;
        }
        if (radius >= cfg.radius_min && try_finish(radius)) return res;
        ring.assign(next.begin(), next.end());
    }
    throw Error(ErrorKind::NoDecompositionWithinBudget,
                "no decomposition within radius " + std::to_string(cfg.radius_max) + " (" +
                    std::to_string(cands.size()) + " candidates, rank " + std::to_string(ech.rank()) + ")");
}

Chain1 replay_certificate(const DecompositionCertificate& cert) {
    Chain1 out;
    for (const auto& t : cert.terms) {
        GeneratorChain g = build_alpha(rebuild_sphere(t.sphere, t.reversed), t.anchor);
        if (g.spec != t.spec) throw Error(ErrorKind::AnchorConfigurationInvalid, "certificate term changed kind");
        out += t.coeff * g.chain;
    }
    return out;
}

Json to_json(const DecompositionCertificate& cert) {
    Json j;
    j["value"] = to_string(cert.value);
    Json terms = Json::array();
    for (const auto& t : cert.terms) {
        Json x;
        x["sphere"] = to_hex(t.sphere);
        x["reversed"] = t.reversed;
        x["alpha"] = t.anchor.alpha;
        Json simp = Json::array();
        for (const auto& s : t.anchor.simplices) simp.push_back(to_json(s));
        x["simplices"] = simp;
        x["vertices"] = t.anchor.vertices;
        x["spec"] = to_json(t.spec);
        x["coeff"] = to_string(t.coeff);
        terms.push_back(std::move(x));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace lpont

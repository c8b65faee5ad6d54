#pragma once

#include <lpont/gamma2.hpp>
#include <lpont/reduction.hpp>
#include <lpont/solver.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lpont {

struct LinkReport {
    Vertex vertex = 0;
    std::size_t vertices = 0;
    std::size_t facets = 0;
    bool certified = false;
    std::string error;
    // Moves from the link to the boundary of a 4-simplex, when certified.
    std::vector<Move> moves;
};

struct ManifoldReport {
    std::vector<LinkReport> links;
    bool ok() const;
};

// Per-vertex link reduction; link i is reduced with seed cfg.seed + i. `jobs`
// links are processed in parallel.
ManifoldReport verify_4manifold(const OrientedComplex& k, const ReductionConfig& cfg, int jobs = 1);
// Throws LinkNotCertified naming the first failing vertex.
void require_certified(const ManifoldReport& report);

// The cycle sum over links, over the moves taking the 4-simplex boundary to the link,
// over vertices with an essential induced move, of (e - mirror(e)). `reductions[i]`
// runs from the link of the i-th vertex to the 4-simplex boundary. Throws
// AssembledChainNotACycle.
Chain1 assemble_p1_cycle(const OrientedComplex& k, const std::vector<std::vector<Move>>& reductions);

// Contribution of a single link; generally not a cycle on its own.
Chain1 link_contribution(const OrientedComplex& link, const std::vector<Move>& reduction);

// Moves of a reduction of `from`, rewritten for an isomorphic (possibly
// anti-isomorphic) complex `to`. Vertices created along the way get labels above
// max_vertex(to). Throws DimensionMismatch when the complexes are not isomorphic.
std::vector<Move> transport_moves(const std::vector<Move>& moves, const OrientedComplex& from, const OrientedComplex& to);

struct P1Config {
    ReductionConfig reduction;
    SolverConfig solver;
    int jobs = 1;
    // Use these link reductions instead of searching (indexed by vertex order).
    std::optional<std::vector<std::vector<Move>>> reductions;
};

struct P1Result {
    Rational p1;
    Rational c0;
    Chain1 cycle;
    SolveResult solve;
    ManifoldReport report;
};

P1Result pontryagin_number(const OrientedComplex& k, const P1Config& cfg = {});

Json to_json(const P1Result& r, bool with_certificate);

}  // namespace lpont

#pragma once

#include <lpont/pachner.hpp>

#include <cstdint>

namespace lpont {

struct ReductionConfig {
    std::uint64_t seed = 0;
    long max_steps = 200000;  // per restart
    int restarts = 8;
    double initial_temperature = 1.5;
    double cooling = 0.995;       // per step, in (0, 1)
    long reheat_after = 400;      // steps without a new best before reheating
    double weight_vertices = 4.0;
    double weight_facets = 1.0;
};

// Moves from l to a complex with dim+2 vertices and facets, certified isomorphic to
// the boundary of a simplex. Throws BudgetExhausted.
MoveSequence reduce_sphere(const OrientedComplex& l, const ReductionConfig& cfg);

// Replays seq from l with admissibility checks; throws MoveNotAdmissible naming the step.
OrientedComplex verify_sequence(const OrientedComplex& l, const MoveSequence& seq);

// Complexes before each move, followed by the final complex.
std::vector<OrientedComplex> replay(const OrientedComplex& l, const std::vector<Move>& moves);

bool is_simplex_boundary(const OrientedComplex& k);

}  // namespace lpont

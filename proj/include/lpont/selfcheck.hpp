#pragma once

#include <lpont/gamma2.hpp>
#include <lpont/tcomplex.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lpont {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few only

    bool ok() const { return failed == 0 && passed > 0; }
};

// Sphere reached from the boundary of a (dim+1)-simplex by `steps` random
// admissible moves; subdivisions are skipped once max_vertices is reached.
OrientedComplex random_pachner_sphere(std::mt19937_64& rng, int dim, int steps, std::size_t max_vertices);

// Spheres a local function has to be defined on for the chain homotopy identity at (l, m).
std::vector<OrientedComplex> homotopy_spheres(const OrientedComplex& l, const Move& m);

// d = delta s + s delta on random (skew f, admissible move) pairs over 2-spheres
// with at most 12 vertices.
SuiteResult homotopy_suite(std::uint64_t seed, int pairs = 120, LinkConvention conv = LinkConvention::Standard);

// delta delta f = 0 on simplex boundaries, suspensions and random 4-spheres.
SuiteResult delta_squared_suite(std::uint64_t seed, int count = 24);

// Closed-form generator values, and the same values recovered by the solver from
// explicit loops. The solved loops are appended to `loops` when given.
SuiteResult value_table_suite(std::vector<Chain1>* loops = nullptr);

// c0 of a mirrored cycle is minus c0 of the cycle, on random generator loops and sums.
SuiteResult equivariance_suite(std::uint64_t seed, int spheres = 4);

}  // namespace lpont

#pragma once

#include <lpont/gamma2.hpp>
#include <lpont/generators.hpp>

#include <cstdint>
#include <vector>

namespace lpont {

struct SolverConfig {
    int radius_max = 2;
    // Keep expanding through this radius before solving, to exercise the consistency
    // check on more candidates.
    int radius_min = 0;
    std::size_t candidate_max = 2'000'000;
    double time_max_seconds = 600.0;
    // Nonzero: shuffle the sphere and candidate order with this seed.
    std::uint64_t shuffle_seed = 0;
};

// A generator loop anchored on decode_2sphere(sphere), reversed when `reversed`.
struct CertificateTerm {
    CodeBytes sphere;
    bool reversed = false;
    Anchor anchor;
    GeneratorSpec spec;
    Rational coeff;
};

struct DecompositionCertificate {
    std::vector<CertificateTerm> terms;
    Rational value;
};

struct SolveResult {
    Rational value;
    DecompositionCertificate certificate;
    int radius_used = 0;
    std::size_t candidates = 0;  // distinct candidate chains after dedup
    std::size_t spheres_expanded = 0;
    std::size_t rank = 0;
};

// Exact c0 of a cycle by decomposition into generator chains. Throws NotACycle,
// NoDecompositionWithinBudget, or InconsistentGeneratorValues when two
// decompositions of the same chain disagree.
SolveResult evaluate_c0(const Chain1& gamma, const SolverConfig& cfg = {});

// Sum of the certificate's chains. Throws when a term cannot be rebuilt.
Chain1 replay_certificate(const DecompositionCertificate& cert);

Json to_json(const DecompositionCertificate& cert);

}  // namespace lpont

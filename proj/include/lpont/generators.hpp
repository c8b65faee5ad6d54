#pragma once

#include <lpont/gamma2.hpp>
#include <lpont/pachner.hpp>
#include <lpont/rational.hpp>

#include <set>
#include <string>
#include <vector>

namespace lpont {

enum class GeneratorKind { S1_0, S1_1, S1_2, S2_0, S2_1, S2_2, S3_0, S3_1, S3_2, S4, S5, S6 };

const char* kind_name(GeneratorKind k);
GeneratorKind kind_from_name(const std::string& s);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::S1_0;
    std::vector<int> params;
    // -1 when the configuration is the mirror image of the drawn one; the value negates.
    int chirality = 1;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
    friend auto operator<=>(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Anchor data of a loop, in the labels of the sphere it is built on.
//   alpha 1: two distinct triangles
//   alpha 2: a triangle and an admissible edge not in it
//   alpha 3: an admissible pair of edges
//   alpha 4: vertices x, y, z (their common neighbor u is derived)
//   alpha 5: vertices x, y, z, u
//   alpha 6: vertices x, y, z, u, v
struct Anchor {
    int alpha = 1;
    std::vector<Simplex> simplices;
    std::vector<Vertex> vertices;
};

struct GeneratorChain {
    GeneratorSpec spec;
    Anchor anchor;
    Chain1 chain;
    MoveSequence loop;
};

// Throws AnchorConfigurationInvalid when the anchors do not fit the loop.
GeneratorChain build_alpha(const OrientedComplex& l, const Anchor& anchor);

// Kind and parameters of the loop. Configurations outside the twelve families
// throw AnchorConfigurationInvalid.
GeneratorSpec classify(const OrientedComplex& l, const Anchor& anchor);

Rational c0_of(const GeneratorSpec& spec);

// All loops anchored at l whose alpha index is in `alphas`, deduplicated by
// (spec, chain). Only configurations that classify into a family are returned.
std::vector<GeneratorChain> enumerate_at(const OrientedComplex& l, const std::set<int>& alphas);

// Union of the stars of the given vertices is a full subcomplex.
bool is_regular(const OrientedComplex& l, const std::vector<Vertex>& vertices);

Json to_json(const GeneratorSpec& s);
GeneratorSpec spec_from_json(const Json& j);

}  // namespace lpont

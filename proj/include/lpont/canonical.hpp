#pragma once

#include <lpont/complex.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpont {

using CodeBytes = std::vector<std::uint8_t>;

struct CanonicalCode {
    CodeBytes bytes;
    CodeBytes mirror_bytes;

    bool symmetric() const { return bytes == mirror_bytes; }
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct Isomorphism {
    std::map<Vertex, Vertex> vertex_map;
    bool orientation_preserving = true;
};

// Canonical form of an oriented 2-sphere.
struct SphereCanon {
    CanonicalCode code;
    // Each labeling maps original vertices to canonical labels 1..V and realizes
    // code.bytes; there is one per orientation-preserving automorphism.
    std::vector<std::map<Vertex, Vertex>> labelings;
    // Labelings realizing code.bytes from the reversed orientation (antiautomorphisms
    // exist iff this is nonempty, i.e. iff the sphere is symmetric).
    std::vector<std::map<Vertex, Vertex>> mirror_labelings;
};

// Throws NotA2Sphere.
SphereCanon canonize_2sphere(const OrientedComplex& l);
CanonicalCode code_2sphere(const OrientedComplex& l);
std::vector<Isomorphism> automorphisms_2sphere(const OrientedComplex& l);
std::vector<Isomorphism> antiautomorphisms_2sphere(const OrientedComplex& l);

bool is_2sphere(const OrientedComplex& l);
void require_2sphere(const OrientedComplex& l);

// Rebuild the sphere in canonical labels from its code. Throws NotA2Sphere.
OrientedComplex decode_2sphere(const CodeBytes& bytes);

std::string to_hex(const CodeBytes& bytes);
CodeBytes from_hex(const std::string& hex);

// Backtracking isomorphism search for oriented complexes of any dimension.
std::optional<Isomorphism> iso_generic(const OrientedComplex& a, const OrientedComplex& b,
                                       bool orientation_preserving = true);
// An orientation-reversing self-map, if one exists.
std::optional<Isomorphism> find_antiautomorphism(const OrientedComplex& a);

// Image of a complex under an isomorphism's vertex map.
OrientedComplex apply_isomorphism(const OrientedComplex& k, const Isomorphism& iso);

}  // namespace lpont

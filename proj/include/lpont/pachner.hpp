#pragma once

#include <lpont/canonical.hpp>
#include <lpont/complex.hpp>

#include <optional>
#include <vector>

namespace lpont {

// Bistellar move replacing delta1 * boundary(delta2) by boundary(delta1) * delta2.
// For a facet delta1, delta2 is the single fresh vertex of the subdivision.
struct Move {
    Simplex delta1;
    Simplex delta2;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move&, const Move&) = default;
};

struct MoveSequence {
    OrientedComplex initial;
    std::vector<Move> moves;
};

struct InducedMoveRecord {
    Vertex vertex;
    Move induced;
    bool essential;
};

// The move at delta1 if admissible. `fresh` labels the new vertex of a subdivision
// and must not be a vertex of k.
std::optional<Move> move_at(const OrientedComplex& k, const Simplex& delta1, Vertex fresh);
// Throws MoveNotAdmissible.
Move make_move(const OrientedComplex& k, const Simplex& delta1, Vertex fresh);
bool is_admissible(const OrientedComplex& k, const Move& m);

// Subdivisions use max_vertex(k) + 1 as the fresh label.
std::vector<Move> admissible_moves(const OrientedComplex& k);

// Unchanged facets keep their signs. Throws MoveNotAdmissible.
OrientedComplex apply_move(const OrientedComplex& k, const Move& m);
// Apply without the admissibility check.
OrientedComplex apply_move_unchecked(const OrientedComplex& k, const Move& m);
inline Move invert_move(const Move& m) { return Move{m.delta2, m.delta1}; }

// Code of a 2-sphere together with the Aut-orbit of a simplex in canonical labels.
struct MoveDescriptor {
    CodeBytes code;
    Simplex orbit;

    friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
    friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

MoveDescriptor move_descriptor(const SphereCanon& canon, const Simplex& delta);
MoveDescriptor move_descriptor(const OrientedComplex& sphere, const Simplex& delta);

// A move changing the facet count is essential; otherwise k must be a 2-sphere.
bool is_essential(const OrientedComplex& k, const Move& m);

// Moves induced on the links of vertices present before and after m.
std::vector<InducedMoveRecord> induced_vertex_moves(const OrientedComplex& k, const Move& m);

// The sphere C(L1) + C(L2) + delta1*delta2 with cone points u1, u2, oriented so that
// Lk u2 = L2 (and then Lk u1 = -L1).
OrientedComplex build_L_beta(const OrientedComplex& l1, const Move& m, Vertex u1, Vertex u2);
OrientedComplex build_L_beta(const OrientedComplex& l1, const Move& m);

}  // namespace lpont

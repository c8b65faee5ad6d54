#pragma once

#include <lpont/simplex.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lpont {

// Pure complex given by its facets (sorted, distinct, all of one dimension).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // Throws NotPure or DuplicateFacet. Facets may be given in any order.
    explicit SimplicialComplex(std::vector<Simplex> facets);

    int dim() const { return dim_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t num_facets() const { return facets_.size(); }
    std::vector<Vertex> vertices() const;
    std::size_t num_vertices() const { return vertices().size(); }

    // Index into facets(), or -1.
    int facet_index(const Simplex& f) const;
    bool has_facet(const Simplex& f) const { return facet_index(f) >= 0; }
    // True if s is a face of some facet.
    bool contains(const Simplex& s) const;

    // All faces with exactly k vertices.
    std::vector<Simplex> faces(std::size_t k) const;
    // f-vector (f_0, ..., f_dim).
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;

    // Each codimension-one face lies in exactly two facets.
    bool is_closed_pseudomanifold() const;
    // Each codimension-one face lies in one or two facets.
    bool is_pseudomanifold() const;
    bool is_connected() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Simplex> facets_;
    int dim_ = -1;
};

// Complex with a sign per facet: +1 if the sorted vertex order is positive.
class OrientedComplex {
public:
    OrientedComplex() = default;
    // Signs parallel to complex.facets(). Validates consistency; throws NonOrientable.
    OrientedComplex(SimplicialComplex complex, std::vector<std::int8_t> signs);
    // Skips validation; for callers that construct consistent orientations.
    static OrientedComplex trusted(SimplicialComplex complex, std::vector<std::int8_t> signs);

    const SimplicialComplex& complex() const { return complex_; }
    int dim() const { return complex_.dim(); }
    const std::vector<Simplex>& facets() const { return complex_.facets(); }
    const std::vector<std::int8_t>& signs() const { return signs_; }
    std::size_t num_facets() const { return complex_.num_facets(); }
    std::vector<Vertex> vertices() const { return complex_.vertices(); }

    int sign(std::size_t facet_index) const { return signs_[facet_index]; }
    // Sign of sorted facet f; throws SimplexNotInComplex.
    int sign_of(const Simplex& f) const;
    // Sign of the facet written in the given order.
    int sign_of_tuple(std::span<const Vertex> ordered) const;

    OrientedComplex reversed() const;

    friend bool operator==(const OrientedComplex&, const OrientedComplex&) = default;

private:
    SimplicialComplex complex_;
    std::vector<std::int8_t> signs_;
};

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facet_list);

// Consistent orientation by ridge adjacency, seeded with first_facet_sign on the
// lexicographically least facet. Throws RidgeDegreeViolation, NotConnected, NonOrientable.
OrientedComplex orient(const SimplicialComplex& k, int first_facet_sign = 1);

// Orientation given by the in-row order of each facet.
OrientedComplex orient_explicit(const std::vector<std::vector<Vertex>>& ordered_facets);

// Orientation induced on the face opposite position i of a facet with sign s.
inline int induced_sign(int s, std::size_t i) { return (i % 2 == 0) ? s : -s; }

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s);
// Positive (s, w_0, ..., w_m) induces positive (w_0, ..., w_m), s written sorted.
OrientedComplex oriented_link(const OrientedComplex& k, const Simplex& s);
OrientedComplex oriented_link(const OrientedComplex& k, Vertex v);

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s);
// Maximal simplices of the full subcomplex on vs (generally not pure).
std::vector<Simplex> full_subcomplex(const SimplicialComplex& k, std::span<const Vertex> vs);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& a, Vertex apex);
// Positive (sigma, tau) when sigma and tau are positive.
OrientedComplex oriented_join(const OrientedComplex& a, const OrientedComplex& b);
// Join with the 0-sphere {north, south}, oriented as oriented_join(S0, a).
OrientedComplex suspension(const OrientedComplex& a, Vertex north, Vertex south);

// Boundary of the n-simplex on labels 1..n+1, oriented as the boundary of (1, ..., n+1).
OrientedComplex boundary_simplex(int n);

// Relabel vertices through `map` (must be injective on the vertex set).
OrientedComplex relabel(const OrientedComplex& k, const std::map<Vertex, Vertex>& map);

Vertex max_vertex(const SimplicialComplex& k);

}  // namespace lpont

#pragma once

#include <lpont/pachner.hpp>
#include <lpont/rational.hpp>
#include <lpont/serialize.hpp>

#include <map>
#include <optional>
#include <vector>

namespace lpont {

// Unoriented edge of the graph of oriented 2-spheres: the two end descriptors of a
// move, stored with a < b. The stored direction a -> b is the positive one.
struct EdgeKey {
    MoveDescriptor a;
    MoveDescriptor b;

    bool is_loop() const { return a.code == b.code; }
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct SignedEdge {
    EdgeKey key;
    int sign;  // +1 if the move runs a -> b
};

// None iff the move is inessential.
std::optional<SignedEdge> edge_of_move(const OrientedComplex& l, const Move& m);
std::optional<SignedEdge> edge_of_move(const SphereCanon& from, const SphereCanon& to, const Move& m);

// The edge reached by reversing the orientation of every sphere, with the sign relating
// the positive directions.
SignedEdge mirror_edge(const EdgeKey& e);

class Chain1 {
public:
    using Terms = std::map<EdgeKey, Rational>;

    Chain1() = default;

    void add(const EdgeKey& e, const Rational& c);
    void add(const SignedEdge& e, const Rational& c = 1) { add(e.key, c * e.sign); }
    Chain1& operator+=(const Chain1& o);
    Chain1& operator-=(const Chain1& o);
    Chain1& operator*=(const Rational& c);
    friend Chain1 operator+(Chain1 a, const Chain1& b) { return a += b; }
    friend Chain1 operator-(Chain1 a, const Chain1& b) { return a -= b; }
    friend Chain1 operator*(const Rational& c, Chain1 a) { return a *= c; }
    friend bool operator==(const Chain1&, const Chain1&) = default;

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const EdgeKey& e) const;

private:
    Terms terms_;
};

Chain1 mirror_chain(const Chain1& c);
// Boundary as a map from sphere codes to coefficients (zero entries omitted).
std::map<CodeBytes, Rational> boundary(const Chain1& c);
bool is_cycle(const Chain1& c);

// Distinct sphere codes at the ends of the chain's edges, sorted.
std::vector<CodeBytes> support_spheres(const Chain1& c);

// Chain of a closed move loop; inessential steps contribute nothing. Throws
// LoopNotClosed when the final sphere is not isomorphic to l0.
Chain1 loop_to_chain(const OrientedComplex& l0, const std::vector<Move>& moves);

Json to_json(const EdgeKey& e);
EdgeKey edge_from_json(const Json& j);
Json to_json(const Chain1& c);
Chain1 chain_from_json(const Json& j);

}  // namespace lpont

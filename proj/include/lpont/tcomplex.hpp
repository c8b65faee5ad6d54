#pragma once

#include <lpont/canonical.hpp>
#include <lpont/pachner.hpp>
#include <lpont/rational.hpp>
#include <lpont/serialize.hpp>

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace lpont {

// Skew function on oriented 2-spheres (degree 3). Values are stored on the orientation
// whose code is smaller; the other orientation reads the negation and symmetric
// spheres read 0.
class LocalFunction {
public:
    LocalFunction() = default;

    int degree() const { return 3; }
    Rational operator()(const OrientedComplex& l) const;
    Rational value(const CanonicalCode& code) const;
    // Throws NotA2Sphere; a nonzero value on a symmetric sphere is rejected.
    void set(const OrientedComplex& l, const Rational& v);
    bool empty() const { return table_.empty(); }
    std::size_t size() const { return table_.size(); }
    const std::map<CodeBytes, Rational>& table() const { return table_; }

    // Random integer values in [-range, range] on the given spheres.
    static LocalFunction random_on(const std::vector<OrientedComplex>& spheres, std::mt19937_64& rng, int range = 9);

    Json to_json() const;
    static LocalFunction from_json(const Json& j);

private:
    std::map<CodeBytes, Rational> table_;
};

using SphereFunction = std::function<Rational(const OrientedComplex&)>;

enum class LinkConvention { Standard, Flipped };

// Sum of f over the oriented vertex links of l. With Flipped, each link is read with
// the opposite orientation.
Rational delta_eval(const SphereFunction& f, const OrientedComplex& l, LinkConvention conv = LinkConvention::Standard);
// l must be a 3-sphere; throws DimensionMismatch.
Rational delta_eval(const LocalFunction& f, const OrientedComplex& l, LinkConvention conv = LinkConvention::Standard);
// (delta delta f)(m) on a 4-sphere.
Rational delta_delta_eval(const LocalFunction& f, const OrientedComplex& m);

// Coefficients f(Lk s) on the (dim K - 3)-simplices of K, with Lk s oriented by the
// global orientation of K.
using SimplexChain = std::map<Simplex, Rational>;
SimplexChain f_sharp(const OrientedComplex& k, const LocalFunction& f);
// Boundary with incidence +1 exactly when Lk s carries the orientation induced from
// Lk t for the face t of s.
SimplexChain cooriented_boundary(const OrientedComplex& k, const SimplexChain& c);
bool is_cycle_fsharp(const OrientedComplex& k, const SimplexChain& c);

Rational s_eval(const SphereFunction& f, const OrientedComplex& l, const Move& m);
Rational d_eval(const SphereFunction& f, const OrientedComplex& l, const Move& m);

struct HomotopyTerms {
    Rational d;          // f(L2) - f(L1)
    Rational delta_s;    // sum over essential induced moves of f(L_beta_v)
    Rational s_delta;    // (delta f)(L_beta)
    bool holds() const { return d == delta_s + s_delta; }
};

// Both sides of d = delta s + s delta on the edge of m (m a move on the 2-sphere l).
// Throws MoveNotAdmissible.
HomotopyTerms homotopy_terms(const LocalFunction& f, const OrientedComplex& l, const Move& m,
                         LinkConvention conv = LinkConvention::Standard);
bool homotopy_holds(const LocalFunction& f, const OrientedComplex& l, const Move& m,
                  LinkConvention conv = LinkConvention::Standard);

}  // namespace lpont

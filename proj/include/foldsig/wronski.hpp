#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "foldsig/polygon.hpp"
#include "foldsig/rational.hpp"
#include "foldsig/triangulation.hpp"
#include "foldsig/upoly.hpp"

namespace foldsig {

/// Bivariate polynomial as a map from exponent pairs to nonzero rational
/// coefficients.
class SparseBivariatePolynomial {
public:
    using Exponent = std::pair<int, int>;  // (i, j) for x^i y^j

    SparseBivariatePolynomial() = default;
    explicit SparseBivariatePolynomial(std::map<Exponent, Rat> terms);

    void set_term(int i, int j, Rat coeff);  // erases on zero
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree_in_x() const;
    int degree_in_y() const;

    Rat eval(const Rat& x, const Rat& y) const;
    RatInterval eval_interval(const RatInterval& x, const RatInterval& y) const;

    /// Coefficients as a polynomial in y (index j), entries in x; and the
    /// symmetric view.
    std::vector<UniPoly> coefficients_in_y() const;
    std::vector<UniPoly> coefficients_in_x() const;

    UniPoly restrict_y_to_zero() const;  // f(x, 0)
    UniPoly restrict_x_to_zero() const;  // f(0, y)

    /// Convex hull of the exponent vectors.
    LatticePolygon newton_polygon() const;

    std::string to_string() const;

    friend bool operator==(const SparseBivariatePolynomial&,
                           const SparseBivariatePolynomial&) = default;

private:
    std::map<Exponent, Rat> terms_;
};

struct WronskiCoefficients {
    Rat gamma1, gamma2, gamma3;  // all nonzero
};

/// Wronski polynomial: the term at lattice point (i,j) carries the gamma
/// component selected by the canonical vertex 3-coloring. Requires a dense,
/// foldable triangulation with nonnegative coordinates.
SparseBivariatePolynomial build_wronski(const Triangulation& t, const WronskiCoefficients& gamma);

/// Normalized area of the polygon = generic torus solution count.
std::int64_t kushnirenko_number(const LatticePolygon& poly);

enum class Eliminate { X, Y };

/// Sylvester resultant with respect to the eliminated variable, exact.
/// Throws ErrorKind::NonGeneric when identically zero.
UniPoly eliminate(const SparseBivariatePolynomial& f, const SparseBivariatePolynomial& g,
                  Eliminate var);

struct SolutionBox {
    IsolatingInterval x, y;
};

struct SolveReport {
    std::int64_t kushnirenko_number = 0;
    std::int64_t torus_solution_count = 0;  // with multiplicity
    std::vector<SolutionBox> real_solutions;
    int real_count = 0;
    bool generic = false;
    bool axis_solutions = false;  // common roots with a zero coordinate
    std::vector<std::string> notes;
};

struct WronskiSystem {
    Triangulation triangulation;
    SparseBivariatePolynomial f, g;
};

WronskiSystem make_system(const Triangulation& t, const WronskiCoefficients& a,
                          const WronskiCoefficients& b);

/// Counts torus solutions via elimination in both directions and enumerates
/// the distinct real ones with isolating boxes. Non-generic input is
/// reported through the flag, never thrown.
SolveReport solve_system(const WronskiSystem& s);

struct BoundCheck {
    std::int64_t signature = 0;
    int real_count = 0;
    bool bound_holds = false;
    bool generic = false;
};

/// Signature lower-bound check: bound_holds = (real_count >= signature)
/// whenever the system is generic.
BoundCheck verify_bound(const Triangulation& t, const WronskiCoefficients& a,
                        const WronskiCoefficients& b);

/// Dual point of the pencil spanned by the two coefficient vectors (their
/// cross product). The system's solutions form the fiber of the coloring map
/// over this projective point.
std::array<Rat, 3> wronski_center(const WronskiCoefficients& a, const WronskiCoefficients& b);

/// True when all three components have the same strict sign. Fibers over
/// such points meet the folding-map degree argument, so the signature bound
/// applies.
bool center_in_positive_chamber(const WronskiCoefficients& a, const WronskiCoefficients& b);

/// Seeded-random integer coefficients in [-9,9] \ {0}.
WronskiCoefficients random_gamma(std::mt19937& rng);

/// Seeded-random pair whose center lies in the positive chamber; the
/// hypothesis under which the signature bound is asserted.
std::pair<WronskiCoefficients, WronskiCoefficients> random_bound_pair(std::mt19937& rng);

}  // namespace foldsig

#pragma once

#include <optional>
#include <vector>

#include "foldsig/rational.hpp"

namespace foldsig {

/// Univariate polynomial with exact rational coefficients, coefficient of
/// x^i at index i, no stored leading zeros. An empty vector is the zero
/// polynomial (degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(Rat c);
    static UniPoly monomial(Rat c, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    UniPoly derivative() const;

    /// Multiplicity of 0 as a root (count of leading zero coefficients from
    /// the bottom), and the polynomial with that power of x divided out.
    int trailing_zero_multiplicity() const;
    UniPoly strip_trailing_zeros() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Euclidean division; b must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Monic gcd(a, b); gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'): same roots, all simple.
UniPoly squarefree_part(const UniPoly& p);

/// Canonical Sturm chain of the square-free part.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Isolating interval for one real root. exact_hit means lo == hi is the
/// root itself; otherwise the open interval (lo, hi) contains exactly one
/// root and the polynomial changes sign between the endpoints.
struct IsolatingInterval {
    Rat lo, hi;
    bool exact_hit = false;

    Rat midpoint() const { return (lo + hi) / 2; }
    RatInterval as_interval() const { return {lo, hi}; }
};

struct RealRootResult {
    int count = 0;
    std::vector<IsolatingInterval> intervals;  // sorted, pairwise disjoint
};

/// Distinct real roots via Sturm sequences on the square-free part,
/// restricted to a closed interval when one is given. Throws
/// ErrorKind::InvalidInput on the zero polynomial.
RealRootResult count_real_roots(const UniPoly& p,
                                std::optional<RatInterval> range = std::nullopt);

/// Shrinks an isolating interval below the width target by bisection,
/// keeping the sign-change invariant. p must be square-free on the interval.
IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rat& width_target);

/// Cauchy bound: every real root lies in (-b, b).
Rat root_bound(const UniPoly& p);

}  // namespace foldsig

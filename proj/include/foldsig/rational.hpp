#pragma once

#include <gmpxx.h>

#include <string>

#include "foldsig/errors.hpp"

namespace foldsig {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p", or "p/q" into a canonical rational.
Rat parse_rational(const std::string& s);

std::string rational_to_string(const Rat& r);

inline int sign_of(const Rat& r) { return sgn(r); }

/// Closed rational interval [lo, hi]; lo == hi encodes an exact value.
struct RatInterval {
    Rat lo, hi;

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
};

RatInterval interval_add(const RatInterval& a, const RatInterval& b);
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);
RatInterval interval_scale(const Rat& c, const RatInterval& a);
RatInterval interval_pow(const RatInterval& a, int k);  // k >= 0

}  // namespace foldsig

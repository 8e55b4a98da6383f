#include "foldsig/rational.hpp"

#include <algorithm>

namespace foldsig {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::Parse, "parse_rational: empty string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
            throw Error(ErrorKind::Parse, "parse_rational: bad character in '" + s + "'");
        }
    }
    try {
        Rat r(s);
        if (s.find('/') != std::string::npos && Int(r.get_den()) == 0) {
            throw Error(ErrorKind::Parse, "parse_rational: zero denominator in '" + s + "'");
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "parse_rational: cannot parse '" + s + "'");
    }
}

std::string rational_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RatInterval interval_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval interval_scale(const Rat& c, const RatInterval& a) {
    if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

namespace {

Rat rat_pow(Rat base, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace

RatInterval interval_pow(const RatInterval& a, int k) {
    if (k == 0) return {Rat(1), Rat(1)};
    if (k % 2 == 1) return {rat_pow(a.lo, k), rat_pow(a.hi, k)};
    if (sgn(a.lo) >= 0) return {rat_pow(a.lo, k), rat_pow(a.hi, k)};
    if (sgn(a.hi) <= 0) return {rat_pow(a.hi, k), rat_pow(a.lo, k)};
    return {Rat(0), std::max(rat_pow(a.lo, k), rat_pow(a.hi, k))};
}

}  // namespace foldsig

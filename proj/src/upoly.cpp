#include "foldsig/upoly.hpp"

#include <algorithm>

namespace foldsig {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(Rat c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(Rat c, int power) {
    std::vector<Rat> v(power + 1, Rat(0));
    v[power] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& UniPoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rat& UniPoly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::InvalidInput, "leading coefficient of zero polynomial");
    return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UniPoly::sign_at_pos_inf() const {
    if (c_.empty()) return 0;
    return sgn(c_.back());
}

int UniPoly::sign_at_neg_inf() const {
    if (c_.empty()) return 0;
    int s = sgn(c_.back());
    return (degree() % 2 == 0) ? s : -s;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

int UniPoly::trailing_zero_multiplicity() const {
    if (c_.empty()) return 0;
    int k = 0;
    while (k < static_cast<int>(c_.size()) && sgn(c_[k]) == 0) ++k;
    return k;
}

UniPoly UniPoly::strip_trailing_zeros() const {
    int k = trailing_zero_multiplicity();
    if (k == 0) return *this;
    return UniPoly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> out(c_);
    for (auto& c : out) c = -c;
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
    const Rat& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[k + b.degree()] / lead;
        quo[k] = q;
        if (sgn(q) == 0) continue;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.c_[i];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (sgn(c) == 0) continue;
        if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) out += "-";
        Rat a = abs(c);
        bool unit = (a == 1);
        if (i == 0 || !unit) out += rational_to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    // monic normalization
    std::vector<Rat> c = x.coeffs();
    const Rat lead = c.back();
    for (auto& ci : c) ci /= lead;
    return UniPoly(std::move(c));
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return UniPoly::constant(Rat(1));
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return UniPoly::divmod(p, g).first;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    UniPoly p0 = squarefree_part(p);
    if (p0.is_zero()) return seq;
    seq.push_back(p0);
    if (p0.degree() == 0) return seq;
    seq.push_back(p0.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UniPoly r = UniPoly::divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int variations_at(const std::vector<UniPoly>& seq, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& p : seq) signs.push_back(p.sign_at(x));
    return sign_changes(signs);
}

// Splits (lo, hi) at a point that is not a root of p, preferring the
// midpoint. Roots are finite, so probing midpoints of shrinking
// subintervals terminates.
Rat non_root_split(const UniPoly& p, const Rat& lo, const Rat& hi) {
    Rat a = lo, b = hi;
    while (true) {
        Rat mid = (a + b) / 2;
        if (p.sign_at(mid) != 0) return mid;
        b = mid;  // root hit exactly; probe closer to lo
    }
}

// exact roots (sign 0 at a probe) are emitted as zero-width intervals
void isolate(const std::vector<UniPoly>& seq, const UniPoly& p, const Rat& lo, const Rat& hi,
             int nroots, std::vector<IsolatingInterval>& out) {
    if (nroots == 0) return;
    if (nroots == 1 && p.sign_at(lo) * p.sign_at(hi) < 0) {
        out.push_back({lo, hi, false});
        return;
    }
    Rat mid = non_root_split(p, lo, hi);
    int left = variations_at(seq, lo) - variations_at(seq, mid);
    isolate(seq, p, lo, mid, left, out);
    isolate(seq, p, mid, hi, nroots - left, out);
}

}  // namespace

Rat root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(1);
    Rat max_ratio(0);
    const Rat lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeff(i)) / lead;
        if (r > max_ratio) max_ratio = r;
    }
    return max_ratio + 1;
}

RealRootResult count_real_roots(const UniPoly& p, std::optional<RatInterval> range) {
    if (p.is_zero()) {
        throw Error(ErrorKind::InvalidInput, "count_real_roots: zero polynomial");
    }
    RealRootResult res;
    if (p.degree() == 0) return res;

    UniPoly sf = squarefree_part(p);
    Rat bound = root_bound(sf);
    Rat lo = -bound, hi = bound;  // all roots lie strictly inside
    if (range) {
        lo = std::max(lo, range->lo);
        hi = std::min(hi, range->hi);
    }
    if (lo >= hi) {
        if (lo == hi && sf.sign_at(lo) == 0) {
            res.intervals.push_back({lo, lo, true});
            res.count = 1;
        }
        return res;
    }

    // An endpoint that is itself a root (possible only for caller-supplied
    // ranges) is emitted exactly and deflated out; sf is square-free, so one
    // division removes it.
    std::vector<IsolatingInterval> exact;
    for (Rat endpoint : {lo, hi}) {
        if (sf.degree() > 0 && sf.sign_at(endpoint) == 0) {
            exact.push_back({endpoint, endpoint, true});
            sf = UniPoly::divmod(sf, UniPoly({-endpoint, Rat(1)})).first;
        }
    }
    if (sf.degree() > 0) {
        std::vector<UniPoly> seq = sturm_sequence(sf);
        int n = variations_at(seq, lo) - variations_at(seq, hi);
        isolate(seq, sf, lo, hi, n, res.intervals);
    }
    res.intervals.insert(res.intervals.end(), exact.begin(), exact.end());
    std::sort(res.intervals.begin(), res.intervals.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    res.count = static_cast<int>(res.intervals.size());
    return res;
}

IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rat& width_target) {
    if (iv.exact_hit) return iv;
    UniPoly sf = squarefree_part(p);
    int slo = sf.sign_at(iv.lo);
    while (iv.hi - iv.lo > width_target) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int smid = sf.sign_at(mid);
        if (smid == 0) return {mid, mid, true};
        if (smid == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

}  // namespace foldsig

#ifndef INTERLACE_INTERVAL_HPP
#define INTERLACE_INTERVAL_HPP

#include <algorithm>
#include <utility>

#include "interlace/errors.hpp"
#include "interlace/numeric.hpp"

namespace interlace {

/// Closed interval with exact rational endpoints, lo <= hi.
struct RationalInterval {
    Rat lo;
    Rat hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw PreconditionError("InvalidInterval", "lo > hi");
    }

    static RationalInterval point(const Rat& x) { return RationalInterval(x, x); }

    Rat width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return sign_of(lo) <= 0 && sign_of(hi) >= 0; }

    /// +1 if the whole interval is positive, -1 if negative, 0 if it straddles
    /// or touches zero.
    int definite_sign() const {
        if (sign_of(lo) > 0) return 1;
        if (sign_of(hi) < 0) return -1;
        return 0;
    }

    Rat midpoint() const { return (lo + hi) / 2; }
};

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

inline RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) { return a + (-b); }

inline RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RationalInterval scale(const RationalInterval& a, const Rat& c) {
    if (sign_of(c) >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

inline RationalInterval operator+(const RationalInterval& a, const Rat& c) { return {a.lo + c, a.hi + c}; }

/// a / b, requiring 0 not in b.
inline RationalInterval divide(const RationalInterval& a, const RationalInterval& b) {
    if (b.contains_zero()) throw PreconditionError("IntervalDivByZero", "divisor interval contains zero");
    RationalInterval inv{Rat(1) / b.hi, Rat(1) / b.lo};
    return a * inv;
}

/// Tight k-th power (exact image of the interval under x^k).
inline RationalInterval pow_interval(const RationalInterval& a, unsigned long k) {
    if (k == 0) return RationalInterval::point(Rat(1));
    Rat lk = pow_rat(Rat(a.lo), static_cast<long>(k));
    Rat hk = pow_rat(Rat(a.hi), static_cast<long>(k));
    if (k % 2 == 1) return {lk, hk};
    if (a.contains_zero()) return {Rat(0), std::max(lk, hk)};
    return {std::min(lk, hk), std::max(lk, hk)};
}

inline RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace interlace

#endif

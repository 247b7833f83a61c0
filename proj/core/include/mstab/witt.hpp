#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "mstab/f4.hpp"

namespace mstab {

struct PrecisionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline uint64_t mask_bits(unsigned k) {
    return k >= 64 ? ~uint64_t(0) : ((uint64_t(1) << k) - 1);
}

/* inverse of an odd residue mod 2^k, by Newton iteration x <- x(2-ax) */
inline uint64_t inv_odd(uint64_t a, unsigned k) {
    if ((a & 1) == 0)
        throw std::domain_error("inv_odd: even argument");
    uint64_t x = 1;
    for (int it = 0; it < 6; ++it)
        x = x * (2 - a * x);
    return x & mask_bits(k);
}

/* 2-adic valuation, capped at k (v2(0) = k) */
inline unsigned val2(uint64_t a, unsigned k) {
    a &= mask_bits(k);
    if (a == 0)
        return k;
    unsigned v = 0;
    while ((a & 1) == 0) {
        a >>= 1;
        ++v;
    }
    return v < k ? v : k;
}

/* Root of x^2 + bx + c mod 2^k on the branch x = x0 mod 2.
 * Requires b odd (simple root); Newton converges quadratically. */
inline uint64_t quad_root_odd_deriv(uint64_t b, uint64_t c, uint64_t x0, unsigned k) {
    if (((b + 2 * x0) & 1) == 0)
        throw std::domain_error("quad_root_odd_deriv: derivative not a unit");
    uint64_t m = mask_bits(k);
    uint64_t x = x0 & 1;
    if (((x * x + b * x + c) & 1) != 0)
        throw std::domain_error("quad_root_odd_deriv: no root on this branch");
    for (int it = 0; it < 8; ++it) {
        uint64_t f = (x * x + b * x + c) & m;
        uint64_t fp = (2 * x + b) & m;
        x = (x - f * inv_odd(fp, k)) & m;
    }
    if (((x * x + b * x + c) & m) != 0)
        throw std::runtime_error("quad_root_odd_deriv: Newton failed to converge");
    return x;
}

/* sqrt of m = 1 mod 8 in Z/2^k, on the branch sqrt = 1 mod 4.
 * Writes x = 1+2y and solves y^2 + y + (1-m)/4 = 0. */
inline uint64_t sqrt_1mod8(uint64_t m, unsigned k) {
    if (k < 3 || (m & 7) != 1)
        throw std::domain_error("sqrt_1mod8: argument not 1 mod 8");
    uint64_t c = ((0 - (m - 1)) >> 2) & mask_bits(k);  // (1-m)/4 mod 2^k
    uint64_t y = quad_root_odd_deriv(1, c, 0, k);
    return (1 + 2 * y) & mask_bits(k);
}

}  // namespace detail

/* Truncated Witt vectors of F4: the ring (Z/2^k)[w]/(w^2+w+1).
 * Value is c0 + c1*w with residues mod 2^k.  Operations demand equal
 * precision; use truncated() to lower k explicitly. */
struct Witt {
    uint64_t c0 = 0;
    uint64_t c1 = 0;
    unsigned k = 8;

    Witt() = default;
    Witt(uint64_t a0, uint64_t a1, unsigned prec) : c0(a0), c1(a1), k(prec) {
        if (k < 1 || k > 60)
            throw std::invalid_argument("Witt: precision must be in [1,60]");
        c0 &= mask();
        c1 &= mask();
    }
    static Witt scalar(uint64_t n, unsigned prec) { return Witt(n, 0, prec); }
    static Witt omega(unsigned prec) { return Witt(0, 1, prec); }

    uint64_t mask() const { return detail::mask_bits(k); }

    void check(const Witt& o) const {
        if (k != o.k)
            throw PrecisionMismatch("Witt: mixed precisions " + std::to_string(k) + " vs " +
                                    std::to_string(o.k));
    }

    friend Witt operator+(const Witt& x, const Witt& y) {
        x.check(y);
        return Witt(x.c0 + y.c0, x.c1 + y.c1, x.k);
    }
    friend Witt operator-(const Witt& x, const Witt& y) {
        x.check(y);
        return Witt(x.c0 - y.c0, x.c1 - y.c1, x.k);
    }
    Witt operator-() const { return Witt(0 - c0, 0 - c1, k); }

    /* (c0+c1w)(d0+d1w) with w^2 = -1-w */
    friend Witt operator*(const Witt& x, const Witt& y) {
        x.check(y);
        uint64_t cross = x.c1 * y.c1;
        return Witt(x.c0 * y.c0 - cross, x.c0 * y.c1 + x.c1 * y.c0 - cross, x.k);
    }
    Witt& operator+=(const Witt& y) { *this = *this + y; return *this; }
    Witt& operator-=(const Witt& y) { *this = *this - y; return *this; }
    Witt& operator*=(const Witt& y) { *this = *this * y; return *this; }

    friend bool operator==(const Witt& x, const Witt& y) {
        x.check(y);
        return x.c0 == y.c0 && x.c1 == y.c1;
    }
    friend bool operator!=(const Witt& x, const Witt& y) { return !(x == y); }

    bool is_zero() const { return c0 == 0 && c1 == 0; }

    /* Frobenius lift: w -> w^2 = -1-w, Z/2^k-linearly.  An order-2 ring map. */
    Witt frob() const { return Witt(c0 - c1, 0 - c1, k); }

    /* image in the residue field W -> F4 */
    F4 residue() const { return F4(uint8_t((c0 & 1) | ((c1 & 1) << 1))); }

    bool is_unit() const { return !residue().is_zero(); }

    /* norm to Z/2^k: x * frob(x) = c0^2 - c0 c1 + c1^2 */
    uint64_t norm() const { return (c0 * c0 - c0 * c1 + c1 * c1) & mask(); }

    /* trace to Z/2^k: x + frob(x) = 2 c0 - c1 */
    uint64_t trace() const { return (2 * c0 - c1) & mask(); }

    Witt inv() const {
        if (!is_unit())
            throw std::domain_error("Witt: inverse of non-unit");
        uint64_t ninv = detail::inv_odd(norm(), k);
        return frob() * Witt::scalar(ninv, k);
    }

    /* min 2-adic valuation of the two coordinates, capped at k */
    unsigned val2() const {
        unsigned a = detail::val2(c0, k), b = detail::val2(c1, k);
        return a < b ? a : b;
    }

    /* exact division by 2, dropping one bit of precision */
    Witt halve() const {
        if ((c0 & 1) || (c1 & 1))
            throw std::domain_error("Witt: halve of non-even element");
        if (k < 2)
            throw std::domain_error("Witt: halve would exhaust precision");
        return Witt(c0 >> 1, c1 >> 1, k - 1);
    }

    Witt truncated(unsigned knew) const {
        if (knew > k)
            throw std::invalid_argument("Witt: cannot raise precision by truncation");
        return Witt(c0, c1, knew);
    }

    std::string str() const {
        return "(" + std::to_string(c0) + " + " + std::to_string(c1) + "w mod 2^" +
               std::to_string(k) + ")";
    }
};

/* Teichmuller lift: the unique t with t^4 = t, t = x mod 2.
 * Obtained by iterating y -> y^4, which contracts each residue disc. */
inline Witt teichmuller_lift(F4 x, unsigned k) {
    if (x.is_zero())
        return Witt(0, 0, k);
    Witt t(x.v & 1, (x.v >> 1) & 1, k);
    for (unsigned it = 0; it <= k; ++it) {
        Witt t4 = t * t * t * t;
        if (t4 == t)
            return t;
        t = t4;
    }
    throw std::runtime_error("teichmuller_lift: iteration did not stabilize");
}

}  // namespace mstab

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "mstab/f4.hpp"

namespace mstab {

/* Exact dyadic rational n / 2^e, normalized so n is odd or zero.
 * e may be negative (the value is then an even integer). */
struct Dyadic {
    using Int = boost::multiprecision::cpp_int;

    Int n = 0;
    long e = 0;

    Dyadic() = default;
    Dyadic(long long v) : n(v) { normalize(); }
    Dyadic(Int num, long den_pow) : n(std::move(num)), e(den_pow) { normalize(); }

    static Dyadic half_pow(long j) { return Dyadic(Int(1), j); }  // 1/2^j

    void normalize() {
        if (n == 0) {
            e = 0;
            return;
        }
        while ((n & 1) == 0) {
            n >>= 1;
            --e;
        }
    }

    bool is_zero() const { return n == 0; }
    bool is_integral() const { return e <= 0; }

    friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        long e = std::max(x.e, y.e);
        Int xn = x.n << (e - x.e);
        Int yn = y.n << (e - y.e);
        return Dyadic(xn + yn, e);
    }
    friend Dyadic operator-(const Dyadic& x, const Dyadic& y) {
        return x + Dyadic(-y.n, y.e);
    }
    Dyadic operator-() const { return Dyadic(-n, e); }
    friend Dyadic operator*(const Dyadic& x, const Dyadic& y) {
        return Dyadic(x.n * y.n, x.e + y.e);
    }
    Dyadic& operator+=(const Dyadic& y) { *this = *this + y; return *this; }
    Dyadic& operator*=(const Dyadic& y) { *this = *this * y; return *this; }

    friend bool operator==(const Dyadic& x, const Dyadic& y) {
        return x.n == y.n && (x.n == 0 || x.e == y.e);
    }
    friend bool operator!=(const Dyadic& x, const Dyadic& y) { return !(x == y); }

    /* reduction mod 2 of an integral dyadic, into F2 inside F4 */
    F4 mod2() const {
        if (!is_integral())
            throw std::domain_error("Dyadic: mod2 of non-integral value " + str());
        if (e < 0)
            return F4::zero();  // even integer
        return (n & 1) != 0 ? F4::one() : F4::zero();
    }

    std::string str() const {
        std::string s = n.str();
        if (e > 0)
            s += "/2^" + std::to_string(e);
        else if (e < 0)
            s += "*2^" + std::to_string(-e);
        return s;
    }
};

}  // namespace mstab

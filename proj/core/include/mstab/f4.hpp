#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <stdexcept>

namespace mstab {

/* The field with four elements, F2[w]/(w^2+w+1).
 * Encoding: bit 0 is the 1-component, bit 1 is the w-component,
 * so 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 = 1+w.  Addition is xor. */
struct F4 {
    uint8_t v = 0;

    constexpr F4() = default;
    constexpr explicit F4(uint8_t bits) : v(bits) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 w() { return F4(2); }
    static constexpr F4 w2() { return F4(3); }

    constexpr bool is_zero() const { return v == 0; }

    friend constexpr F4 operator+(F4 x, F4 y) { return F4(uint8_t(x.v ^ y.v)); }
    friend constexpr F4 operator-(F4 x, F4 y) { return x + y; }
    F4& operator+=(F4 y) { v ^= y.v; return *this; }

    friend constexpr F4 operator*(F4 x, F4 y) {
        constexpr uint8_t mul[16] = {0, 0, 0, 0,
                                     0, 1, 2, 3,
                                     0, 2, 3, 1,
                                     0, 3, 1, 2};
        return F4(mul[x.v * 4 + y.v]);
    }
    F4& operator*=(F4 y) { *this = *this * y; return *this; }

    /* nonzero elements are cube roots of unity, so x^-1 = x^2 */
    constexpr F4 inv() const {
        if (v == 0)
            throw std::domain_error("F4: inverse of zero");
        return *this * *this;
    }

    /* Frobenius x -> x^2; the nontrivial automorphism, fixing F2 */
    constexpr F4 frob() const { return *this * *this; }

    constexpr F4 pow(unsigned long long e) const {
        if (v == 0)
            return e == 0 ? one() : zero();
        F4 r = one(), b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend constexpr bool operator==(F4 x, F4 y) { return x.v == y.v; }
    friend constexpr bool operator!=(F4 x, F4 y) { return x.v != y.v; }
    friend constexpr bool operator<(F4 x, F4 y) { return x.v < y.v; }

    std::string str() const {
        static const char* names[4] = {"0", "1", "w", "w2"};
        return names[v & 3];
    }

    static F4 parse(std::string_view s) {
        if (s == "0") return zero();
        if (s == "1") return one();
        if (s == "w") return w();
        if (s == "w2") return w2();
        throw std::invalid_argument("F4: cannot parse '" + std::string(s) + "'");
    }
};

}  // namespace mstab

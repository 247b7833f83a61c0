#pragma once

#include <random>
#include <vector>

#include "mstab/witt.hpp"

namespace mstab {

/* Element a + bT of O2 = W(F4)<T>/(T^2 - 2, Tw - w^sigma T).
 * Multiplication is (a+bT)(c+dT) = (ac + 2 b sigma(d)) + (ad + b sigma(c))T,
 * forced by the two relations.  The unit group is the (small) height-2
 * Morava stabilizer group, truncated at precision 2^k. */
struct O2 {
    Witt a;
    Witt b;

    O2() = default;
    O2(Witt a_, Witt b_) : a(std::move(a_)), b(std::move(b_)) { a.check(b); }

    static O2 one(unsigned k) { return O2(Witt::scalar(1, k), Witt::scalar(0, k)); }
    static O2 scalar(const Witt& w) { return O2(w, Witt::scalar(0, w.k)); }
    static O2 T(unsigned k) { return O2(Witt::scalar(0, k), Witt::scalar(1, k)); }

    unsigned prec() const { return a.k; }

    friend O2 operator+(const O2& x, const O2& y) { return O2(x.a + y.a, x.b + y.b); }
    friend O2 operator-(const O2& x, const O2& y) { return O2(x.a - y.a, x.b - y.b); }
    O2 operator-() const { return O2(-a, -b); }

    friend O2 operator*(const O2& x, const O2& y) {
        x.a.check(y.a);
        Witt two = Witt::scalar(2, x.prec());
        return O2(x.a * y.a + two * (x.b * y.b.frob()), x.a * y.b + x.b * y.a.frob());
    }
    O2& operator*=(const O2& y) { *this = *this * y; return *this; }

    friend bool operator==(const O2& x, const O2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const O2& x, const O2& y) { return !(x == y); }

    bool is_unit() const { return a.is_unit(); }

    /* det(a + bT) = a a^sigma - 2 b b^sigma, a sigma-fixed element of W */
    Witt det() const {
        Witt two = Witt::scalar(2, prec());
        return a * a.frob() - two * (b * b.frob());
    }
    uint64_t det_scalar() const {
        Witt d = det();
        if (d.c1 != 0)
            throw std::runtime_error("O2::det: determinant not in Z/2^k");
        return d.c0;
    }

    /* gamma^-1 = conj(gamma) / det(gamma), with conj(a + bT) = sigma(a) - bT */
    O2 inv() const {
        if (!is_unit())
            throw std::domain_error("O2: inverse of non-unit");
        Witt dinv = det().inv();
        return O2(a.frob() * dinv, -(b * dinv));
    }

    O2 pow(long e) const {
        O2 base = e < 0 ? inv() : *this;
        unsigned long m = e < 0 ? -(unsigned long)e : (unsigned long)e;
        O2 r = one(prec());
        while (m) {
            if (m & 1)
                r *= base;
            base = base * base;
            m >>= 1;
        }
        return r;
    }

    O2 conj_by(const O2& u) const { return u * *this * u.inv(); }

    O2 truncated(unsigned knew) const { return O2(a.truncated(knew), b.truncated(knew)); }

    std::string str() const { return a.str() + " + " + b.str() + "T"; }
};

/* Largest n <= 2k with gamma = 1 mod T^n (2k is the "infinity" sentinel).
 * T^{2m} = 2^m W + ..., so the T-adic order reads off the 2-adic
 * valuations of a-1 and b.  The filtration index is n/2. */
inline int filtration_tval(const O2& g) {
    if (!g.is_unit())
        throw std::domain_error("filtration_tval: non-unit");
    unsigned k = g.prec();
    Witt am1 = g.a - Witt::scalar(1, k);
    unsigned va = am1.val2(), vb = g.b.val2();
    int n = std::min(2 * int(va), 2 * int(vb) + 1);
    return std::min(n, 2 * int(k));
}

/* Teichmuller digits of the T-adic expansion gamma = sum a_n T^n.
 * Each extracted digit costs one bit of precision; count digits
 * accordingly.  Returned as residues in F4. */
std::vector<F4> teich_digits(O2 g, int count);

/* t~_0, t~_1, t~_2 of gamma mod (2, u_1): the first three T-digits of
 * gamma^-1.  t0 is nonzero for any unit. */
struct Profile {
    F4 t0, t1, t2;
    friend bool operator==(const Profile& p, const Profile& q) {
        return p.t0 == q.t0 && p.t1 == q.t1 && p.t2 == q.t2;
    }
    std::string str() const { return "(" + t0.str() + "," + t1.str() + "," + t2.str() + ")"; }
};

Profile ttilde_profile(const O2& g);

/* t~_k(g1 g2) = sum_i t~_i(g1) t~_{k-i}(g2)^{2^i} for k = 0,1,2 */
bool product_tk_check(const O2& g1, const O2& g2);

/* The quaternion subgroup i, j, k = ij of the unit group, normalized so
 * that t~_1(i) = 1, t~_1(j) = w, t~_1(k) = w^2 and conjugation by the
 * Teichmuller w cycles i -> k -> j.  Found by Hensel-solving
 * gamma^2 + 1 = 0 along the t~_1 = 1 branch. */
struct QuatEmbedding {
    O2 i, j, k;
    O2 omega;     // Teichmuller lift of w, order 3
    O2 minus_one; // i^2
};

QuatEmbedding find_quaternion_embedding(unsigned k);

/* pi = 1 + 2w and alpha = 1 + yw for the Hensel root of y^2 - y + 2 = 0
 * with y = 2 mod 4.  Verified: det(alpha) = -1, det(pi) = 3,
 * alpha^-1 pi in F_{4/2}, profile(alpha) = (1, 0, w). */
struct AlphaPi {
    O2 alpha, pi;
};

AlphaPi construct_alpha_pi(unsigned k);

/* Deterministic sampling of norm-one elements (det = 1) with t~_0 = 1 and
 * filtration at least min_tval. */
O2 random_norm_one(std::mt19937_64& rng, unsigned k, int min_tval);

}  // namespace mstab

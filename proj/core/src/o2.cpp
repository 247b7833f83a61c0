#include "mstab/o2.hpp"

namespace mstab {

std::vector<F4> teich_digits(O2 g, int count) {
    std::vector<F4> out;
    for (int n = 0; n < count; ++n) {
        if (g.prec() < 2)
            throw std::domain_error("teich_digits: precision exhausted, raise k");
        unsigned k = g.prec();
        F4 d = g.a.residue();
        out.push_back(d);
        Witt c = g.a - teichmuller_lift(d, k);
        /* (c + bT) = T * (sigma(b) + sigma(c/2)T); divide on the left and
         * drop one bit so both coordinates share a precision */
        g = O2(g.b.frob().truncated(k - 1), c.halve().frob());
    }
    return out;
}

Profile ttilde_profile(const O2& g) {
    if (!g.is_unit())
        throw std::domain_error("ttilde_profile: non-unit");
    if (g.prec() < 4)
        throw std::domain_error("ttilde_profile: needs precision k >= 4");
    std::vector<F4> d = teich_digits(g.inv(), 3);
    return Profile{d[0], d[1], d[2]};
}

bool product_tk_check(const O2& g1, const O2& g2) {
    Profile p1 = ttilde_profile(g1);
    Profile p2 = ttilde_profile(g2);
    Profile p12 = ttilde_profile(g1 * g2);
    F4 a1[3] = {p1.t0, p1.t1, p1.t2};
    F4 a2[3] = {p2.t0, p2.t1, p2.t2};
    F4 a12[3] = {p12.t0, p12.t1, p12.t2};
    for (int k = 0; k <= 2; ++k) {
        F4 rhs = F4::zero();
        for (int i = 0; i <= k; ++i)
            rhs += a1[i] * a2[k - i].pow(1ull << i);
        if (a12[k] != rhs)
            return false;
    }
    return true;
}

QuatEmbedding find_quaternion_embedding(unsigned k) {
    if (k < 4)
        throw std::invalid_argument("find_quaternion_embedding: needs k >= 4");
    uint64_t mask = detail::mask_bits(k);
    /* i = a0(1+2w) + bT with 3 a0 = 1: then i^2 = -1 reduces to
     * 2 N(b) = 3 a0^2 - 1, and ij = wiw^-1 needs N(b) = -3 a0^2 mod 2^{k-1} */
    uint64_t a0 = detail::inv_odd(3, k);
    uint64_t target = (0 - 3 * a0 * a0) & detail::mask_bits(k - 1);
    /* b = 1 + b1 w, N(b) = 1 - b1 + b1^2 = target, b1 even */
    uint64_t b1 = detail::quad_root_odd_deriv(uint64_t(-1), (1 - target) & mask, 0, k - 1);

    Witt a(a0, 2 * a0, k);
    Witt b(1, b1, k);
    Witt w = Witt::omega(k);
    O2 i(a, b);
    O2 j(a, w.frob() * b);  // = w i w^-1
    O2 omega = O2::scalar(w);
    O2 minus_one = O2::scalar(Witt::scalar(uint64_t(-1), k));
    O2 kk = i * j;

    auto fail = [](const char* what) {
        throw std::runtime_error(std::string("find_quaternion_embedding: ") + what +
                                 " (search exhaustion; this indicates a bug, Q8 embeds in S2)");
    };
    if (i * i != minus_one || j * j != minus_one || kk * kk != minus_one)
        fail("square relations failed");
    if (j * i != -kk)
        fail("anticommutation failed");
    if (j * i * j.inv() != i.inv())
        fail("jij^-1 = i^-1 failed");
    if (i.conj_by(omega) != j || j.conj_by(omega) != -kk || kk.conj_by(omega) != -i)
        fail("C3 rotation failed");
    Profile pi_ = ttilde_profile(i), pj = ttilde_profile(j), pk = ttilde_profile(kk);
    if (pi_.t0 != F4::one() || pi_.t1 != F4::one())
        fail("t~ normalization of i failed");
    if (pj.t0 != F4::one() || pj.t1 != F4::w())
        fail("t~ normalization of j failed");
    if (pk.t0 != F4::one() || pk.t1 != F4::w2())
        fail("t~ normalization of k failed");
    Profile pm = ttilde_profile(minus_one);
    if (!(pm == Profile{F4::one(), F4::zero(), F4::one()}))
        fail("profile of -1 is not (1,0,1)");
    return QuatEmbedding{i, j, kk, omega, minus_one};
}

AlphaPi construct_alpha_pi(unsigned k) {
    if (k < 4)
        throw std::invalid_argument("construct_alpha_pi: needs k >= 4");
    uint64_t mask = detail::mask_bits(k);
    O2 pi = O2::scalar(Witt(1, 2, k));

    auto build_alpha = [&](uint64_t y) { return O2::scalar(Witt(1, y, k)); };
    auto verify = [&](const O2& alpha) -> bool {
        if ((alpha.det_scalar() & mask) != (uint64_t(-1) & mask))
            return false;
        Profile pa = ttilde_profile(alpha);
        if (!(pa == Profile{F4::one(), F4::zero(), F4::w()}))
            return false;
        O2 res = alpha.inv() * pi;
        if (filtration_tval(res) < 4)
            return false;
        if (!(ttilde_profile(res) == Profile{F4::one(), F4::zero(), F4::zero()}))
            return false;
        return true;
    };

    /* even Hensel root of y^2 - y + 2; lands at y = 2 mod 4 */
    uint64_t y = detail::quad_root_odd_deriv(uint64_t(-1), 2, 0, k);
    O2 alpha = build_alpha(y);
    if (!verify(alpha)) {
        alpha = build_alpha((1 - y) & mask);  // the other root, just in case
        if (!verify(alpha))
            throw std::runtime_error("construct_alpha_pi: both Hensel branches failed verification");
    }
    if (pi.det_scalar() != 3)
        throw std::runtime_error("construct_alpha_pi: det(pi) != 3");
    return AlphaPi{alpha, pi};
}

O2 random_norm_one(std::mt19937_64& rng, unsigned k, int min_tval) {
    if (min_tval < 0 || min_tval > int(k))
        throw std::invalid_argument("random_norm_one: bad filtration request");
    uint64_t mask = detail::mask_bits(k);
    unsigned ha = (unsigned(min_tval) + 1) / 2, hb = unsigned(min_tval) / 2;
    if (ha == 0)
        ha = 1;  // keep a = 1 mod 2 so t~_0(gamma) = 1
    Witt a((1 + ((rng() & mask) << ha)) & mask, ((rng() & mask) << ha) & mask, k);
    Witt b(((rng() & mask) << hb) & mask, ((rng() & mask) << hb) & mask, k);
    O2 g(a, b);
    uint64_t d = g.det_scalar();
    /* rescale by c = 1 + c1 w with N(c) = d^-1, putting det at exactly 1 */
    uint64_t t = detail::inv_odd(d, k);
    uint64_t c1 = detail::quad_root_odd_deriv(uint64_t(-1), (1 - t) & mask, 0, k);
    O2 res = O2::scalar(Witt(1, c1, k)) * g;
    if (res.det_scalar() != 1)
        throw std::runtime_error("random_norm_one: normalization failed");
    return res;
}

}  // namespace mstab

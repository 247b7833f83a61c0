#include "mstab/fgl.hpp"

namespace mstab {

/* log(x) = sum_{4^i <= cap} x^{4^i} / 2^i, univariate over dyadic rationals */
static SeriesQ2 honda_log(int cap) {
    SeriesQ2 log(1, cap);
    long i = 0;
    for (long long d = 1; d <= cap; d *= 4, ++i)
        log.set(SMon::var(0, uint8_t(d)), Dyadic::half_pow(i));
    return log;
}

/* compositional inverse of log, solved degree by degree */
static SeriesQ2 honda_exp(const SeriesQ2& log, int cap) {
    SeriesQ2 exp = SeriesQ2::var(0, 1, cap);
    for (int d = 2; d <= cap; ++d) {
        Dyadic c = log.compose({exp}).coeff1(d);
        if (!c.is_zero())
            exp.add(SMon::var(0, uint8_t(d)), -c);
    }
    SeriesQ2 check = log.compose({exp});
    if (check != SeriesQ2::var(0, 1, cap))
        throw FglError("honda_exp: inversion failed");
    return exp;
}

SeriesQ2 honda_gamma2_lift(int D) {
    if (D < 4)
        throw std::invalid_argument("honda_gamma2: degree cap must be at least 4");
    SeriesQ2 log = honda_log(D);
    SeriesQ2 exp = honda_exp(log, D);
    /* log(x) + log(y) as a bivariate series, then exp of it */
    SeriesQ2 s(2, D);
    for (const auto& [m, c] : log.terms()) {
        s.add(SMon::var(0, m.e[0]), c);
        s.add(SMon::var(1, m.e[0]), c);
    }
    return exp.compose({s});
}

static SeriesF4 reduce_mod2(const SeriesQ2& s) {
    SeriesF4 r(s.nvars(), s.cap());
    for (const auto& [m, c] : s.terms()) {
        if (!c.is_integral())
            throw FglError("honda_gamma2: non-integral coefficient " + c.str() +
                           " in the lifted law");
        r.add(m, c.mod2());
    }
    return r;
}

/* formal inverse: solve F(x, iota(x)) = 0 degree by degree */
static SeriesF4 formal_inverse(const SeriesF4& law, int D) {
    SeriesF4 x = SeriesF4::var(0, 1, D);
    SeriesF4 iota = x;  // char 2: -x = x to first order
    for (int d = 2; d <= D; ++d) {
        SeriesF4 r = law.compose({x, iota});
        F4 c = r.coeff1(d);
        if (!c.is_zero())
            iota.add(SMon::var(0, uint8_t(d)), c);
    }
    return iota;
}

Fgl honda_gamma2(int D) {
    Fgl F;
    F.D = D;
    F.law = reduce_mod2(honda_gamma2_lift(D));
    F.inverse_series = formal_inverse(F.law, D);
    if (!F.law.compose({SeriesF4::var(0, 1, D), F.inverse_series}).is_zero())
        throw FglError("honda_gamma2: formal inverse verification failed");
    return F;
}

SeriesF4 Fgl::sum(const SeriesF4& s, const SeriesF4& t) const {
    if (!s.constant_term().is_zero() || !t.constant_term().is_zero())
        throw FglError("Fgl::sum: arguments must have zero constant term");
    return law.compose({s, t});
}

SeriesF4 n_series(const Fgl& F, long n) {
    int D = F.D;
    SeriesF4 x = SeriesF4::var(0, 1, D);
    if (n == 0)
        return SeriesF4(1, D);
    bool neg = n < 0;
    unsigned long m = neg ? -(unsigned long)n : (unsigned long)n;
    SeriesF4 acc(1, D);
    for (unsigned long i = 0; i < m; ++i)
        acc = acc.is_zero() ? x : F.sum(acc, x);
    if (neg)
        acc = F.inverse_series.compose({acc});
    return acc;
}

SeriesF4 formal_sum(const Fgl& F, const std::vector<SeriesF4>& terms) {
    SeriesF4 acc(1, F.D);
    for (const auto& t : terms) {
        if (!t.constant_term().is_zero())
            throw FglError("formal_sum: term with nonzero constant coefficient");
        acc = acc.is_zero() ? t : F.sum(acc, t);
    }
    return acc;
}

std::vector<F4> peel_endomorphism(const Fgl& F, const SeriesF4& f) {
    if (!f.constant_term().is_zero())
        throw FglError("peel_endomorphism: f(0) != 0");
    int D = F.D;
    std::vector<F4> out;
    SeriesF4 rest = f.truncated(D);
    for (int d = 1; d <= D; ++d) {
        F4 c = rest.coeff1(d);
        bool pow2 = (d & (d - 1)) == 0;
        if (!pow2) {
            if (!c.is_zero())
                throw FglError("peel_endomorphism: residual coefficient at non-2-power degree " +
                               std::to_string(d));
            continue;
        }
        int slot = 0;
        for (int t = d; t > 1; t >>= 1)
            ++slot;
        while (int(out.size()) < slot)
            out.push_back(F4::zero());
        out.push_back(c);
        if (!c.is_zero()) {
            /* subtract c*x^d formally: rest = F(rest, iota(c x^d)) */
            SeriesF4 mono(1, D);
            mono.set(SMon::var(0, uint8_t(d)), c);
            rest = F.sum(rest, F.inverse_series.compose({mono}));
        }
    }
    if (!rest.is_zero())
        throw FglError("peel_endomorphism: nonzero residual after peeling all 2-power slots");
    return out;
}

std::optional<std::string> check_fgl_axioms(const Fgl& F, int cap) {
    int D = std::min(cap, F.D);
    SeriesF4 law = F.law.truncated(D);
    SeriesF4 x1 = SeriesF4::var(0, 1, D);
    SeriesF4 zero1(1, D);
    if (law.compose({x1, zero1}) != x1)
        return "unit: F(x,0) != x";
    {
        SeriesF4 x = SeriesF4::var(0, 2, D), y = SeriesF4::var(1, 2, D);
        if (law.compose({y, x}) != law)
            return "commutativity: F(x,y) != F(y,x)";
    }
    {
        SeriesF4 x = SeriesF4::var(0, 3, D), y = SeriesF4::var(1, 3, D),
                 z = SeriesF4::var(2, 3, D);
        SeriesF4 xy = law.compose({x, y});
        SeriesF4 yz = law.compose({y, z});
        if (law.compose({xy, z}) != law.compose({x, yz}))
            return "associativity: F(F(x,y),z) != F(x,F(y,z))";
    }
    return std::nullopt;
}

}  // namespace mstab

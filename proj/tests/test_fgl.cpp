#include <doctest.h>

#include <random>

#include "mstab/fgl.hpp"

using namespace mstab;

TEST_SUITE_BEGIN("fgl");

static SeriesF4 mono(int deg, F4 c, int D) {
    SeriesF4 s(1, D);
    s.set(SMon::var(0, uint8_t(deg)), c);
    return s;
}

TEST_CASE("law to degree 4 equals the hand expansion") {
    /* with log = x + x^4/2, exp = t - t^4/2, one gets
     * F = x + y - 2x^3y - 3x^2y^2 - 2xy^3 + O(5) = x + y + x^2y^2 mod 2 */
    Fgl F = honda_gamma2(16);
    SeriesF4 expect(2, 4);
    expect.set(SMon::var(0, 1), F4::one());
    expect.set(SMon::var(1, 1), F4::one());
    SMon x2y2;
    x2y2.e = {2, 2, 0};
    expect.set(x2y2, F4::one());
    CHECK(F.law.truncated(4) == expect);
}

TEST_CASE("integral lift has 2-integral coefficients") {
    SeriesQ2 lift = honda_gamma2_lift(16);
    for (const auto& [m, c] : lift.terms())
        CHECK(c.is_integral());
}

TEST_CASE("unit axiom and the 2-series") {
    Fgl F = honda_gamma2(16);
    SeriesF4 x = SeriesF4::var(0, 1, 16);
    CHECK(F.law.compose({x, SeriesF4(1, 16)}) == x);  // F(x, 0) = x
    CHECK(n_series(F, 1) == x);
    CHECK(n_series(F, 2) == mono(4, F4::one(), 16));
    CHECK(n_series(F, 0).is_zero());
}

TEST_CASE("formal inverse is the 4-power formal sum") {
    Fgl F = honda_gamma2(16);
    std::vector<SeriesF4> powers;
    for (int d = 1; d <= 16; d *= 4)
        powers.push_back(mono(d, F4::one(), 16));
    SeriesF4 minus1 = n_series(F, -1);
    CHECK(minus1 == formal_sum(F, powers));
    CHECK(minus1 == F.inverse_series);
    /* inverse axiom via formal_sum */
    SeriesF4 x = SeriesF4::var(0, 1, 16);
    CHECK(formal_sum(F, {x, minus1}).is_zero());
    CHECK(formal_sum(F, {x}) == x);
    CHECK(formal_sum(F, {}).is_zero());
    /* the two-fold sum is the 2-series */
    CHECK(formal_sum(F, {x, x}) == mono(4, F4::one(), 16));
}

TEST_CASE("fgl axioms hold to degree 12") {
    Fgl F = honda_gamma2(16);
    CHECK(!check_fgl_axioms(F, 12).has_value());
}

TEST_CASE("n_series is additive") {
    Fgl F = honda_gamma2(16);
    for (long m = -4; m <= 4; ++m)
        for (long n = -4; n <= 4; ++n) {
            SeriesF4 lhs = n_series(F, m + n);
            SeriesF4 rhs = formal_sum(F, {n_series(F, m), n_series(F, n)});
            CHECK(lhs == rhs);
        }
}

TEST_CASE("peel_endomorphism examples") {
    Fgl F = honda_gamma2(16);
    SeriesF4 x = SeriesF4::var(0, 1, 16);
    CHECK(peel_endomorphism(F, x) == std::vector<F4>{F4::one(), F4::zero(), F4::zero(),
                                                     F4::zero(), F4::zero()});
    /* [-1] = sum^F x^{4^n}: slots alternate 1,0,1,0,1 indexed by 2^n */
    CHECK(peel_endomorphism(F, n_series(F, -1)) ==
          std::vector<F4>{F4::one(), F4::zero(), F4::one(), F4::zero(), F4::one()});
    CHECK(peel_endomorphism(F, mono(1, F4::w2(), 16)) ==
          std::vector<F4>{F4::w2(), F4::zero(), F4::zero(), F4::zero(), F4::zero()});
    /* a non-endomorphism leaves a residual at a non-2-power degree */
    CHECK_THROWS_AS((void)peel_endomorphism(F, mono(3, F4::one(), 16)), FglError);
    CHECK_THROWS_AS((void)formal_sum(F, {SeriesF4::one(1, 16)}), FglError);
}

TEST_CASE("peel is a left inverse of the formal sum of slots") {
    Fgl F = honda_gamma2(16);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<F4> coeffs;
        std::vector<SeriesF4> terms;
        for (int slot = 0; slot < 5; ++slot) {  // degrees 1,2,4,8,16
            F4 c = F4(uint8_t(rng() & 3));
            coeffs.push_back(c);
            if (!c.is_zero())
                terms.push_back(mono(1 << slot, c, 16));
        }
        if (coeffs[0].is_zero()) {
            coeffs[0] = F4::one();
            terms.insert(terms.begin(), mono(1, F4::one(), 16));
        }
        SeriesF4 f = formal_sum(F, terms);
        CHECK(peel_endomorphism(F, f) == coeffs);
    }
}

TEST_CASE("degree cap is enforced") {
    CHECK_THROWS(honda_gamma2(3));
    Fgl F = honda_gamma2(8);
    CHECK(n_series(F, 2) == mono(4, F4::one(), 8));
}

TEST_SUITE_END();

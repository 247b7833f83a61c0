#pragma once

#include <optional>
#include <vector>

#include "mstab/series.hpp"

namespace mstab {

struct FglError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A formal group law over F4, truncated at total degree <= D, together with
 * its formal inverse iota (F(x, iota(x)) = 0 up to degree D). */
struct Fgl {
    SeriesF4 law;            // in (x, y), 2 variables
    SeriesF4 inverse_series; // in x alone
    int D = 16;

    /* F(s, t) for univariate arguments with zero constant term */
    SeriesF4 sum(const SeriesF4& s, const SeriesF4& t) const;
};

/* The height-2 Honda law over F4 to degree D, built from the 2-typical
 * logarithm log(x) = sum_i x^{4^i} / 2^i over exact dyadic rationals.
 * Every coefficient of the lift is checked to be 2-integral before
 * reduction mod 2. */
Fgl honda_gamma2(int D);

/* the integral (dyadic) lift of the law, exposed for tests */
SeriesQ2 honda_gamma2_lift(int D);

/* [n]_F(x): [0] = 0, [1] = x, [m+n] = F([m],[n]), negatives via the
 * formal inverse. */
SeriesF4 n_series(const Fgl& F, long n);

/* left fold of F over the terms; empty list gives 0.  Terms must have
 * zero constant coefficient. */
SeriesF4 formal_sum(const Fgl& F, const std::vector<SeriesF4>& terms);

/* Greedy extraction of the coefficients (a_0, a_1, ...) with
 * f = sum^F a_n x^{2^n}: read the lowest unexplained 2-power slot,
 * formally subtract, repeat.  Throws FglError if a nonzero coefficient
 * remains at a non-2-power degree. */
std::vector<F4> peel_endomorphism(const Fgl& F, const SeriesF4& f);

/* coefficientwise check of unit, commutativity, associativity up to
 * total degree cap; returns the first violated axiom name, if any */
std::optional<std::string> check_fgl_axioms(const Fgl& F, int cap);

}  // namespace mstab
